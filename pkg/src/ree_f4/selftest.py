"""Startup invariant battery.

Each check returns ``(name, ok, detail)``; nothing here raises on a failed
check, so a corrupted input shows up as a red line rather than a crash.
"""
from __future__ import annotations

import itertools

from .characters import GAMMA_CUTOFF, weyl_character, weyl_dim
from .isogeny import (
    HALF_RESTRICTED, TAU, Isogeny, assemble, digits, enumerate_restricted,
    isogeny_monotone_on_alpha0,
)
from .lattice import RANK, Weight, dual_weight, f4, omega, pairing, weyl_group_order


def _tau_squared(isogeny):
    sq = isogeny.squared()
    ok = all(sq[i][j] == (2 if i == j else 0) for i in range(RANK) for j in range(RANK))
    return "tau_squared", ok, f"(tau*)^2 = {sq}"


def _rho_alpha0(_):
    datum = f4()
    v = pairing(datum.rho, "alpha0")
    h = datum.coxeter
    ok = v == 11 and h == 12 and 2 * h - 2 == GAMMA_CUTOFF == 22
    return "rho_alpha0", ok, f"<rho, alpha0^vee> = {v}, h = {h}, 2h - 2 = {2 * h - 2}"


def _roots(_):
    n = len(f4().positive_roots)
    return "root_count", n == 24, f"{n} positive roots, {2 * n} roots"


def _weyl_order(_):
    w = weyl_group_order()
    return "weyl_order", w == 1152, f"|W| = {w} by reflection closure"


def _dual_identity(_):
    samples = [omega(i) for i in range(1, RANK + 1)] + [Weight(1, 2, 3, 4), Weight(5, 0, 2, 7)]
    bad = [str(w) for w in samples if dual_weight(w) != w]
    return "dual_identity", not bad, "-w0 = id on samples" if not bad else f"lambda* != lambda for {bad}"


def _isogeny_shape(isogeny):
    dom = all(isogeny(omega(i)).is_dominant() for i in range(1, RANK + 1))
    mono = isogeny_monotone_on_alpha0(isogeny)
    return "isogeny_alpha0", dom and mono, f"dominant-preserving={dom}, alpha0-monotone={mono}"


def _digit_bijection(isogeny):
    for r in (1, 3):
        try:
            X = set(enumerate_restricted(r))
            images = {assemble(d, isogeny) for d in itertools.product(HALF_RESTRICTED, repeat=r)}
            if images != X or len(X) != 4 ** r:
                return "digit_bijection", False, f"r = {r}: assemble image != X_sigma"
            if any(assemble(digits(r, lam, isogeny), isogeny) != lam for lam in X):
                return "digit_bijection", False, f"r = {r}: digits/assemble round trip fails"
        except ValueError as exc:
            return "digit_bijection", False, f"r = {r}: {exc}"
    return "digit_bijection", True, "r in {1, 3}: bijection with |X_sigma| = 4^r"


def _dimensions(_):
    cases = {omega(4): 26, omega(1): 52, omega(3): 273, omega(2): 1274}
    for nu, expected in cases.items():
        d1, d2 = weyl_dim(nu), weyl_character(nu).dim
        if not d1 == d2 == expected:
            return "dimensions", False, f"nu = {nu}: formula {d1}, Freudenthal {d2}, expected {expected}"
    return "dimensions", True, "Weyl formula = Freudenthal sum on fundamentals (26, 52, 273, 1274)"


CHECKS = (_tau_squared, _rho_alpha0, _roots, _weyl_order, _dual_identity,
          _isogeny_shape, _digit_bijection, _dimensions)


def run_checks(isogeny: Isogeny = TAU) -> list:
    return [check(isogeny) for check in CHECKS]
