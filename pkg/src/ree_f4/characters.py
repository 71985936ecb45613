"""Characteristic-zero Weyl characters, the truncation set Gamma, and the
filtration sections of the truncated induced module.

Characters are stored sparsely on dominant representatives; a weight's
multiplicity is looked up through its dominant representative.
"""
from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .lattice import (
    RANK, SIMPLE_NORMS, Weight, alpha0_pairing, dominance_leq, dominant_rep, dual_weight, f4,
    orbit_size, root_lattice_coords, weyl_orbit,
)

GAMMA_CUTOFF = 2 * (12 - 1)  # 2(h - 1); Gamma is the strict sub-level set


class NotDominant(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    mults: dict  # dominant tuple -> positive multiplicity
    dim: int = field(init=False)

    def __post_init__(self):
        clean = {tuple(k): v for k, v in self.mults.items() if v}
        object.__setattr__(self, "mults", clean)
        object.__setattr__(self, "dim", sum(m * orbit_size(k) for k, m in clean.items()))

    def multiplicity(self, lam) -> int:
        return self.mults.get(dominant_rep(lam), 0)

    def full(self) -> dict:
        """Orbit-expanded multiplicity function on all weights."""
        out = {}
        for k, m in self.mults.items():
            for w in weyl_orbit(k):
                out[tuple(w)] = m
        return out

    def dump(self) -> str:
        lines = [f"{Weight(*k)}\t{m}" for k, m in sorted(self.mults.items())]
        return "\n".join(lines)

    @classmethod
    def trivial(cls) -> "Character":
        return cls({(0, 0, 0, 0): 1})


def _require_dominant(nu):
    if not all(c >= 0 for c in nu):
        raise NotDominant(f"{tuple(nu)} is not dominant")


def dominant_weights_below(nu) -> list:
    """Dominant weights mu <= nu, ordered by depth height(nu - mu).

    Uses the fact that the dominant weights below nu are connected to nu by
    steps of positive roots through dominant weights.
    """
    nu = tuple(nu)
    roots = f4().positive_roots_weights
    depth = {nu: 0}
    frontier = [nu]
    seen = {nu}
    heights = {n: sum(n) for n in f4().positive_roots}
    root_height = [heights[root_lattice_coords(a)] for a in roots]
    while frontier:
        nxt = []
        for mu in frontier:
            for a, ha in zip(roots, root_height):
                x = (mu[0] - a[0], mu[1] - a[1], mu[2] - a[2], mu[3] - a[3])
                if x[0] < 0 or x[1] < 0 or x[2] < 0 or x[3] < 0 or x in seen:
                    continue
                seen.add(x)
                depth[x] = depth[mu] + ha
                nxt.append(x)
        frontier = nxt
    return sorted(depth, key=lambda k: (depth[k], k))


@lru_cache(maxsize=None)
def _freudenthal(nu: tuple) -> tuple:
    datum = f4()
    roots = [(tuple(a), n) for a, n in zip(datum.positive_roots_weights, datum.positive_roots)]
    # (x, alpha) = sum_i x_i n_i |alpha_i|^2 / 2 ; (alpha, alpha) = |alpha|^2
    root_data = []
    for a, n in roots:
        coef = tuple(n[i] * SIMPLE_NORMS[i] // 2 for i in range(RANK))
        root_data.append((a, coef, datum.root_norm(n)))
    form = datum.form
    nr = tuple(c + 1 for c in nu)
    top = form(nr, nr)
    order = dominant_weights_below(nu)
    known = set(order)
    mult = {nu: 1}
    for mu in order[1:]:
        total = 0
        for a, coef, aa in root_data:
            base = mu[0] * coef[0] + mu[1] * coef[1] + mu[2] * coef[2] + mu[3] * coef[3]
            k = 1
            while True:
                x = (mu[0] + k * a[0], mu[1] + k * a[1], mu[2] + k * a[2], mu[3] + k * a[3])
                d = dominant_rep(x)
                if d not in known:
                    break
                m = mult[d]
                if m:
                    total += m * (base + k * aa)
                k += 1
        mr = (mu[0] + 1, mu[1] + 1, mu[2] + 1, mu[3] + 1)
        den = top - form(mr, mr)
        q, rem = divmod(2 * total, den)
        assert rem == 0, (nu, mu)
        mult[mu] = q
    return tuple(sorted(mult.items()))


def weyl_character(nu) -> Character:
    """Weyl character of highest weight ``nu`` by Freudenthal's recursion."""
    _require_dominant(nu)
    return Character(dict(_freudenthal(tuple(nu))))


def weyl_dim(nu) -> int:
    """Weyl dimension formula, exact."""
    _require_dominant(nu)
    datum = f4()
    val = Fraction(1)
    for n in datum.positive_roots:
        vec = datum.coroot_pairings[n]
        num = sum((nu[i] + 1) * vec[i] for i in range(RANK))
        den = sum(vec)
        val *= Fraction(num, den)
    assert val.denominator == 1
    return int(val)


def tensor(a: Character, b: Character) -> Character:
    """Product of characters (pointwise convolution of weight multiplicities)."""
    if len(a.mults) == 1 and (0, 0, 0, 0) in a.mults:
        return Character({k: v * a.mults[(0, 0, 0, 0)] for k, v in b.mults.items()})
    fa, fb = a.full(), b.full()
    if len(fa) > len(fb):
        fa, fb = fb, fa
    out = defaultdict(int)
    for x, mx in fa.items():
        for y, my in fb.items():
            s = (x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3])
            if s[0] >= 0 and s[1] >= 0 and s[2] >= 0 and s[3] >= 0:
                out[s] += mx * my
    return Character(dict(out))


def weight_multiplicity(ch: Character, lam) -> int:
    return ch.multiplicity(lam)


@lru_cache(maxsize=1)
def _gamma() -> tuple:
    a0 = f4().alpha0_pairing
    members = []
    bound = GAMMA_CUTOFF - 1
    for c1 in range(bound // a0[0] + 1):
        for c2 in range(bound // a0[1] + 1):
            for c3 in range(bound // a0[2] + 1):
                for c4 in range(bound // a0[3] + 1):
                    w = (c1, c2, c3, c4)
                    if alpha0_pairing(w) < GAMMA_CUTOFF:
                        members.append(w)
    return tuple(Weight(*w) for w in dominance_sorted(members))


def dominance_sorted(weights) -> list:
    """Topological sort of the dominance order, ties broken lexicographically."""
    weights = sorted(set(tuple(w) for w in weights))
    coords = {w: root_lattice_coords(w) for w in weights}
    below = {w: [] for w in weights}  # w -> elements strictly above w
    indeg = {w: 0 for w in weights}
    for u in weights:
        cu = coords[u]
        for v in weights:
            if u == v:
                continue
            cv = coords[v]
            if all(x <= y for x, y in zip(cu, cv)):
                below[u].append(v)
                indeg[v] += 1
    heap = [w for w in weights if indeg[w] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        w = heapq.heappop(heap)
        out.append(w)
        for v in below[w]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    return out


def gamma_set() -> list:
    """Dominant nu with <nu, alpha0^vee> < 22, in a dominance-compatible order."""
    return list(_gamma())


def gamma_prime() -> list:
    return [w for w in _gamma() if any(w)]


@dataclass(frozen=True)
class SectionLabel:
    lam: Weight
    twist_level: int
    dimension: int


def filtration_sections(r: int) -> list:
    """One section H0(lam) (x) H0(lam*)^[sigma] per lam in Gamma."""
    if r < 1 or r % 2 == 0:
        raise ValueError(f"r must be a positive odd integer, got {r}")
    out = []
    for lam in gamma_set():
        star = dual_weight(lam)
        out.append(SectionLabel(lam, r, weyl_dim(lam) * weyl_dim(star)))
    return out


def product_multiplicity(lam, mu, nu, exact_pairing: int = 12):
    """Multiplicity of ``lam`` in ch H0(mu) ch H0(nu).

    Every weight of the product is <= mu + nu, and every dominant weight
    <= mu + nu occurs (it is a weight of H0(mu + nu)), so zero is decided by
    dominance.  A positive value is evaluated by convolution when both
    characters are small enough, otherwise ``None`` (meaning: positive).
    """
    lam = dominant_rep(lam)
    top = tuple(a + b for a, b in zip(mu, nu))
    if not dominance_leq(lam, top):
        return 0
    if max(alpha0_pairing(mu), alpha0_pairing(nu)) > exact_pairing:
        return None
    small, big = sorted((tuple(mu), tuple(nu)), key=weyl_dim)
    big_ch = weyl_character(big)
    total = 0
    for x, m in weyl_character(small).full().items():
        total += m * big_ch.multiplicity(tuple(a - b for a, b in zip(lam, x)))
    return total
