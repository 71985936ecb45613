"""The special isogeny on the weight lattice and the tau-adic digit calculus.

Levels are encoded by a single positive integer ``r``: an odd ``r = 2s + 1``
is the Ree level sigma = tau o F^s, an even ``r = 2t`` is the classical
Frobenius kernel G_t.  ``X_{r/2}`` is the corresponding set of restricted
weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .lattice import LONG, RANK, SHORT, Weight, alpha0_pairing, omega


class NotRestricted(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Isogeny:
    """Linear endomorphism of X; ``matrix[i]`` is the image of omega_{i+1}."""

    matrix: tuple

    def __call__(self, lam) -> Weight:
        m = self.matrix
        return Weight(*(sum(lam[i] * m[i][j] for i in range(RANK)) for j in range(RANK)))

    def squared(self) -> tuple:
        m = self.matrix
        return tuple(
            tuple(sum(m[i][k] * m[k][j] for k in range(RANK)) for j in range(RANK))
            for i in range(RANK)
        )

    def halve_image(self, lam) -> Weight:
        """(tau*)^{-1} lam = tau*(lam) / 2, which must be exact."""
        img = self(lam)
        if any(c % 2 for c in img):
            raise ValueError(f"{lam} is not in the image of the isogeny")
        return Weight(*(c // 2 for c in img))


# omega1 -> 2 omega4, omega2 -> 2 omega3, omega3 -> omega2, omega4 -> omega1
TAU = Isogeny((
    (0, 0, 0, 2),
    (0, 0, 2, 0),
    (0, 1, 0, 0),
    (1, 0, 0, 0),
))

# Opposite orientation of the diagram swap; only used as a negative control.
TAU_FLIPPED = Isogeny((
    (0, 0, 0, 1),
    (0, 0, 1, 0),
    (0, 2, 0, 0),
    (2, 0, 0, 0),
))


def tau_star(lam, isogeny: Isogeny = TAU) -> Weight:
    return isogeny(lam)


def _require_odd(r: int) -> int:
    if r < 1 or r % 2 == 0:
        raise ValueError(f"level r must be a positive odd integer, got {r}")
    return (r - 1) // 2


def sigma_star(r: int, lam, isogeny: Isogeny = TAU) -> Weight:
    """(tau*)^r lam = 2^s tau*(lam) for r = 2s + 1."""
    s = _require_odd(r)
    return (2 ** s) * isogeny(lam)


def restriction_bounds(r: int) -> tuple:
    """Strict upper bounds on each fundamental-weight coefficient of X_{r/2}."""
    if r < 1:
        raise ValueError(f"level must be positive, got {r}")
    if r % 2 == 0:
        b = 2 ** (r // 2)
        return (b, b, b, b)
    s = (r - 1) // 2
    bounds = [0] * RANK
    for i in LONG:
        bounds[i] = 2 ** s
    for i in SHORT:
        bounds[i] = 2 ** (s + 1)
    return tuple(bounds)


def is_restricted(r: int, lam) -> bool:
    bounds = restriction_bounds(r)
    return all(0 <= c < b for c, b in zip(lam, bounds))


def restricted_count(r: int) -> int:
    n = 1
    for b in restriction_bounds(r):
        n *= b
    return n


def enumerate_restricted(r: int, cap: int = 1 << 16) -> Iterator[Weight]:
    """Stream every weight of X_{r/2}.

    Refuses when the count (``restricted_count``, closed form) exceeds ``cap``.
    """
    n = restricted_count(r)
    if n > cap:
        raise EnumerationCapExceeded(
            f"|X_{{{r}/2}}| = {n} exceeds cap {cap}; use restricted_count for count-only mode")
    b = restriction_bounds(r)
    for a in range(b[0]):
        for c in range(b[1]):
            for d in range(b[2]):
                for e in range(b[3]):
                    yield Weight(a, c, d, e)


def is_half_restricted(d) -> bool:
    """Membership in X_{1/2}: 0/1 on the short fundamentals, 0 on the long ones."""
    return all(d[i] == 0 for i in LONG) and all(d[i] in (0, 1) for i in SHORT)


HALF_RESTRICTED = tuple(Weight(0, 0, a, b) for a in (0, 1) for b in (0, 1))


@dataclass(frozen=True)
class TauDigits:
    r: int
    digits: tuple

    def __post_init__(self):
        _require_odd(self.r)
        if len(self.digits) != self.r:
            raise ValueError(f"expected {self.r} digits, got {len(self.digits)}")
        for d in self.digits:
            if not is_half_restricted(d):
                raise ValueError(f"digit {tuple(d)} is not in X_1/2")
        object.__setattr__(self, "digits", tuple(Weight(*d) for d in self.digits))

    def __str__(self):
        return ";".join(str(d) for d in self.digits)

    @classmethod
    def parse(cls, text: str) -> "TauDigits":
        ds = tuple(Weight.parse(part) for part in text.strip().split(";"))
        return cls(len(ds), ds)


def digits(r: int, lam, isogeny: Isogeny = TAU) -> TauDigits:
    """The tau-adic expansion lam = sum_i (tau*)^i d_i with d_i in X_{1/2}."""
    _require_odd(r)
    if not is_restricted(r, lam):
        raise NotRestricted(f"{tuple(lam)} is not in X_{{{r}/2}}")
    out = []
    cur = Weight(*lam)
    for _ in range(r):
        d = Weight(0, 0, cur[2] % 2, cur[3] % 2)
        out.append(d)
        cur = isogeny.halve_image(cur - d)
    if any(cur):
        raise NotRestricted(f"{tuple(lam)} has a nonzero tail after {r} digits")
    return TauDigits(r, tuple(out))


def assemble(d: TauDigits | Sequence, isogeny: Isogeny = TAU) -> Weight:
    """Horner evaluation of sum_i (tau*)^i d_i."""
    if not isinstance(d, TauDigits):
        d = TauDigits(len(d), tuple(d))
    acc = Weight.zero()
    for digit in reversed(d.digits):
        acc = isogeny(acc) + digit
    return acc


def rotate(d: TauDigits, n: int) -> TauDigits:
    """Cyclic shift: output position i holds input position (i - n) mod r."""
    r = d.r
    return TauDigits(r, tuple(d.digits[(i - n) % r] for i in range(r)))


def tilde(r: int, lam, n: int, isogeny: Isogeny = TAU) -> Weight:
    return assemble(rotate(digits(r, lam, isogeny), n), isogeny)


def steinberg_split(r: int, t: int, lam) -> tuple:
    """lam = lam0 + 2^t lam1 with lam0 in X_t and lam1 in X_{r/2 - t}."""
    if not is_restricted(r, lam):
        raise NotRestricted(f"{tuple(lam)} is not in X_{{{r}/2}}")
    s = r // 2
    if not 1 <= t <= s:
        raise ValueError(f"t = {t} out of range [1, {s}]")
    q = 2 ** t
    lam0 = Weight(*(c % q for c in lam))
    lam1 = Weight(*(c // q for c in lam))
    return lam0, lam1


def isogeny_monotone_on_alpha0(isogeny: Isogeny = TAU) -> bool:
    """<tau* w, alpha0^vee> >= <w, alpha0^vee> on each fundamental weight."""
    return all(alpha0_pairing(isogeny(omega(i))) >= alpha0_pairing(omega(i))
               for i in range(1, RANK + 1))
