"""Exact integer model of the F4 root datum.

Weights are written in the fundamental-weight basis with Bourbaki labels:
alpha1, alpha2 long and alpha3, alpha4 short.  Everything here is integer
(or ``Fraction``) arithmetic; nothing is hard-coded beyond the Cartan matrix,
the roots and the Weyl group are produced by reflection closure.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

RANK = 4

# CARTAN[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in fundamental-weight coordinates.
CARTAN = (
    (2, -1, 0, 0),
    (-1, 2, -2, 0),
    (0, -1, 2, -1),
    (0, 0, -1, 2),
)

# Squared lengths of the simple roots (short roots normalised to 2).
SIMPLE_NORMS = (4, 4, 2, 2)
LONG = (0, 1)
SHORT = (2, 3)


class NotInRootLattice(ValueError):
    pass


class Weight(NamedTuple):
    """A point of the weight lattice in fundamental-weight coordinates."""

    c1: int
    c2: int
    c3: int
    c4: int

    def __add__(self, other):
        return Weight(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        return Weight(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return Weight(*(-a for a in self))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Weight(*(k * a for a in self))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def __str__(self):
        return ",".join(str(c) for c in self)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        parts = text.strip().split(",")
        if len(parts) != RANK:
            raise ValueError(f"weight needs {RANK} comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"malformed weight {text!r}") from None

    @classmethod
    def zero(cls) -> "Weight":
        return cls(0, 0, 0, 0)


def omega(i: int) -> Weight:
    """Fundamental weight omega_i, 1-based."""
    c = [0] * RANK
    c[i - 1] = 1
    return Weight(*c)


def simple_root(i: int) -> Weight:
    """Simple root alpha_i (1-based) as a weight."""
    return Weight(*CARTAN[i - 1])


def _solve_rational(matrix, rhs):
    """Solve x @ matrix = rhs over the rationals (row-vector convention)."""
    n = len(rhs)
    # transpose so we solve matrix^T x = rhs by Gauss-Jordan
    aug = [[Fraction(matrix[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


@lru_cache(maxsize=1)
def _cartan_inverse():
    rows = []
    for i in range(RANK):
        e = [0] * RANK
        e[i] = 1
        rows.append(tuple(_solve_rational(CARTAN, e)))
    return tuple(rows)


def root_lattice_coords(delta: Iterable[int]) -> tuple[int, ...]:
    """Coordinates of ``delta`` in the simple-root basis.

    Raises ``NotInRootLattice`` if they are not integral (never for F4, the
    Cartan matrix is unimodular).
    """
    inv = _cartan_inverse()
    delta = tuple(delta)
    coords = [sum(delta[j] * inv[j][i] for j in range(RANK)) for i in range(RANK)]
    if any(c.denominator != 1 for c in coords):
        raise NotInRootLattice(f"{delta} is not in the root lattice")
    return tuple(int(c) for c in coords)


def from_root_coords(n: Iterable[int]) -> Weight:
    n = tuple(n)
    return Weight(*(sum(n[i] * CARTAN[i][j] for i in range(RANK)) for j in range(RANK)))


def _reflect(c: tuple, i: int) -> tuple:
    k = c[i]
    if k == 0:
        return c
    row = CARTAN[i]
    return (c[0] - k * row[0], c[1] - k * row[1], c[2] - k * row[2], c[3] - k * row[3])


def _closure(start: tuple) -> set:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(RANK):
                d = _reflect(c, i)
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple
    positive_roots: tuple  # simple-root coordinates
    positive_roots_weights: tuple  # same roots in fundamental-weight coordinates
    coroot_pairings: dict  # simple-root coords of alpha -> (<omega_i, alpha^vee>)_i
    rho: Weight
    alpha0: Weight
    alpha0_pairing: tuple
    coxeter: int
    gram: tuple  # (omega_i, omega_j) for the form with short roots of norm 2

    def root_norm(self, n: tuple) -> int:
        """Squared length of the root with simple-root coordinates ``n``."""
        return sum(n[i] * n[j] * CARTAN[i][j] * SIMPLE_NORMS[j] // 2
                   for i in range(RANK) for j in range(RANK))

    def form(self, a, b) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(RANK) for j in range(RANK))


@lru_cache(maxsize=1)
def f4() -> RootDatum:
    """The F4 root datum, generated by reflection closure and memoized."""
    simple = [tuple(CARTAN[i]) for i in range(RANK)]
    roots_w = set()
    for a in simple:
        roots_w |= _closure(a)
    positive_w, positive_n = [], []
    for w in roots_w:
        n = root_lattice_coords(w)
        if all(x >= 0 for x in n):
            positive_w.append(Weight(*w))
            positive_n.append(n)
    order = sorted(range(len(positive_n)), key=lambda k: (sum(positive_n[k]), positive_n[k]))
    positive_n = tuple(positive_n[k] for k in order)
    positive_w = tuple(positive_w[k] for k in order)

    def norm(n):
        return sum(n[i] * n[j] * CARTAN[i][j] * SIMPLE_NORMS[j]
                   for i in range(RANK) for j in range(RANK)) // 2

    # alpha^vee = sum_i n_i (|alpha_i|^2 / |alpha|^2) alpha_i^vee
    pairings = {}
    for n in positive_n:
        nn = norm(n)
        vec = []
        for i in range(RANK):
            q = Fraction(n[i] * SIMPLE_NORMS[i], nn)
            assert q.denominator == 1
            vec.append(int(q))
        pairings[n] = tuple(vec)

    short = [n for n in positive_n if norm(n) == 2]
    alpha0_n = max(short, key=sum)
    alpha0 = from_root_coords(alpha0_n)

    inv = _cartan_inverse()
    # (omega_i, alpha_j) = delta_ij |alpha_j|^2 / 2, and omega_i = sum_k inv[i][k] alpha_k
    gram = tuple(
        tuple(int(inv[i][j] * SIMPLE_NORMS[j] / 2) for j in range(RANK))
        for i in range(RANK)
    )
    return RootDatum(
        cartan=CARTAN,
        positive_roots=positive_n,
        positive_roots_weights=positive_w,
        coroot_pairings=pairings,
        rho=Weight(1, 1, 1, 1),
        alpha0=alpha0,
        alpha0_pairing=pairings[alpha0_n],
        coxeter=len(positive_n) * 2 // RANK,
        gram=gram,
    )


def coroot_vector(label) -> tuple:
    """The vector (<omega_i, alpha^vee>)_i for a coroot label.

    Labels: ``"alpha0"`` (the highest coroot), an integer 1..4 for a simple
    coroot, or a tuple of simple-root coordinates of any root (negative
    roots allowed).
    """
    datum = f4()
    if label == "alpha0":
        return datum.alpha0_pairing
    if isinstance(label, int) and not isinstance(label, bool):
        if not 1 <= label <= RANK:
            raise ValueError(f"unknown coroot label {label!r}")
        e = [0] * RANK
        e[label - 1] = 1
        return tuple(e)
    if isinstance(label, tuple) and len(label) == RANK:
        if label in datum.coroot_pairings:
            return datum.coroot_pairings[label]
        neg = tuple(-x for x in label)
        if neg in datum.coroot_pairings:
            return tuple(-x for x in datum.coroot_pairings[neg])
    raise ValueError(f"unknown coroot label {label!r}")


def pairing(lam, label) -> int:
    """<lam, alpha^vee>."""
    vec = coroot_vector(label)
    return sum(a * b for a, b in zip(lam, vec))


def alpha0_pairing(lam) -> int:
    a = f4().alpha0_pairing
    return lam[0] * a[0] + lam[1] * a[1] + lam[2] * a[2] + lam[3] * a[3]


def dominance_leq(lam, mu) -> bool:
    """True iff mu - lam is a nonnegative integer combination of simple roots."""
    try:
        n = root_lattice_coords(m - l for l, m in zip(lam, mu))
    except NotInRootLattice:
        return False
    return all(x >= 0 for x in n)


def height(lam) -> int:
    """Sum of simple-root coordinates (defined on all of X for F4)."""
    return sum(root_lattice_coords(lam))


@lru_cache(maxsize=None)
def _dominant_with_parity(c: tuple) -> tuple:
    sign = 1
    while True:
        for i in range(RANK):
            if c[i] < 0:
                c = _reflect(c, i)
                sign = -sign
                break
        else:
            return c, sign


def dominant_rep(lam) -> tuple:
    """The unique dominant weight in the Weyl orbit of ``lam`` (as a plain tuple)."""
    return _dominant_with_parity(tuple(lam))[0]


def dominant_rep_with_sign(lam) -> tuple:
    """Dominant representative and the sign of a Weyl element reaching it."""
    return _dominant_with_parity(tuple(lam))


def weyl_orbit(lam) -> set:
    """Orbit of ``lam`` under the Weyl group, as a set of Weights."""
    return {Weight(*c) for c in _closure(tuple(lam))}


@lru_cache(maxsize=None)
def _orbit_size_for_support(support: tuple) -> int:
    return len(_closure(tuple(1 if s else 0 for s in support)))


def orbit_size(lam) -> int:
    """Size of the Weyl orbit of ``lam``; depends only on the zero pattern of its dominant rep."""
    d = dominant_rep(lam)
    return _orbit_size_for_support(tuple(c != 0 for c in d))


def weyl_group_order() -> int:
    """|W| recovered as the orbit size of a regular weight."""
    return len(_closure((1, 1, 1, 1)))


def dual_weight(lam) -> Weight:
    """lam* = -w0 lam, computed as the dominant representative of -lam."""
    return Weight(*dominant_rep(tuple(-c for c in lam)))


def reflect_affine(lam, root_n: tuple, m: int, p: int) -> Weight:
    """Dot action of s_{alpha, m p}: lam -> s_alpha(lam + rho) + m p alpha - rho."""
    datum = f4()
    vec = coroot_vector(root_n)
    alpha = from_root_coords(root_n)
    x = [a + b for a, b in zip(lam, datum.rho)]
    k = sum(a * b for a, b in zip(x, vec)) - m * p
    return Weight(*(x[i] - k * alpha[i] - datum.rho[i] for i in range(RANK)))


def alcove_representative(lam, p: int) -> Weight:
    """Representative of the dot-orbit of ``lam`` under W_p in the closed
    fundamental p-alcove: 0 <= <x + rho, alpha^vee> <= p for all alpha > 0.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    datum = f4()
    a0 = datum.alpha0_pairing
    alpha0 = datum.alpha0
    x = tuple(a + 1 for a in lam)  # shifted: x = lam + rho
    while True:
        x = dominant_rep(x)
        top = sum(a * b for a, b in zip(x, a0))
        if top <= p:
            return Weight(*(c - 1 for c in x))
        k = top - p
        x = tuple(x[i] - k * alpha0[i] for i in range(RANK))


def in_closed_alcove(lam, p: int) -> bool:
    x = [a + 1 for a in lam]
    return all(c >= 0 for c in x) and alpha0_pairing(x) <= p


def dominant_weights_box(bound: int):
    """All dominant weights with every coordinate in [0, bound]."""
    r = range(bound + 1)
    return (Weight(a, b, c, d) for a in r for b in r for c in r for d in r)
