import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ree_f4.characters import (
    Character, GAMMA_CUTOFF, NotDominant, dominant_weights_below, filtration_sections,
    gamma_prime, gamma_set, product_multiplicity, tensor, weight_multiplicity,
    weyl_character, weyl_dim,
)
from ree_f4.lattice import Weight, alpha0_pairing, dominance_leq, omega, simple_root, weyl_orbit

import oracles

W0 = Weight.zero()
GAMMA_SIZE = 445  # brute-force count over [0, 21]^4, frozen
SMALL = [Weight(*c) for c in itertools.product(range(3), repeat=4)
         if 2 * c[0] + 4 * c[1] + 3 * c[2] + 2 * c[3] <= 6]
small_dominant = st.sampled_from(SMALL)


def test_trivial_character():
    c = weyl_character(W0)
    assert c.mults == {(0, 0, 0, 0): 1} and c.dim == 1


@pytest.mark.parametrize("nu, dim, zero_mult", [
    (omega(4), 26, 2),
    (omega(1), 52, 4),
    (omega(3), 273, 9),
])
def test_weyl_character_examples(nu, dim, zero_mult):
    c = weyl_character(nu)
    assert c.dim == weyl_dim(nu) == dim
    assert weight_multiplicity(c, W0) == zero_mult == oracles.kostant_multiplicity(nu, W0)


def test_small_characters_decompose_by_orbits():
    # 26 = 24 short roots + 2 * zero weight; 52 = 48 roots + 4 * zero weight
    assert weyl_character(omega(4)).mults == {(0, 0, 0, 1): 1, (0, 0, 0, 0): 2}
    assert weyl_character(omega(1)).mults == {(1, 0, 0, 0): 1, (0, 0, 0, 1): 1, (0, 0, 0, 0): 4}


@pytest.mark.parametrize("nu", [omega(3), omega(2), Weight(0, 0, 0, 2), Weight(1, 0, 0, 1),
                                Weight(0, 0, 1, 1)])
def test_freudenthal_matches_kostant(nu):
    c = weyl_character(nu)
    for mu in dominant_weights_below(nu):
        assert c.multiplicity(mu) == oracles.kostant_multiplicity(nu, mu), mu


@pytest.mark.parametrize("nu, dim", [(W0, 1), (omega(4), 26), (omega(1), 52), (omega(3), 273),
                                     (omega(2), 1274), (Weight(1, 1, 1, 1), 2 ** 24)])
def test_weyl_dim(nu, dim):
    assert weyl_dim(nu) == dim


def test_non_dominant_rejected():
    with pytest.raises(NotDominant):
        weyl_character(Weight(1, -1, 0, 0))
    with pytest.raises(NotDominant):
        weyl_dim(Weight(0, 0, 0, -1))


@settings(max_examples=25, deadline=None)
@given(small_dominant)
def test_character_is_weyl_invariant(nu):
    full = weyl_character(nu).full()
    for x, m in list(full.items())[::7]:
        for y in weyl_orbit(x):
            assert full[tuple(y)] == m


def test_tensor_examples():
    a = weyl_character(omega(4))
    assert tensor(a, Character.trivial()).mults == a.mults
    assert tensor(Character.trivial(), a).mults == a.mults
    sq = tensor(a, a)
    assert sq.dim == 676
    assert weight_multiplicity(sq, omega(4) + omega(4)) == 1
    assert weight_multiplicity(sq, omega(4) + omega(4) + simple_root(4)) == 0


def test_tensor_matches_brute_convolution():
    a, b = weyl_character(omega(4)), weyl_character(omega(1))
    brute = oracles.convolve_full(a.full(), b.full())
    got = tensor(a, b)
    for x, m in brute.items():
        assert got.multiplicity(x) == m


@settings(max_examples=10, deadline=None)
@given(small_dominant, small_dominant)
def test_tensor_commutative_and_dim_multiplicative(x, y):
    if weyl_dim(x) * weyl_dim(y) > 5000:
        return
    a, b = weyl_character(x), weyl_character(y)
    ab, ba = tensor(a, b), tensor(b, a)
    assert ab.mults == ba.mults
    assert ab.dim == a.dim * b.dim


def test_tensor_associative_sample():
    a, b, c = (weyl_character(w) for w in (omega(4), omega(4), omega(1)))
    assert tensor(tensor(a, b), c).mults == tensor(a, tensor(b, c)).mults


def test_gamma_matches_brute_box():
    brute = {c for c in itertools.product(range(22), repeat=4)
             if 2 * c[0] + 4 * c[1] + 3 * c[2] + 2 * c[3] < 22}
    gamma = gamma_set()
    assert {tuple(w) for w in gamma} == brute
    assert len(gamma) == len(brute) == GAMMA_SIZE
    assert len(gamma_prime()) == GAMMA_SIZE - 1


def test_gamma_examples():
    gamma = gamma_set()
    assert gamma[0] == W0
    assert alpha0_pairing(11 * omega(4)) == 22 == GAMMA_CUTOFF
    assert 11 * omega(4) not in gamma
    assert 10 * omega(4) + omega(3) not in gamma
    assert 7 * omega(3) in gamma


def test_gamma_order_is_dominance_compatible():
    gamma = gamma_set()
    coords = [oracles.root_coords(w) for w in gamma]
    for i, j in itertools.combinations(range(len(gamma)), 2):
        # i precedes j, so j must never lie strictly below i
        assert not all(x <= y for x, y in zip(coords[j], coords[i]))


def test_gamma_is_down_set():
    gamma = set(gamma_set())
    for nu in gamma:
        for mu in dominant_weights_below(nu):
            assert Weight(*mu) in gamma


def test_gamma_order_deterministic():
    assert gamma_set() == gamma_set()


def test_filtration_sections():
    secs = filtration_sections(19)
    assert len(secs) == GAMMA_SIZE
    assert secs[0].lam == W0 and secs[0].dimension == 1
    assert all(alpha0_pairing(s.lam) < 22 and s.twist_level == 19 for s in secs)
    assert secs[1].dimension == weyl_dim(secs[1].lam) ** 2
    with pytest.raises(ValueError):
        filtration_sections(4)


def test_dominant_weights_below_agrees_with_dominance_scan():
    nu = Weight(2, 0, 1, 1)
    got = set(dominant_weights_below(nu))
    scan = {c for c in itertools.product(range(6), repeat=4) if dominance_leq(c, nu)}
    assert got == scan


def test_product_multiplicity_against_convolution():
    rng = random.Random(7)
    pool = [W0, omega(4), omega(1), omega(3), Weight(0, 0, 0, 2)]
    for _ in range(40):
        mu, nu = rng.choice(pool), rng.choice(pool)
        lam = Weight(*(rng.randint(0, 2) for _ in range(4)))
        brute = oracles.convolve_full(weyl_character(mu).full(), weyl_character(nu).full())
        assert product_multiplicity(lam, mu, nu) == brute.get(tuple(lam), 0)


def test_product_multiplicity_large_is_positive_or_zero():
    big = Weight(31, 31, 0, 0)
    assert product_multiplicity(big + omega(1), big, omega(4)) == 0
    assert product_multiplicity(big, big, omega(4)) is None


def test_character_dump_format():
    text = weyl_character(omega(4)).dump()
    assert text == "0,0,0,0\t2\n0,0,0,1\t1"
