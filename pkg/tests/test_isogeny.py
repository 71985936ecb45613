import itertools

import pytest
from hypothesis import given, strategies as st

from ree_f4.isogeny import (
    HALF_RESTRICTED, TAU, TAU_FLIPPED, EnumerationCapExceeded, NotRestricted, TauDigits,
    assemble, digits, enumerate_restricted, is_half_restricted, is_restricted,
    isogeny_monotone_on_alpha0, restricted_count, rotate, sigma_star, steinberg_split,
    tau_star, tilde,
)
from ree_f4.lattice import Weight, alpha0_pairing, omega

import oracles

W0 = Weight.zero()
w4, w3, w1 = omega(4), omega(3), omega(1)
small = st.builds(Weight, *(st.integers(-20, 20) for _ in range(4)))


def restricted_in(r):
    return st.sampled_from(list(enumerate_restricted(r)))


def digits_of(r):
    return st.lists(st.sampled_from(HALF_RESTRICTED), min_size=r, max_size=r).map(
        lambda ds: TauDigits(r, tuple(ds)))


@given(small)
def test_tau_squared_is_two(lam):
    assert tau_star(tau_star(lam)) == 2 * lam


def test_tau_matrix_squares_to_two():
    assert TAU.squared() == tuple(tuple(2 if i == j else 0 for j in range(4)) for i in range(4))


@pytest.mark.parametrize("lam, image", [
    (w4, w1), (w3, omega(2)), (w1, 2 * w4), (omega(2), 2 * w3), (W0, W0),
])
def test_tau_star_on_basis(lam, image):
    assert tau_star(lam) == image


def test_tau_preserves_dominance_and_alpha0_monotone():
    for i in range(1, 5):
        assert tau_star(omega(i)).is_dominant()
    assert isogeny_monotone_on_alpha0()


@given(st.builds(Weight, *(st.integers(0, 30) for _ in range(4))))
def test_alpha0_monotone_on_dominant(lam):
    assert alpha0_pairing(tau_star(lam)) >= alpha0_pairing(lam)


@pytest.mark.parametrize("r, lam, image", [
    (1, Weight(1, 2, 3, 4), tau_star(Weight(1, 2, 3, 4))),
    (3, w4, 2 * w1),
    (7, W0, W0),
])
def test_sigma_star(r, lam, image):
    assert sigma_star(r, lam) == image


@given(st.integers(0, 6), small)
def test_sigma_star_is_tau_power(s, lam):
    r = 2 * s + 1
    x = lam
    for _ in range(r):
        x = tau_star(x)
    assert sigma_star(r, lam) == x == (2 ** s) * tau_star(lam)


@pytest.mark.parametrize("r, lam, expected", [
    (1, w3 + w4, True),
    (1, w1, False),
    (3, 3 * w4 + w1, True),
    (3, 4 * w4, False),
    (3, 2 * w1, False),
    (2, Weight(1, 1, 1, 1), True),
    (2, Weight(2, 0, 0, 0), False),
    (5, Weight(-1, 0, 0, 0), False),
])
def test_is_restricted(r, lam, expected):
    assert is_restricted(r, lam) is expected


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_enumerate_restricted_matches_brute_scan(r):
    got = [tuple(w) for w in enumerate_restricted(r)]
    assert sorted(got) == sorted(oracles.brute_restricted(r))
    assert len(got) == restricted_count(r)


def test_enumerate_restricted_examples():
    assert set(enumerate_restricted(1)) == {W0, w3, w4, w3 + w4}
    assert restricted_count(3) == 64
    assert restricted_count(2) == 16
    for r in (1, 3, 5, 7, 21):
        assert restricted_count(r) == 4 ** r


def test_enumerate_restricted_cap():
    with pytest.raises(EnumerationCapExceeded, match="count-only"):
        list(enumerate_restricted(21))
    assert restricted_count(21) == 4 ** 21


@pytest.mark.parametrize("r, lam, ds", [
    (3, W0, (W0, W0, W0)),
    (3, w1, (W0, w4, W0)),
    (3, 3 * w4, (w4, W0, w4)),
])
def test_digits_examples(r, lam, ds):
    assert digits(r, lam).digits == ds


@pytest.mark.parametrize("ds, lam", [
    ((W0, W0, W0), W0),
    ((w4, W0, w4), 3 * w4),
    ((w4, w4, W0), w4 + w1),
])
def test_assemble_examples(ds, lam):
    assert assemble(TauDigits(3, ds)) == lam


def test_digits_rejects_unrestricted():
    with pytest.raises(NotRestricted):
        digits(3, 4 * w4)


def test_assemble_rejects_malformed_digit():
    with pytest.raises(ValueError):
        assemble([w1, W0, W0])
    with pytest.raises(ValueError):
        TauDigits(3, (W0, W0))


@pytest.mark.parametrize("r", [1, 3, 5])
def test_digit_bijection_exhaustive(r):
    X = set(enumerate_restricted(r))
    seen = set()
    for ds in itertools.product(HALF_RESTRICTED, repeat=r):
        lam = assemble(ds)
        assert lam in X
        assert digits(r, lam).digits == ds
        seen.add(lam)
    assert seen == X and len(X) == 4 ** r
    for lam in X:
        assert assemble(digits(r, lam)) == lam


def test_flipped_orientation_breaks_bijection():
    images = {assemble(ds, TAU_FLIPPED) for ds in itertools.product(HALF_RESTRICTED, repeat=3)}
    assert images != set(enumerate_restricted(3))


def test_rotate_examples():
    d = TauDigits(3, (w4, W0, w4))
    assert rotate(d, 0) == d
    assert rotate(d, 1).digits == (w4, w4, W0)
    assert assemble(rotate(d, 1)) == w1 + w4


@given(st.data(), st.sampled_from([1, 3, 5, 21]), st.integers(-30, 30), st.integers(-30, 30))
def test_rotate_group_action(data, r, a, b):
    d = data.draw(digits_of(r))
    assert rotate(rotate(d, a), b) == rotate(d, (a + b) % r)
    assert rotate(d, r) == d


@pytest.mark.parametrize("r, lam, n, out", [
    (3, 3 * w4, 1, w1 + w4),
    (3, 3 * w4, 0, 3 * w4),
    (3, 3 * w4, 3, 3 * w4),
])
def test_tilde_examples(r, lam, n, out):
    assert tilde(r, lam, n) == out


@pytest.mark.parametrize("r", [3, 5])
def test_tilde_is_bijection(r):
    X = set(enumerate_restricted(r))
    for n in range(r):
        assert {tilde(r, lam, n) for lam in X} == X


@given(st.data(), st.integers(0, 40), st.integers(0, 40))
def test_tilde_composes(data, a, b):
    r = 21
    lam = Weight(*(data.draw(st.integers(0, bd - 1)) for bd in (1024, 1024, 2048, 2048)))
    assert tilde(r, tilde(r, lam, a), b) == tilde(r, lam, (a + b) % r)


@pytest.mark.parametrize("r, t, lam, parts", [
    (19, 5, W0, (W0, W0)),
    (3, 1, 3 * w4, (w4, w4)),
])
def test_steinberg_split_examples(r, t, lam, parts):
    assert steinberg_split(r, t, lam) == parts


@given(st.data(), st.sampled_from([3, 5, 19, 21]))
def test_steinberg_split_roundtrip(data, r):
    s = r // 2
    t = data.draw(st.integers(1, s))
    bounds = (2 ** s, 2 ** s, 2 ** (s + 1), 2 ** (s + 1))
    lam = Weight(*(data.draw(st.integers(0, b - 1)) for b in bounds))
    lam0, lam1 = steinberg_split(r, t, lam)
    assert lam0 + (2 ** t) * lam1 == lam
    assert is_restricted(2 * t, lam0)
    assert is_restricted(r - 2 * t, lam1)


def test_steinberg_split_errors():
    with pytest.raises(NotRestricted):
        steinberg_split(3, 1, 4 * w4)
    with pytest.raises(ValueError):
        steinberg_split(19, 10, W0)
    with pytest.raises(ValueError):
        steinberg_split(19, 0, W0)


def test_half_restricted_set():
    assert [d for d in HALF_RESTRICTED if is_half_restricted(d)] == list(HALF_RESTRICTED)
    assert set(HALF_RESTRICTED) == set(enumerate_restricted(1))


def test_digit_serialization_roundtrip():
    d = digits(3, 3 * w4)
    assert str(d) == "0,0,0,1;0,0,0,0;0,0,0,1"
    assert TauDigits.parse(str(d)) == d
