"""Bigrassmannian elements, intervals, and socle descriptors."""

import pytest

from kostantpv.bigrassmannian import (
    SocleDescriptor,
    bigrassmannians,
    complement_bigrassmannians,
    interval,
    is_bigrassmannian,
    socle_descriptor,
)
from kostantpv.permutations import (
    bruhat_leq,
    enumerate_group,
    identity,
    longest_element,
    parse_permutation,
)


def test_is_bigrassmannian_examples():
    assert is_bigrassmannian(parse_permutation('1324'))
    assert is_bigrassmannian(parse_permutation('3412'))
    assert not is_bigrassmannian(parse_permutation('1234'))
    assert not is_bigrassmannian(parse_permutation('2143'))
    assert not is_bigrassmannian(longest_element(4))


def test_bigrassmannian_definition_exhaustive():
    for n in range(2, 6):
        for w in enumerate_group(n):
            brute = (
                len(w.right_descents()) == 1 and len(w.left_descents()) == 1
            )
            assert is_bigrassmannian(w) == brute
        listed = bigrassmannians(n)
        assert listed == tuple(
            w for w in enumerate_group(n) if is_bigrassmannian(w)
        )


def test_bigrassmannian_counts():
    # binomial(n+1, 3): one per choice of descent, value bound, position bound
    assert len(bigrassmannians(2)) == 1
    assert len(bigrassmannians(3)) == 4
    assert len(bigrassmannians(4)) == 10
    assert len(bigrassmannians(5)) == 20


def test_interval():
    xs = interval(identity(3), longest_element(3))
    assert set(xs) == set(enumerate_group(3))
    x, y = parse_permutation('1324'), parse_permutation('2134')
    with pytest.raises(ValueError):
        interval(x, y)
    assert set(interval(x, x)) == {x}


def test_complement_requires_comparability():
    u, w = parse_permutation('3412'), parse_permutation('1324')
    assert bruhat_leq(w, u)
    out = complement_bigrassmannians(u, w)
    for b in out:
        assert is_bigrassmannian(b)
        assert bruhat_leq(b, u) and not bruhat_leq(b, w)
    with pytest.raises(ValueError):
        complement_bigrassmannians(w, u)


def test_socle_descriptor_trivial_cases():
    for n in range(2, 6):
        assert len(socle_descriptor(identity(n))) == 0
        for b in bigrassmannians(n):
            assert set(socle_descriptor(b)) == {b}


def test_socle_descriptor_is_maximal_antichain():
    for n in range(2, 5):
        for w in enumerate_group(n):
            gens = list(socle_descriptor(w))
            below = [b for b in bigrassmannians(n) if bruhat_leq(b, w)]
            for g in gens:
                assert g in below
            for b in below:
                assert any(bruhat_leq(b, g) for g in gens)
            for g in gens:
                for h in gens:
                    if g != h:
                        assert not bruhat_leq(g, h)


def test_socle_descriptor_container():
    d = socle_descriptor(longest_element(3))
    assert isinstance(d, SocleDescriptor)
    assert len(d) == len(list(d))
