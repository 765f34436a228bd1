"""Blocks, transports, and the three-valued classifier."""

import pytest

from kostantpv.compositions import (
    Classification,
    Composition,
    G_mu,
    classify_general,
    is_thin_general,
    omega,
    positive_sufficient,
    right_cell_of_longest_quotient,
    similar,
    sorted_partition,
)
from kostantpv.cup_diagrams import MaxParContext, is_thin, shortest_reps
from kostantpv.klcells import same_right_cell
from kostantpv.minimal_parabolic import MinParContext, is_kostant_positive_minimal
from kostantpv.permutations import (
    Permutation,
    enumerate_shortest_reps,
    identity,
    is_shortest_coset_rep,
    longest_element,
    longest_element_parabolic,
    parse_permutation,
)


def test_composition_basics():
    mu = Composition((2, 1, 3, 2))
    assert mu.n == 8
    assert mu.blocks() == ((1, 2), (3,), (4, 5, 6), (7, 8))
    assert mu.simple_reflections() == frozenset({1, 4, 5, 7})
    assert mu.to_text() == '2,1,3,2'
    assert Composition.from_text('2,1,3,2') == mu
    with pytest.raises(ValueError):
        Composition((2, 0, 1))
    with pytest.raises(ValueError):
        Composition(())
    with pytest.raises(ValueError):
        Composition.from_text('2,,1')


def test_similarity():
    assert sorted_partition(Composition((2, 1, 3, 2))) == (3, 2, 2, 1)
    assert similar(Composition((2, 1, 3, 2)), Composition((3, 2, 2, 1)))
    assert not similar(Composition((2, 2)), Composition((3, 1)))


def test_G_mu_sizes():
    assert len(G_mu(Composition((1, 1, 1, 1, 1)))) == 120
    assert len(G_mu(Composition((2, 2, 1, 2)))) == 6
    assert len(G_mu(Composition((3, 2)))) == 1
    assert len(G_mu(Composition((2, 2)))) == 2


def test_G_mu_preserves_block_order():
    for g in G_mu(Composition((2, 1, 2))):
        assert g(1) + 1 == g(2)
        assert g(4) + 1 == g(5)


def test_omega_examples():
    mu, nu = Composition((2, 1, 3, 2)), Composition((3, 2, 2, 1))
    assert omega(mu, nu).window == (4, 5, 8, 1, 2, 3, 6, 7)
    assert omega(mu, mu).is_identity
    assert omega(Composition((2, 2)), Composition((2, 2))).is_identity
    with pytest.raises(ValueError):
        omega(Composition((2, 2)), Composition((3, 1)))


def test_omega_inverse():
    mu, nu = Composition((2, 1, 3, 2)), Composition((3, 2, 2, 1))
    assert omega(mu, nu) * omega(nu, mu) == identity(8)
    assert omega(nu, mu) == omega(mu, nu).inverse


def test_positive_sufficient_maximal_closed_form():
    for n, k in [(4, 1), (4, 3), (5, 2), (6, 4)]:
        mu = Composition((k, n - k))
        pos = {
            w
            for w in enumerate_shortest_reps(n, mu.simple_reflections())
            if positive_sufficient(mu, w)
        }
        assert pos == {identity(n), omega(Composition((n - k, k)), mu)}


def test_positive_sufficient_rejects_non_reps():
    mu = Composition((2, 2))
    with pytest.raises(ValueError):
        positive_sufficient(mu, parse_permutation('2134'))
    with pytest.raises(ValueError):
        is_thin_general(mu, parse_permutation('2134'))


def test_right_cell_of_longest_quotient():
    mu = Composition((2, 1))
    cell = right_cell_of_longest_quotient(mu)
    assert {str(u) for u in cell} == {'132', '312'}
    for n in range(2, 6):
        for parts in _compositions_of(n):
            m = Composition(parts)
            seed = (
                longest_element_parabolic(n, m.simple_reflections())
                * longest_element(n)
            )
            cell = right_cell_of_longest_quotient(m)
            assert seed in cell
            for u in cell:
                assert same_right_cell(u, seed)
                assert is_shortest_coset_rep(u, m.simple_reflections())


def _compositions_of(n):
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in _compositions_of(n - first):
            out.append((first,) + rest)
    return out


def test_thin_matches_cup_engine():
    for n in range(2, 6):
        for k in range(1, n):
            ctx = MaxParContext(n, k)
            mu = Composition((k, n - k))
            for w in shortest_reps(ctx):
                assert is_thin_general(mu, w) == is_thin(ctx, w)


def test_classifier_matches_minimal_engine():
    for n in range(3, 6):
        for k in range(1, n):
            mu = Composition((1,) * (k - 1) + (2,) + (1,) * (n - k - 1))
            ctx = MinParContext(n, k)
            for w in enumerate_shortest_reps(n, frozenset({k})):
                verdict = classify_general(mu, w).verdict
                assert verdict != 'Unknown'
                assert (verdict == 'Positive') == \
                    is_kostant_positive_minimal(ctx, w)


def test_classification_validation():
    Classification('Positive')
    with pytest.raises(ValueError):
        Classification('positive')
