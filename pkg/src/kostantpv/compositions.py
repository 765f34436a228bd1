r"""
Parabolic types for arbitrary compositions: blocks, the block-permuting
groups G_mu, the transport elements omega, and the three-valued
classifier.

A composition mu of n cuts {1, ..., n} into consecutive blocks.  G_mu
permutes equal-size blocks while preserving the order inside each
block; omega_{mu,nu} is the canonical such transport between two
similar compositions (same multiset of parts), the one whose induced
map on block indices is order-preserving among blocks of equal size.

Sufficient positivity: w lies in G_mu omega_{nu,mu} for some nu
similar to mu.  Necessary negativity: the standard module at w is not
thin, where thinness asks for a unique composition factor, with
multiplicity one, indexed by the right cell of w_0^mu w_0.  The cases
that are thin but not covered by the sufficient condition are left
Unknown -- deliberately: they are open in general.

Composition text form: "2,1,3,2".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .klcells import kl_table, parabolic_verma_multiplicity, right_cell_key
from .permutations import (
    Permutation,
    _raw,
    enumerate_group,
    is_shortest_coset_rep,
    longest_element,
    longest_element_parabolic,
)

VERDICTS = ('Positive', 'Negative', 'Unknown')


@dataclass(frozen=True)
class Composition:
    """A sequence of positive parts; blocks are consecutive intervals.

    >>> Composition((2, 1, 3, 2)).blocks()
    ((1, 2), (3,), (4, 5, 6), (7, 8))
    >>> sorted(Composition((2, 1, 3, 2)).simple_reflections())
    [1, 4, 5, 7]
    """

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))
        if not self.parts or any(
            not isinstance(p, int) or p < 1 for p in self.parts
        ):
            raise ValueError(f'parts must be positive integers: {self.parts}')

    @classmethod
    def from_text(cls, text: str) -> 'Composition':
        try:
            return cls(tuple(int(p) for p in text.split(',')))
        except ValueError:
            raise ValueError(f'malformed composition text: {text!r}') from None

    def to_text(self) -> str:
        return ','.join(str(p) for p in self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def blocks(self) -> tuple:
        out = []
        start = 1
        for p in self.parts:
            out.append(tuple(range(start, start + p)))
            start += p
        return tuple(out)

    def simple_reflections(self) -> frozenset:
        """Generators of the Levi: all indices except block boundaries."""
        bounds = set(itertools.accumulate(self.parts[:-1]))
        return frozenset(range(1, self.n)) - bounds


def sorted_partition(mu: Composition) -> tuple:
    """Parts in weakly decreasing order."""
    return tuple(sorted(mu.parts, reverse=True))


def similar(mu: Composition, nu: Composition) -> bool:
    return sorted_partition(mu) == sorted_partition(nu)


def _block_transport(mu: Composition, nu: Composition, assignment) -> Permutation:
    """Permutation sending block i of mu onto block assignment[i] of nu,
    order-preserving inside each block."""
    nu_blocks = nu.blocks()
    window = [0] * mu.n
    for i, block in enumerate(mu.blocks()):
        target = nu_blocks[assignment[i]]
        for src, dst in zip(block, target):
            window[src - 1] = dst
    return _raw(tuple(window))


def G_mu(mu: Composition) -> frozenset:
    """All order-preserving permutations of equal-size blocks.

    >>> len(G_mu(Composition((2, 2, 1, 2))))
    6
    """
    by_size: dict = {}
    for i, p in enumerate(mu.parts):
        by_size.setdefault(p, []).append(i)
    out = []
    groups = list(by_size.values())
    for images in itertools.product(
        *(itertools.permutations(g) for g in groups)
    ):
        assignment = {}
        for g, image in zip(groups, images):
            assignment.update(zip(g, image))
        out.append(_block_transport(mu, mu, assignment))
    return frozenset(out)


def omega(mu: Composition, nu: Composition) -> Permutation:
    """The canonical transport from the blocks of mu onto the blocks
    of nu: order-preserving inside blocks, and order-preserving on the
    indices of equal-size blocks.

    >>> str(omega(Composition((2, 1, 3, 2)), Composition((3, 2, 2, 1))))
    '45812367'
    """
    if not similar(mu, nu):
        raise ValueError(
            f'compositions {mu.to_text()} and {nu.to_text()} are not similar'
        )
    targets_by_size: dict = {}
    for j, p in enumerate(nu.parts):
        targets_by_size.setdefault(p, []).append(j)
    assignment = {}
    cursor = {size: 0 for size in targets_by_size}
    for i, p in enumerate(mu.parts):
        assignment[i] = targets_by_size[p][cursor[p]]
        cursor[p] += 1
    return _block_transport(mu, nu, assignment)


def _similar_compositions(mu: Composition) -> tuple:
    return tuple(
        Composition(parts)
        for parts in sorted(set(itertools.permutations(mu.parts)))
    )


def positive_sufficient(mu: Composition, w: Permutation) -> bool:
    """Is w in G_mu omega_{nu,mu} for some nu similar to mu?"""
    if not is_shortest_coset_rep(w, mu.simple_reflections()):
        raise ValueError(f'{w} is not a shortest rep for {mu.to_text()}')
    gm = G_mu(mu)
    for nu in _similar_compositions(mu):
        om = omega(nu, mu)
        if any((g * om) == w for g in gm):
            return True
    return False


@lru_cache(maxsize=None)
def right_cell_of_longest_quotient(mu: Composition) -> frozenset:
    """The right cell containing w_0^mu w_0."""
    n = mu.n
    seed = longest_element_parabolic(n, mu.simple_reflections()) * longest_element(n)
    key = right_cell_key(seed)
    return frozenset(
        u for u in enumerate_group(n) if right_cell_key(u) == key
    )


def is_thin_general(mu: Composition, w: Permutation) -> bool:
    """Unique u in the cell of w_0^mu w_0 with nonzero ungraded
    multiplicity, and that multiplicity equal to 1."""
    J = mu.simple_reflections()
    if not is_shortest_coset_rep(w, J):
        raise ValueError(f'{w} is not a shortest rep for {mu.to_text()}')
    table = kl_table(mu.n)
    hits = 0
    for u in right_cell_of_longest_quotient(mu):
        m = parabolic_verma_multiplicity(table, J, w, u).at_one()
        if m != 0:
            if m != 1:
                return False
            hits += 1
            if hits > 1:
                return False
    return hits == 1


@dataclass(frozen=True)
class Classification:
    verdict: str

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f'unknown verdict {self.verdict!r}')


def classify_general(mu: Composition, w: Permutation) -> Classification:
    """Positive by the sufficient condition; Negative by non-thinness;
    Unknown in the remaining (genuinely open) thin cases."""
    if positive_sufficient(mu, w):
        return Classification('Positive')
    if not is_thin_general(mu, w):
        return Classification('Negative')
    return Classification('Unknown')
