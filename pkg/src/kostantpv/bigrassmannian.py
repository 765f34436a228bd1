r"""
Bigrassmannian permutations and the combinatorial socle descriptor.

A permutation is bigrassmannian when it has exactly one left descent
and exactly one right descent.  The maximal bigrassmannian elements
below a fixed w form an antichain that describes the socle of the
cokernel of the inclusion of Verma modules attached to w; the quotient
Delta_e / Delta_w has simple socle exactly when w itself is
bigrassmannian, and the test suite checks that shadow exhaustively.

All enumeration here is a filtered scan over the full group, which is
the right tool at desk scale (n <= 7).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .permutations import Permutation, bruhat_leq, enumerate_group


@dataclass(frozen=True)
class SocleDescriptor:
    """The Bruhat-maximal bigrassmannians below a permutation."""

    generators: frozenset

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def is_bigrassmannian(w: Permutation) -> bool:
    """Exactly one left descent and exactly one right descent.

    >>> is_bigrassmannian(Permutation('1324'))
    True
    >>> is_bigrassmannian(Permutation('3412'))
    True
    >>> is_bigrassmannian(Permutation('321'))
    False
    """
    return len(w.right_descents()) == 1 and len(w.left_descents()) == 1


@lru_cache(maxsize=None)
def bigrassmannians(n: int) -> tuple:
    """All bigrassmannian elements of S_n, in window order."""
    return tuple(w for w in enumerate_group(n) if is_bigrassmannian(w))


def interval(x: Permutation, y: Permutation) -> set:
    """The Bruhat interval {z : x <= z <= y}.

    >>> sorted(str(z) for z in interval(Permutation('123'), Permutation('231')))
    ['123', '132', '213', '231']
    """
    if not bruhat_leq(x, y):
        raise ValueError(f'incomparable endpoints {x} and {y}')
    return {
        z
        for z in enumerate_group(x.n)
        if bruhat_leq(x, z) and bruhat_leq(z, y)
    }


def complement_bigrassmannians(u: Permutation, w: Permutation) -> set:
    """Bigrassmannian elements of [e, u] that are not in [e, w].

    Requires w <= u, so the second interval sits inside the first.
    """
    if not bruhat_leq(w, u):
        raise ValueError(f'{w} is not Bruhat-below {u}')
    return {
        b
        for b in bigrassmannians(u.n)
        if bruhat_leq(b, u) and not bruhat_leq(b, w)
    }


def socle_descriptor(w: Permutation) -> SocleDescriptor:
    """Maximal elements among the bigrassmannians below w.

    >>> sorted(str(b) for b in socle_descriptor(Permutation('321')))
    ['231', '312']
    """
    below = [b for b in bigrassmannians(w.n) if bruhat_leq(b, w)]
    maximal = frozenset(
        b
        for b in below
        if not any(b != c and bruhat_leq(b, c) for c in below)
    )
    return SocleDescriptor(generators=maximal)
