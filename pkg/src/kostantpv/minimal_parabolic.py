r"""
The minimal-parabolic classification: tau elements, the X+/X- split,
the factorization bijection, and the five-case complement analysis.

For the parabolic p_k (Levi generated by the single reflection
s_k = (k, k+1)) the shortest coset representatives factor uniquely as
sigma o tau, where sigma ranges over the subgroup hat_G_k of
permutations fixing both k and k+1, and tau = tau_{i,j} is the unique
permutation sending i to k, j to k+1, and increasing elsewhere.  The
answer to Kostant's problem for the parabolic Verma at w depends only
on the tau part: positive exactly when j = i + 1 (the set X+).

Negative cases come with an explicit witness: the Bruhat complement
[e, s_k tau] \ [e, tau] contains a chain of at least two
bigrassmannian elements with pairwise distinct right descents, listed
case by case (five cases by the position of (i, j) relative to k; the
two mirrored cases are produced by conjugation with w_0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .permutations import (
    Permutation,
    _raw,
    from_word,
    is_shortest_coset_rep,
    longest_element,
    transposition,
)


@dataclass(frozen=True)
class MinParContext:
    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f'k={self.k} out of range 1..{self.n - 1}')


@dataclass(frozen=True)
class MinParFactorization:
    sigma: Permutation   # fixes k and k+1
    tau: Permutation     # some tau_{i,j}
    positive: bool       # tau in X+


@dataclass(frozen=True)
class CaseAnalysis:
    case_id: int               # 1..5
    predicted: tuple           # ordered chain of bigrassmannians


def tau(ctx: MinParContext, i: int, j: int) -> Permutation:
    """The unique w with w(i) = k, w(j) = k+1, increasing elsewhere.

    >>> str(tau(MinParContext(4, 2), 1, 2))
    '2314'
    >>> str(tau(MinParContext(4, 2), 2, 3))
    '1234'
    >>> str(tau(MinParContext(4, 2), 1, 4))
    '2143'
    """
    n, k = ctx.n, ctx.k
    if not 1 <= i < j <= n:
        raise ValueError(f'need 1 <= i < j <= {n}, got ({i}, {j})')
    rest = iter(v for v in range(1, n + 1) if v not in (k, k + 1))
    window = [
        k if p == i else k + 1 if p == j else next(rest)
        for p in range(1, n + 1)
    ]
    return _raw(tuple(window))


def enumerate_X(ctx: MinParContext):
    """The pair (X+, X-): consecutive-pair taus versus all others."""
    n = ctx.n
    plus = frozenset(tau(ctx, i, i + 1) for i in range(1, n))
    minus = frozenset(
        tau(ctx, i, j)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
    )
    return plus, minus


def hat_G(ctx: MinParContext) -> frozenset:
    """Permutations fixing both k and k+1 (a copy of S_{n-2})."""
    n, k = ctx.n, ctx.k
    others = [v for v in range(1, n + 1) if v not in (k, k + 1)]
    out = []
    for image in itertools.permutations(others):
        it = iter(image)
        window = tuple(
            v if v in (k, k + 1) else next(it) for v in range(1, n + 1)
        )
        out.append(_raw(window))
    return frozenset(out)


def G(ctx: MinParContext) -> frozenset:
    """The centralizer of (k, k+1): fix or swap the pair, |G| = 2(n-2)!."""
    t = transposition(ctx.n, ctx.k, ctx.k + 1)
    base = hat_G(ctx)
    return base | frozenset(sigma * t for sigma in base)


@lru_cache(maxsize=None)
def _factorization_table(n: int, k: int) -> dict:
    ctx = MinParContext(n, k)
    plus, minus = enumerate_X(ctx)
    table = {}
    for sigma in hat_G(ctx):
        for t, pos in itertools.chain(
            ((t, True) for t in plus), ((t, False) for t in minus)
        ):
            w = sigma * t
            if w.window in table:
                raise AssertionError(f'factorization collision at {w}')
            table[w.window] = MinParFactorization(sigma, t, pos)
    if len(table) != factorial(n - 2) * comb(n, 2):
        raise AssertionError('factorization table has wrong cardinality')
    return table


def factorize(ctx: MinParContext, w: Permutation) -> MinParFactorization:
    """The unique (sigma, tau) with w = sigma o tau.

    Requires w to be a shortest coset representative for J = {k}.
    """
    if not is_shortest_coset_rep(w, {ctx.k}):
        raise ValueError(f'{w} is not a shortest rep for J = {{{ctx.k}}}')
    try:
        return _factorization_table(ctx.n, ctx.k)[w.window]
    except KeyError:
        raise AssertionError(
            f'no factorization for rep {w}: bijection violated'
        ) from None


def is_kostant_positive_minimal(ctx: MinParContext, w: Permutation) -> bool:
    """Positive answers are exactly those with tau part in X+."""
    return factorize(ctx, w).positive


def case_analysis(ctx: MinParContext, i: int, j: int) -> CaseAnalysis:
    """The predicted bigrassmannian chain for a negative tau_{i,j}.

    Five cases by the position of (i, j) relative to (k, k+1); the
    mirrored cases 2 and 4 are obtained from 1 and 3 by conjugating
    the mirrored instance with w_0 rather than by transcribing the
    mirrored chains.
    """
    n, k = ctx.n, ctx.k
    if not 1 <= i < j <= n:
        raise ValueError(f'need 1 <= i < j <= {n}, got ({i}, {j})')
    if j == i + 1:
        raise ValueError(f'({i}, {j}) indexes a positive tau: no case analysis')
    if i == k:
        # chain s_k, s_k s_{k+1}, ..., s_k s_{k+1} ... s_{j-1}
        chain = [
            from_word(n, tuple(range(k, t + 1))) for t in range(k, j)
        ]
        return CaseAnalysis(1, tuple(chain))
    if j == k + 1:
        mirror = case_analysis(
            MinParContext(n, n - k), n + 1 - j, n + 1 - i
        )
        w0 = longest_element(n)
        return CaseAnalysis(
            2, tuple(w0 * b * w0 for b in mirror.predicted)
        )
    if i > k:
        # chain s_k ... s_i, s_k ... s_{i+1}, ..., s_k ... s_{j-1}
        chain = [
            from_word(n, tuple(range(k, t + 1))) for t in range(i, j)
        ]
        return CaseAnalysis(3, tuple(chain))
    if j <= k:
        mirror = case_analysis(
            MinParContext(n, n - k), n + 1 - j, n + 1 - i
        )
        w0 = longest_element(n)
        return CaseAnalysis(
            4, tuple(w0 * b * w0 for b in mirror.predicted)
        )
    # i < k < k+1 < j: an up-chain and a down-chain from s_k
    up = [from_word(n, tuple(range(k, t + 1))) for t in range(k, j)]
    down = [
        from_word(n, tuple(range(k, t - 1, -1))) for t in range(k - 1, i - 1, -1)
    ]
    return CaseAnalysis(5, tuple(up + down))


def ratio(ctx: MinParContext) -> Fraction:
    """Positive over negative counts: (n-1) / (C(n,2) - (n-1))."""
    n = ctx.n
    return Fraction(n - 1, comb(n, 2) - (n - 1))
