r"""
Cup-diagram calculus for maximal parabolic blocks.

Simples and standards of the block attached to the parabolic with Levi
sl_k + sl_m (k + m = n) are indexed by weight words: strings of n
letters from {^, v} with exactly k wedges.  Shortest coset
representatives correspond to words through the bijection Phi, which
transports the dominant word ^^..^vv..v along w:

    Phi(w)[p] = dominant letter at w(p).

A cup diagram places non-crossing cups on word positions, with no
vertical strand trapped strictly inside a cup; orienting it by a word
requires every cup to join one ^ and one v.  A cup whose left end
carries ^ is clockwise, and the degree of an oriented diagram counts
its clockwise cups.  Every word has a unique degree-0 admissible
diagram d(word), built by repeatedly capping adjacent v^ pairs;
admissible means no v-strand to the left of an ^-strand.

Graded composition multiplicities of the block are read off the
calculus: L_y sits inside the standard module at x exactly when the
underlying diagram of d(Phi(y)) can be oriented by Phi(x), and the
degree of that orientation is the grading.  The a-value of w is the
cup count of d(Phi(w)); a standard module is thin when exactly one of
its composition factors has maximal a-value min(k, m), and thinness is
governed by the contiguity sets Y below.  The answer to Kostant's
problem is positive for w iff Phi(w) lies in Y -- except at k = 1,
n-1, or n/2, where only the two flip-2 words survive.

Text forms: a word is a string like '^^vv'; a diagram is
'cups=(1,4),(2,3);strands=5,6' with cups sorted by left endpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .permutations import Permutation, _raw, is_shortest_coset_rep

WEDGE = '^'
VEE = 'v'


@dataclass(frozen=True)
class WeightWord:
    """A word in {^, v} with at least one letter of each kind.

    >>> WeightWord('^v^v').k
    2
    >>> str(WeightWord('^v^v'))
    '^v^v'
    """

    letters: str

    def __post_init__(self):
        if not set(self.letters) <= {WEDGE, VEE}:
            raise ValueError(f'word must use only ^ and v: {self.letters!r}')
        k = self.letters.count(WEDGE)
        if not 1 <= k <= len(self.letters) - 1:
            raise ValueError(f'need 1 <= #wedges <= n-1 in {self.letters!r}')

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def k(self) -> int:
        return self.letters.count(WEDGE)

    def __getitem__(self, p: int) -> str:
        """Letter at 1-based position p."""
        return self.letters[p - 1]

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class CupDiagram:
    """Non-crossing cups plus vertical strands on n positions.

    Planarity: cups are pairwise non-crossing and no strand position
    lies strictly inside any cup interval.
    """

    cups: frozenset      # pairs (a, b) with a < b
    strands: frozenset   # positions
    n: int

    def __post_init__(self):
        used = sorted(
            itertools.chain(self.strands, *(c for c in self.cups))
        )
        if used != list(range(1, self.n + 1)):
            raise ValueError('cups and strands must partition 1..n')
        for a, b in self.cups:
            if not a < b:
                raise ValueError(f'cup ({a}, {b}) must have a < b')
            for p in self.strands:
                if a < p < b:
                    raise ValueError(f'strand {p} inside cup ({a}, {b})')
            for c, d in self.cups:
                if a < c < b < d:
                    raise ValueError(f'cups ({a},{b}) and ({c},{d}) cross')

    def to_text(self) -> str:
        cups = ','.join(
            f'({a},{b})' for a, b in sorted(self.cups)
        )
        strands = ','.join(str(p) for p in sorted(self.strands))
        return f'cups={cups};strands={strands}'

    @classmethod
    def from_text(cls, text: str, n: Optional[int] = None) -> 'CupDiagram':
        head, _, tail = text.strip().partition(';')
        if not head.startswith('cups=') or not tail.startswith('strands='):
            raise ValueError(f'bad diagram text: {text!r}')
        cups = set()
        body = head[len('cups='):]
        if body:
            for part in body.replace('),(', ');(').split(';'):
                a, b = part.strip('()').split(',')
                cups.add((int(a), int(b)))
        strands = {
            int(p) for p in tail[len('strands='):].split(',') if p
        }
        total = 2 * len(cups) + len(strands)
        return cls(frozenset(cups), frozenset(strands), n or total)


@dataclass(frozen=True)
class OrientedCupDiagram:
    """A cup diagram decorated by a word; cups join opposite letters.

    Need not be admissible: admissibility is about strands and is
    checked by orient / enumerate_admissible.
    """

    diagram: CupDiagram
    word: WeightWord

    def __post_init__(self):
        if self.diagram.n != self.word.n:
            raise ValueError('diagram and word sizes differ')
        for a, b in self.diagram.cups:
            if self.word[a] == self.word[b]:
                raise ValueError(
                    f'cup ({a}, {b}) joins equal letters in {self.word}'
                )

    @property
    def degree(self) -> int:
        """Number of clockwise cups (wedge at the left end)."""
        return sum(
            1 for a, _ in self.diagram.cups if self.word[a] == WEDGE
        )

    def is_admissible(self) -> bool:
        """No v-strand strictly left of an ^-strand."""
        strands = sorted(self.diagram.strands)
        seen_vee = False
        for p in strands:
            if self.word[p] == VEE:
                seen_vee = True
            elif seen_vee:
                return False
        return True


@dataclass(frozen=True)
class MaxParContext:
    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f'k={self.k} out of range 1..{self.n - 1}')

    @property
    def m(self) -> int:
        return self.n - self.k

    @property
    def a(self) -> int:
        return min(self.k, self.m)

    @property
    def J(self) -> frozenset:
        """Simple reflections of the Levi: everything except k."""
        return frozenset(range(1, self.n)) - {self.k}


def dominant_word(ctx: MaxParContext) -> WeightWord:
    """k wedges then m vees.

    >>> str(dominant_word(MaxParContext(4, 2)))
    '^^vv'
    """
    return WeightWord(WEDGE * ctx.k + VEE * ctx.m)


def enumerate_words(ctx: MaxParContext) -> frozenset:
    """All C(n, k) words with k wedges."""
    out = set()
    for wedge_positions in itertools.combinations(range(ctx.n), ctx.k):
        letters = [VEE] * ctx.n
        for p in wedge_positions:
            letters[p] = WEDGE
        out.add(WeightWord(''.join(letters)))
    return frozenset(out)


def _check_rep(ctx: MaxParContext, w: Permutation) -> None:
    if w.n != ctx.n:
        raise ValueError(f'{w} has rank {w.n}, context has {ctx.n}')
    if not is_shortest_coset_rep(w, ctx.J):
        raise ValueError(f'{w} is not a shortest rep for the maximal parabolic')


def phi(ctx: MaxParContext, w: Permutation) -> WeightWord:
    """Transport of the dominant word along w: letter p is dominant
    letter number w(p).

    >>> str(phi(MaxParContext(4, 2), Permutation('1324')))
    '^v^v'
    >>> str(phi(MaxParContext(4, 2), Permutation('3412')))
    'vv^^'
    """
    _check_rep(ctx, w)
    return WeightWord(
        ''.join(WEDGE if v <= ctx.k else VEE for v in w.window)
    )


def phi_inverse(ctx: MaxParContext, word: WeightWord) -> Permutation:
    """The unique shortest rep mapping to the word under phi."""
    if word.n != ctx.n or word.k != ctx.k:
        raise ValueError(f'{word} does not belong to the (n,k)=({ctx.n},{ctx.k}) block')
    window = []
    wedges_seen = vees_seen = 0
    for p in range(1, ctx.n + 1):
        if word[p] == WEDGE:
            wedges_seen += 1
            window.append(wedges_seen)
        else:
            vees_seen += 1
            window.append(ctx.k + vees_seen)
    return _raw(tuple(window))


@lru_cache(maxsize=None)
def shortest_reps(ctx: MaxParContext) -> tuple:
    """All shortest reps of the block, in window order."""
    return tuple(
        sorted(
            (phi_inverse(ctx, word) for word in enumerate_words(ctx)),
            key=lambda w: w.window,
        )
    )


def antidominant_rep(ctx: MaxParContext) -> Permutation:
    """The rep whose word is v^m ^k -- the longest shortest rep."""
    return phi_inverse(
        ctx, WeightWord(VEE * ctx.m + WEDGE * ctx.k)
    )


def d_of(word: WeightWord) -> OrientedCupDiagram:
    """The unique degree-0 admissible diagram: cap adjacent v^ pairs.

    >>> d_of(WeightWord('^v^v')).diagram.to_text()
    'cups=(2,3);strands=1,4'
    >>> d_of(WeightWord('vv^^vv^')).diagram.to_text()
    'cups=(1,4),(2,3),(6,7);strands=5'
    """
    stack = []
    cups = set()
    strands = set()
    for p in range(1, word.n + 1):
        if word[p] == VEE:
            stack.append(p)
        elif stack:
            cups.add((stack.pop(), p))
        else:
            strands.add(p)
    strands.update(stack)
    return OrientedCupDiagram(
        CupDiagram(frozenset(cups), frozenset(strands), word.n), word
    )


def word_from_diagram(ctx: MaxParContext, c: CupDiagram) -> WeightWord:
    """The unique word whose degree-0 diagram has c as its shape.

    Cups are oriented counter-clockwise (v on the left end); of the
    strands, the leftmost remaining wedges come first.
    """
    if len(c.cups) > ctx.a:
        raise ValueError(
            f'{len(c.cups)} cups exceed the maximum {ctx.a} for (n,k)=({ctx.n},{ctx.k})'
        )
    wedges_needed = ctx.k - len(c.cups)
    if wedges_needed < 0 or wedges_needed > len(c.strands):
        raise ValueError('cup count incompatible with the wedge count')
    letters = [''] * c.n
    for a, b in c.cups:
        letters[a - 1] = VEE
        letters[b - 1] = WEDGE
    for count, p in enumerate(sorted(c.strands)):
        letters[p - 1] = WEDGE if count < wedges_needed else VEE
    return WeightWord(''.join(letters))


# ---------------------------------------------------------------------------
# Exhaustive diagram enumeration (brute-force side of the calculus)


@lru_cache(maxsize=None)
def _perfect_matchings(points: tuple) -> tuple:
    """All non-crossing perfect matchings of an ordered point tuple."""
    if not points:
        return ((),)
    out = []
    p = points[0]
    for t in range(1, len(points), 2):
        q = points[t]
        for inner in _perfect_matchings(points[1:t]):
            for outer in _perfect_matchings(points[t + 1:]):
                out.append(((p, q),) + inner + outer)
    return tuple(out)


@lru_cache(maxsize=None)
def _planar_diagrams(points: tuple) -> tuple:
    """All (cups, strands) splittings of the points, planar in the
    strict sense: non-crossing cups and no strand inside a cup."""
    if not points:
        return (((), ()),)
    out = []
    p = points[0]
    for cups, strands in _planar_diagrams(points[1:]):
        out.append((cups, (p,) + strands))
    for t in range(1, len(points), 2):
        q = points[t]
        for inner in _perfect_matchings(points[1:t]):
            for cups, strands in _planar_diagrams(points[t + 1:]):
                out.append((((p, q),) + inner + cups, strands))
    return tuple(out)


def planar_diagrams(n: int) -> tuple:
    """Every planar cup diagram on n points."""
    return tuple(
        CupDiagram(frozenset(cups), frozenset(strands), n)
        for cups, strands in _planar_diagrams(tuple(range(1, n + 1)))
    )


def enumerate_oriented(word: WeightWord) -> frozenset:
    """All planar diagrams orientable by the word (cups join opposite
    letters); admissibility not required."""
    out = set()
    for c in planar_diagrams(word.n):
        if all(word[a] != word[b] for a, b in c.cups):
            out.add(OrientedCupDiagram(c, word))
    return frozenset(out)


def enumerate_admissible(word: WeightWord) -> frozenset:
    """The admissible subset of enumerate_oriented."""
    return frozenset(
        ocd for ocd in enumerate_oriented(word) if ocd.is_admissible()
    )


def orient(c: CupDiagram, word: WeightWord) -> Optional[OrientedCupDiagram]:
    """Decorate c by the word if valid and admissible, else None.

    >>> c = d_of(WeightWord('^v^v')).diagram
    >>> orient(c, WeightWord('^^vv')).degree
    1
    >>> orient(c, WeightWord('vv^^')) is None
    True
    """
    if c.n != word.n:
        raise ValueError('diagram and word sizes differ')
    if any(word[a] == word[b] for a, b in c.cups):
        return None
    ocd = OrientedCupDiagram(c, word)
    return ocd if ocd.is_admissible() else None


def degree(ocd: OrientedCupDiagram) -> int:
    return ocd.degree


# ---------------------------------------------------------------------------
# Multiplicities, thinness, and the classifier


def graded_multiplicity(
    ctx: MaxParContext, x: Permutation, y: Permutation
) -> Optional[int]:
    """Degree at which L_y sits inside the standard module at x, or
    None when it does not appear; the multiplicity is always 0 or 1.

    The diagram of d(Phi(y)) is decorated by Phi(x).
    """
    word_x = phi(ctx, x)
    word_y = phi(ctx, y)
    ocd = orient(d_of(word_y).diagram, word_x)
    return None if ocd is None else ocd.degree


def a_value(ctx: MaxParContext, w: Permutation) -> int:
    """Cup count of d(Phi(w)) = Lusztig's a-function on the block."""
    return len(d_of(phi(ctx, w)).diagram.cups)


def is_thin(ctx: MaxParContext, w: Permutation) -> bool:
    """Exactly one composition factor of maximal a-value min(k, m)."""
    hits = 0
    for y in shortest_reps(ctx):
        if a_value(ctx, y) != ctx.a:
            continue
        if graded_multiplicity(ctx, w, y) is not None:
            hits += 1
            if hits > 1:
                return False
    return hits == 1


def signature(word: WeightWord) -> tuple:
    """Maximal-run lengths, left to right.

    >>> signature(WeightWord('v^^v^^^'))
    (1, 2, 1, 3)
    """
    return tuple(
        sum(1 for _ in group)
        for _, group in itertools.groupby(word.letters)
    )


def flip_number(word: WeightWord) -> int:
    """Number of maximal runs; at least 2 for any weight word."""
    return len(signature(word))


def in_Y(ctx: MaxParContext, word: WeightWord) -> bool:
    """The contiguity predicate: for k < m all vees adjacent, for
    k > m all wedges adjacent, for k = m either way.

    >>> in_Y(MaxParContext(5, 2), WeightWord('^vvv^'))
    True
    >>> in_Y(MaxParContext(5, 2), WeightWord('v^v^v'))
    False
    """
    if word.n != ctx.n or word.k != ctx.k:
        raise ValueError(f'{word} not in the (n,k)=({ctx.n},{ctx.k}) block')

    def contiguous(letter: str) -> bool:
        first = word.letters.find(letter)
        last = word.letters.rfind(letter)
        return last - first + 1 == word.letters.count(letter)

    if ctx.k < ctx.m:
        return contiguous(VEE)
    if ctx.k > ctx.m:
        return contiguous(WEDGE)
    return contiguous(VEE) or contiguous(WEDGE)


def Y_words(ctx: MaxParContext) -> frozenset:
    return frozenset(
        word for word in enumerate_words(ctx) if in_Y(ctx, word)
    )


def is_kostant_positive_maximal(ctx: MaxParContext, w: Permutation) -> bool:
    """Positive iff Phi(w) is in Y, except that for k = 1, n-1, or n/2
    only the two extreme reps are positive."""
    _check_rep(ctx, w)
    if ctx.k in (1, ctx.n - 1) or ctx.n == 2 * ctx.k:
        return w.is_identity or w == antidominant_rep(ctx)
    return in_Y(ctx, phi(ctx, w))
