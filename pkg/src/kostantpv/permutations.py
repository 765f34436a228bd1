r"""
Permutations of {1, ..., n} as elements of the Coxeter group S_n.

Conventions, fixed once and relied on everywhere else in the package:

- A permutation w is stored by its window (one-line) notation, the tuple
  ``(w(1), ..., w(n))``.  Positions and values are 1-based.
- Composition is right-to-left: ``(p * q)(i) = p(q(i))``.  Consequently
  ``w * s_i`` swaps the entries in *positions* i, i+1 of the window,
  while ``s_j * w`` swaps the *values* j, j+1.
- Simple reflections are indexed 1..n-1, with s_i the transposition of
  i and i+1.  A set of simple reflections is a ``frozenset`` of indices.
- ``length(w)`` is the number of inversions, i.e. the Coxeter length.
- Bruhat order is implemented through the dominance criterion: with
  ``D_w(i, j) = #{a <= i : w(a) >= j}``, one has x <= y iff D_x <= D_y
  entrywise.  (Tests check this against reduced-subword containment.)
- For a parabolic subgroup W_J the left cosets W_J w carry a unique
  representative of minimal length, characterized by l(s_j w) > l(w)
  for every j in J, i.e. ``w^{-1}(j) < w^{-1}(j+1)``.

Text forms: a window is written as a digit string like ``'2314'`` when
n <= 9 and as ``'[2,3,1,4]'`` in general; both are accepted on input.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Union

SimpleReflectionSet = frozenset  # indices in 1..n-1


class Permutation:
    """A permutation of {1, ..., n} in window notation.

    >>> w = Permutation('2314')
    >>> w(1), w(2), w(3)
    (2, 3, 1)
    >>> w.length
    2
    >>> str(w.inverse)
    '3124'
    >>> str(w * w)
    '3124'
    """

    __slots__ = ('window', '_length', '_inverse')

    def __init__(self, window: Union[str, Iterable[int]]):
        if isinstance(window, str):
            window = _window_from_text(window)
        else:
            window = tuple(window)
        n = len(window)
        if sorted(window) != list(range(1, n + 1)):
            raise ValueError(f'not a window of 1..{n}: {window!r}')
        self.window = window
        self._length = None
        self._inverse = None

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Image of the position i in 1..n."""
        return self.window[i - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        """Right-to-left composition: (p * q)(i) = p(q(i))."""
        pw, qw = self.window, other.window
        if len(pw) != len(qw):
            raise ValueError('rank mismatch')
        return _raw(tuple(pw[q - 1] for q in qw))

    @property
    def inverse(self) -> 'Permutation':
        if self._inverse is None:
            inv = [0] * len(self.window)
            for i, v in enumerate(self.window):
                inv[v - 1] = i + 1
            self._inverse = _raw(tuple(inv))
        return self._inverse

    @property
    def length(self) -> int:
        """Coxeter length = number of inversions."""
        if self._length is None:
            w = self.window
            self._length = sum(
                1
                for a in range(len(w))
                for b in range(a + 1, len(w))
                if w[a] > w[b]
            )
        return self._length

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.window))

    def right_descents(self) -> SimpleReflectionSet:
        """Indices i with l(w s_i) < l(w), i.e. w(i) > w(i+1).

        >>> sorted(Permutation('3412').right_descents())
        [2]
        """
        w = self.window
        return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def left_descents(self) -> SimpleReflectionSet:
        """Indices j with l(s_j w) < l(w), i.e. j appears after j+1."""
        return self.inverse.right_descents()

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __lt__(self, other: 'Permutation'):
        # plain lexicographic window order, for deterministic sorting only
        return self.window < other.window

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f'Permutation({format_permutation(self)!r})'


def _raw(window: tuple) -> Permutation:
    """Wrap an already-validated window without rechecking it."""
    p = object.__new__(Permutation)
    p.window = window
    p._length = None
    p._inverse = None
    return p


def _window_from_text(text: str) -> tuple:
    text = text.strip()
    if text.startswith('['):
        if not text.endswith(']'):
            raise ValueError(f'unterminated bracket form: {text!r}')
        body = text[1:-1].strip()
        if not body:
            raise ValueError('empty window')
        return tuple(int(part) for part in body.split(','))
    if not text.isdigit():
        raise ValueError(f'not a permutation text: {text!r}')
    return tuple(int(ch) for ch in text)


def parse_permutation(text: str) -> Permutation:
    """Parse ``'2314'`` (n <= 9) or ``'[2,3,1,4]'`` (any n).

    >>> parse_permutation('[2,3,1,4]') == parse_permutation('2314')
    True
    """
    return Permutation(text)


def format_permutation(w: Permutation) -> str:
    """Canonical text form; round-trips bit-exactly with parsing.

    Digit string for n <= 9, bracketed comma form beyond.

    >>> format_permutation(Permutation((2, 3, 1, 4)))
    '2314'
    """
    if w.n <= 9:
        return ''.join(str(v) for v in w.window)
    return '[' + ','.join(str(v) for v in w.window) + ']'


def identity(n: int) -> Permutation:
    return _raw(tuple(range(1, n + 1)))


def simple_reflection(n: int, i: int) -> Permutation:
    """The transposition s_i of i, i+1 inside S_n, for 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f's_{i} not a simple reflection of S_{n}')
    window = list(range(1, n + 1))
    window[i - 1], window[i] = window[i], window[i - 1]
    return _raw(tuple(window))


def transposition(n: int, a: int, b: int) -> Permutation:
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f'bad transposition ({a} {b}) in S_{n}')
    window = list(range(1, n + 1))
    window[a - 1], window[b - 1] = window[b - 1], window[a - 1]
    return _raw(tuple(window))


def from_word(n: int, word: Iterable[int]) -> Permutation:
    """Product s_{i_1} s_{i_2} ... s_{i_r} of simple reflections.

    >>> str(from_word(4, (2, 1, 3, 2)))
    '3412'
    """
    w = list(range(1, n + 1))
    # right-to-left composition means appending a letter acts on positions
    for i in word:
        w[i - 1], w[i] = w[i], w[i - 1]
    return _raw(tuple(w))


def dominance_matrix(w: Permutation) -> tuple:
    """The table D_w(i, j) = #{a <= i : w(a) >= j}, rows indexed by i."""
    n = w.n
    rows = []
    seen_ge = [0] * (n + 2)  # seen_ge[j] = #{a <= i : w(a) >= j}
    for i in range(1, n + 1):
        v = w(i)
        for j in range(1, v + 1):
            seen_ge[j] += 1
        rows.append(tuple(seen_ge[1:n + 1]))
    return tuple(rows)


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Bruhat order via entrywise dominance comparison.

    >>> bruhat_leq(Permutation('1324'), Permutation('3412'))
    True
    >>> bruhat_leq(Permutation('2134'), Permutation('1342'))
    False
    """
    if x.n != y.n:
        raise ValueError('rank mismatch')
    dx, dy = dominance_matrix(x), dominance_matrix(y)
    return all(
        a <= b
        for rx, ry in zip(dx, dy)
        for a, b in zip(rx, ry)
    )


@lru_cache(maxsize=None)
def _reduced_words_cached(window: tuple) -> tuple:
    w = _raw(window)
    if w.is_identity:
        return ((),)
    out = []
    for i in sorted(w.right_descents()):
        shorter = w * simple_reflection(w.n, i)
        for word in _reduced_words_cached(shorter.window):
            out.append(word + (i,))
    return tuple(sorted(out))


def reduced_words(w: Permutation) -> tuple:
    """All reduced words of w, sorted, as tuples of reflection indices.

    >>> reduced_words(Permutation('321'))
    ((1, 2, 1), (2, 1, 2))
    """
    return _reduced_words_cached(w.window)


def canonical_reduced_word(w: Permutation) -> tuple:
    """One fixed reduced word (peel the smallest left descent first)."""
    word = []
    w = _raw(w.window)
    while not w.is_identity:
        j = min(w.left_descents())
        word.append(j)
        w = simple_reflection(w.n, j) * w
    return tuple(word)


def longest_element(n: int) -> Permutation:
    """w_0 = (n, n-1, ..., 1), of length n(n-1)/2."""
    return _raw(tuple(range(n, 0, -1)))


def longest_element_parabolic(n: int, J: Iterable[int]) -> Permutation:
    """Longest element of the parabolic subgroup W_J of S_n.

    W_J is generated by {s_j : j in J}; its longest element reverses
    each maximal run of consecutive indices in J.

    >>> str(longest_element_parabolic(4, {1, 3}))
    '2143'
    """
    J = frozenset(J)
    if not all(1 <= j <= n - 1 for j in J):
        raise ValueError(f'J not inside 1..{n - 1}: {sorted(J)}')
    window = list(range(1, n + 1))
    start = 1
    while start <= n:
        stop = start
        while stop <= n - 1 and stop in J:
            stop += 1
        window[start - 1:stop] = range(stop, start - 1, -1)
        start = stop + 1
    return _raw(tuple(window))


def subgroup_elements(n: int, J: Iterable[int]) -> tuple:
    """All elements of the parabolic W_J, in lexicographic window order."""
    J = frozenset(J)
    blocks = []
    start = 1
    while start <= n:
        stop = start
        while stop <= n - 1 and stop in J:
            stop += 1
        blocks.append(range(start, stop + 1))
        start = stop + 1
    perms_per_block = [
        list(itertools.permutations(block)) for block in blocks
    ]
    out = []
    for choice in itertools.product(*perms_per_block):
        window = tuple(v for part in choice for v in part)
        out.append(_raw(window))
    return tuple(sorted(out, key=lambda p: p.window))


def is_shortest_coset_rep(w: Permutation, J: Iterable[int]) -> bool:
    """Is w the minimal-length element of its left coset W_J w?

    Equivalent to l(s_j w) > l(w) for all j in J, i.e. the value j
    appears before j+1 in the window of w^{-1}; no lengths needed.

    >>> is_shortest_coset_rep(Permutation('2314'), {2})
    True
    >>> is_shortest_coset_rep(Permutation('3214'), {2})
    False
    """
    inv = w.inverse.window
    return all(inv[j - 1] < inv[j] for j in J)


def enumerate_group(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic window order."""
    for window in itertools.permutations(range(1, n + 1)):
        yield _raw(window)


def enumerate_shortest_reps(n: int, J: Iterable[int]) -> Iterator[Permutation]:
    """Shortest representatives of W_J \\ S_n, lexicographic window order."""
    J = frozenset(J)
    for w in enumerate_group(n):
        if is_shortest_coset_rep(w, J):
            yield w
