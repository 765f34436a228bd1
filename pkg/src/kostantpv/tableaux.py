"""Robinson-Schensted correspondence by row insertion."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .permutations import Permutation


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau, recording tableau, and their common shape."""

    insertion: tuple  # rows of the P tableau
    recording: tuple  # rows of the Q tableau
    shape: tuple      # row lengths, weakly decreasing


def rsk(w: Permutation) -> TableauPair:
    """Insert the window word w(1), ..., w(n).

    >>> rsk(Permutation('312')).shape
    (2, 1)
    >>> rsk(Permutation('312')).insertion
    ((1, 2), (3,))
    """
    p_rows: list = []
    q_rows: list = []
    for step, value in enumerate(w.window, start=1):
        for row, q_row in zip(p_rows, q_rows):
            spot = bisect_right(row, value)
            if spot == len(row):
                row.append(value)
                q_row.append(step)
                break
            row[spot], value = value, row[spot]
        else:
            p_rows.append([value])
            q_rows.append([step])
    return TableauPair(
        insertion=tuple(tuple(r) for r in p_rows),
        recording=tuple(tuple(r) for r in q_rows),
        shape=tuple(len(r) for r in p_rows),
    )
