"""Row insertion and the cell invariants it carries."""

import itertools

from kostantpv.permutations import enumerate_group, longest_element, identity
from kostantpv.tableaux import rsk


def _is_partition(shape, n):
    return (
        sum(shape) == n
        and all(a >= b for a, b in zip(shape, shape[1:]))
        and all(p > 0 for p in shape)
    )


def test_shapes_are_partitions():
    for n in range(1, 6):
        for w in enumerate_group(n):
            pair = rsk(w)
            assert _is_partition(pair.shape, n)
            assert tuple(len(r) for r in pair.insertion) == pair.shape
            assert tuple(len(r) for r in pair.recording) == pair.shape


def test_rows_and_columns_increase():
    for w in enumerate_group(4):
        for tab in (rsk(w).insertion, rsk(w).recording):
            for row in tab:
                assert list(row) == sorted(row)
            for upper, lower in zip(tab, tab[1:]):
                for a, b in zip(upper, lower):
                    assert a < b


def test_extremes():
    for n in range(1, 6):
        assert rsk(identity(n)).shape == (n,)
        assert rsk(longest_element(n)).shape == (1,) * n


def test_injective():
    for n in range(1, 6):
        seen = {rsk(w) for w in enumerate_group(n)}
        assert len(seen) == len(list(enumerate_group(n)))


def test_involutions_have_equal_tableaux():
    for w in enumerate_group(5):
        pair = rsk(w)
        assert ((w * w).is_identity) == (pair.insertion == pair.recording)


def test_inverse_swaps_tableaux():
    for w in enumerate_group(5):
        pair, pair_inv = rsk(w), rsk(w.inverse)
        assert pair.insertion == pair_inv.recording
        assert pair.recording == pair_inv.insertion


def test_worked_example():
    pair = rsk(next(w for w in enumerate_group(3) if w.window == (3, 1, 2)))
    assert pair.shape == (2, 1)
    assert pair.insertion == ((1, 2), (3,))
    assert pair.recording == ((1, 3), (2,))
