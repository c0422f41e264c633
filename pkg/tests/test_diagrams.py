import itertools

import pytest
from hypothesis import given, strategies as st

from skewlab.diagrams import (
    EMPTY,
    SkewShape,
    components,
    composition_to_subset,
    dominance_leq,
    enumerate_connected,
    make_shape,
    normalize,
    parse_ascii,
    parse_compact,
    partitions,
    ribbon_to_shape,
    shape_to_ribbon,
    subpartitions,
    subset_to_composition,
    transpose_partition,
)
from skewlab.diagram_ops import oplus
from skewlab.errors import NotRibbon, NotSkew

from conftest import connected_upto

shapes_strategy = st.sampled_from(connected_upto(6))
compositions_strategy = st.lists(
    st.integers(1, 4), min_size=1, max_size=5
).map(tuple)


# -- normalize ---------------------------------------------------------------


def test_normalize_translate_paper_shape():
    base = make_shape((5, 4, 3, 3), (3, 1))
    shifted = [(i + 2, j + 7) for i, j in base.cells()]
    assert normalize(shifted) == base


def test_normalize_single_cell():
    assert normalize([(0, 0)]) == make_shape((1,))


def test_normalize_l_shapes_anywhere():
    for di, dj in [(0, 0), (5, -3), (-2, 9)]:
        hook = [(0 + di, 0 + dj), (0 + di, 1 + dj), (1 + di, 0 + dj)]
        assert normalize(hook) == make_shape((2, 1))
        corner = [(0 + di, 1 + dj), (1 + di, 0 + dj), (1 + di, 1 + dj)]
        assert normalize(corner) == make_shape((2, 2), (1,))


def test_normalize_rejects_non_skew():
    with pytest.raises(NotSkew):
        normalize([(0, 0), (1, 1)])  # starts increase downwards
    with pytest.raises(NotSkew):
        normalize([(0, 0), (0, 2), (1, 1)])  # gap inside a row
    with pytest.raises(NotSkew):
        normalize([(0, 0), (0, 1), (1, 1)])  # inner projection failure


def test_normalize_drops_interior_empty_column():
    assert normalize([(0, 0), (0, 2)]) == make_shape((2,))


def test_normalize_removes_empty_rows_and_columns():
    assert make_shape((4, 3, 3, 2), (3, 3, 1)) == normalize(
        [(1, 4), (3, 2), (3, 3), (4, 1), (4, 2)]
    )


@given(shapes_strategy, st.integers(-4, 4), st.integers(-4, 4))
def test_normalize_idempotent_under_translation(shape, di, dj):
    cells = [(i + di, j + dj) for i, j in shape.cells()]
    assert normalize(cells) == shape


# -- symmetries --------------------------------------------------------------


def test_transpose_examples():
    assert make_shape((3,)).transpose() == make_shape((1, 1, 1))
    assert make_shape((2, 2)).transpose() == make_shape((2, 2))


@given(shapes_strategy)
def test_transpose_is_cell_reflection(shape):
    reflected = normalize((j, i) for i, j in shape.cells())
    assert shape.transpose() == reflected


@given(shapes_strategy)
def test_transpose_rotate_involutions_commute(shape):
    assert shape.transpose().transpose() == shape
    assert shape.rotate180().rotate180() == shape
    assert shape.transpose().rotate180() == shape.rotate180().transpose()


def test_rotate_reverses_ribbons():
    assert shape_to_ribbon(ribbon_to_shape((1, 3, 2, 2)).rotate180()) == (2, 2, 3, 1)


@given(st.integers(1, 4), st.integers(1, 4))
def test_rotate_fixes_rectangles(k, m):
    rect = make_shape((k,) * m)
    assert rect.rotate180() == rect


@given(shapes_strategy)
def test_rotate_preserves_size(shape):
    assert shape.rotate180().size == shape.size


# -- components --------------------------------------------------------------


def test_components_display_example():
    shape = oplus(make_shape((2, 2)), make_shape((3, 2), (1,)))
    assert components(shape) == [make_shape((2, 2)), make_shape((3, 2), (1,))]


@given(compositions_strategy)
def test_ribbons_are_connected(alpha):
    assert components(ribbon_to_shape(alpha)) == [ribbon_to_shape(alpha)]


@given(st.lists(shapes_strategy, min_size=1, max_size=3))
def test_components_roundtrip(parts):
    shape = EMPTY
    for part in parts:
        shape = oplus(shape, part)
    comps = components(shape)
    rebuilt = EMPTY
    for comp in comps:
        rebuilt = oplus(rebuilt, comp)
    assert rebuilt == shape
    assert sum(c.size for c in comps) == shape.size


# -- ribbon bijection --------------------------------------------------------


def test_ribbon_paper_example():
    shape = ribbon_to_shape((1, 3, 2, 2))
    assert shape == make_shape((5, 4, 3, 1), (3, 2))
    assert shape_to_ribbon(shape) == (1, 3, 2, 2)


def test_single_row_ribbon():
    assert ribbon_to_shape((5,)) == make_shape((5,))


def test_partial_sum_bijection():
    assert composition_to_subset((1, 3, 2, 2)) == frozenset({1, 4, 6})
    assert subset_to_composition({1, 4, 6}, 8) == (1, 3, 2, 2)


@given(compositions_strategy)
def test_ribbon_bijection_roundtrip(alpha):
    assert shape_to_ribbon(ribbon_to_shape(alpha)) == alpha


def test_shape_to_ribbon_rejects():
    with pytest.raises(NotRibbon):
        shape_to_ribbon(make_shape((2, 2)))
    with pytest.raises(NotRibbon):
        shape_to_ribbon(oplus(make_shape((1,)), make_shape((1,))))


# -- enumeration -------------------------------------------------------------

GOLDEN_CONNECTED_COUNTS = {
    1: 1, 2: 2, 3: 4, 4: 9, 5: 20, 6: 46, 7: 105, 8: 242, 9: 557, 10: 1285,
}


def test_enumerate_smallest():
    assert enumerate_connected(1) == [make_shape((1,))]
    assert enumerate_connected(2) == [make_shape((2,)), make_shape((1, 1))]


@pytest.mark.parametrize("n,count", sorted(GOLDEN_CONNECTED_COUNTS.items()))
def test_enumerate_golden_counts(n, count):
    shapes = enumerate_connected(n)
    assert len(shapes) == count
    assert len(set(shapes)) == count
    assert all(s.is_connected() and s.size == n for s in shapes)


def _scan_oracle(n):
    # every canonical connected shape satisfies outer_1 + rows <= n + 1
    found = set()
    for total in range(n, n * n + 1):
        for lam in partitions(total):
            if lam[0] + len(lam) > n + 1:
                continue
            for mu in subpartitions(lam):
                if sum(mu) != total - n:
                    continue
                shape = normalize(make_shape(lam, mu).cells())
                if shape.is_connected():
                    found.add(shape)
    return found


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_enumerate_matches_scan_oracle(n):
    assert set(enumerate_connected(n)) == _scan_oracle(n)


def test_enumerate_cap(monkeypatch):
    monkeypatch.setenv("SKEWLAB_MAX_CELLS", "5")
    with pytest.raises(ValueError):
        enumerate_connected(6)
    assert len(enumerate_connected(6, ignore_cap=True)) == 46


# -- formats -----------------------------------------------------------------


def test_compact_parse_examples():
    assert parse_compact("5,4,3,3/3,1") == make_shape((5, 4, 3, 3), (3, 1))
    assert parse_compact("1/") == make_shape((1,))
    assert parse_compact("/") == EMPTY


@given(shapes_strategy)
def test_compact_roundtrip(shape):
    assert parse_compact(shape.compact()) == shape


@given(shapes_strategy)
def test_ascii_roundtrip(shape):
    assert parse_ascii(shape.ascii()) == shape


# -- orders ------------------------------------------------------------------


def test_dominance():
    assert dominance_leq((2, 2, 1), (3, 1, 1))
    assert not dominance_leq((3, 1, 1), (2, 2, 1))
    assert dominance_leq((2, 2), (2, 2))


def test_transpose_partition():
    assert transpose_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert transpose_partition(()) == ()
