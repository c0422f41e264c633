import itertools

import pytest
from hypothesis import given, strategies as st

from skewlab.diagrams import (
    EMPTY,
    compositions,
    enumerate_connected,
    make_shape,
    normalize,
    ribbon_to_shape,
    shape_to_ribbon,
)
from skewlab.diagram_ops import (
    amalgamate,
    amalgamated_compose,
    amalgamated_power,
    check_hypotheses,
    compose_alpha_d,
    compose_d_beta,
    concat,
    dot_omega,
    hat,
    join,
    near_concat,
    oplus,
    protrusion,
)
from skewlab.errors import NotDefined, ProtrusionFailure

from conftest import connected_upto

D1 = make_shape((2, 2))
D2 = make_shape((3, 2), (1,))
RUN_D = make_shape((4, 3), (1,))  # two-row running example
comp_strategy = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple)


def from_rows(rows):
    return normalize(
        (i, j)
        for i, row in enumerate(rows, 1)
        for j, ch in enumerate(row, 1)
        if ch == "X"
    )


# -- join ----------------------------------------------------------------------


def test_concat_nearcat_displays():
    assert concat(D1, D2) == from_rows(["..XX", ".XX.", "XX..", "XX.."])
    assert near_concat(D1, D2) == from_rows(["...XX", "XXXX.", "XX..."])


def test_join_empty_neutral():
    for mode in ("concat", "near_concat", "disjoint"):
        assert join(D1, EMPTY, mode) == D1
        assert join(EMPTY, D1, mode) == D1


def test_ribbon_join_formulas():
    a, b = (1, 3), (2, 2)
    assert shape_to_ribbon(concat(ribbon_to_shape(a), ribbon_to_shape(b))) == (1, 3, 2, 2)
    assert shape_to_ribbon(near_concat(ribbon_to_shape(a), ribbon_to_shape(b))) == (1, 5, 2)


@given(comp_strategy, comp_strategy)
def test_ribbon_join_formulas_general(a, b):
    assert shape_to_ribbon(concat(ribbon_to_shape(a), ribbon_to_shape(b))) == a + b
    assert shape_to_ribbon(near_concat(ribbon_to_shape(a), ribbon_to_shape(b))) == (
        a[:-1] + (a[-1] + b[0],) + b[1:]
    )


def test_join_associativity_exhaustive():
    shapes = connected_upto(4)
    for a, b, c in itertools.product(shapes[:16], repeat=3):
        assert concat(concat(a, b), c) == concat(a, concat(b, c))
        assert near_concat(near_concat(a, b), c) == near_concat(a, near_concat(b, c))
        assert concat(near_concat(a, b), c) == near_concat(a, concat(b, c))
        assert near_concat(concat(a, b), c) == concat(a, near_concat(b, c))


# -- compositions ---------------------------------------------------------------


def test_compose_alpha_d_display():
    result = compose_alpha_d((2, 3, 1), D1)
    expected = from_rows(
        [
            "........XX",
            "........XX",
            ".......XX.",
            ".....XXXX.",
            "...XXXX...",
            "...XX.....",
            "..XX......",
            "XXXX......",
            "XX........",
        ]
    )
    assert result == expected


def test_compose_alpha_d_identity():
    for shape in connected_upto(4):
        assert compose_alpha_d((1,), shape) == shape


def test_compose_alpha_d_pure_powers():
    d = make_shape((2, 1))
    row = compose_alpha_d((3,), d)
    col = compose_alpha_d((1, 1, 1), d)
    assert row == near_concat(near_concat(d, d), d)
    assert col == concat(concat(d, d), d)
    assert row.size == col.size == 9


def test_compose_d_beta_display():
    result = compose_d_beta(make_shape((3, 3), (1,)), (2, 3))
    expected = from_rows(
        [
            "............XXX",
            "........XXXXX..",
            ".......XXXXX...",
            ".....XXXXX.....",
            ".XXXXX.........",
            "XX.............",
        ]
    )
    assert result == expected


def test_compose_d_beta_identity():
    for shape in connected_upto(4):
        assert compose_d_beta(shape, (1,)) == shape


def test_compose_agree_on_ribbons():
    for na, nb in itertools.product(range(1, 5), repeat=2):
        for alpha in compositions(na):
            for beta in compositions(nb):
                assert compose_alpha_d(alpha, ribbon_to_shape(beta)) == compose_d_beta(
                    ribbon_to_shape(alpha), beta
                )


def test_circ_distributivities():
    shapes = connected_upto(4)
    comps = [c for n in (1, 2, 3) for c in compositions(n)]
    for alpha, beta in itertools.product(comps, repeat=2):
        for d in shapes:
            lhs = compose_alpha_d(alpha + beta, d)
            rhs = concat(compose_alpha_d(alpha, d), compose_alpha_d(beta, d))
            assert lhs == rhs
            glued = alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]
            assert compose_alpha_d(glued, d) == near_concat(
                compose_alpha_d(alpha, d), compose_alpha_d(beta, d)
            )
    for beta in comps:
        for d1, d2 in itertools.product(shapes[:10], repeat=2):
            assert compose_d_beta(concat(d1, d2), beta) == concat(
                compose_d_beta(d1, beta), compose_d_beta(d2, beta)
            )
            assert compose_d_beta(near_concat(d1, d2), beta) == near_concat(
                compose_d_beta(d1, beta), compose_d_beta(d2, beta)
            )


def test_compose_rotation_compatibility():
    comps = [c for n in (1, 2, 3) for c in compositions(n)]
    for alpha in comps:
        for d in connected_upto(4):
            assert compose_alpha_d(alpha, d).rotate180() == compose_alpha_d(
                tuple(reversed(alpha)), d.rotate180()
            )


# -- protrusion and amalgamation ---------------------------------------------


def test_protrusion_running_example():
    assert protrusion(RUN_D, "top") == [(1,)]
    assert protrusion(RUN_D, "bottom") == [(1,)]


def test_protrusion_ribbon_all_prefixes():
    alpha = (2, 1, 3)
    shape = ribbon_to_shape(alpha)
    tops = protrusion(shape, "top")
    assert len(tops) == shape.size
    bots = protrusion(shape, "bottom")
    assert len(bots) == shape.size


def test_protrusion_square():
    # the two-diagonal restriction of the square doubles a diagonal, so not
    # even the corner cell protrudes
    assert protrusion(make_shape((2, 2)), "top") == []
    assert protrusion(make_shape((2, 2)), "bottom") == []


def test_protrusion_column_pair():
    col = make_shape((1, 1))
    assert protrusion(col, "top") == [(1,), (1, 1)]
    assert protrusion(col, "bottom") == [(1,), (1, 1)]


def test_amalgamate_display():
    assert amalgamate(RUN_D, RUN_D, (1,)) == make_shape((7, 6, 3), (4, 1))


def test_amalgamate_rejects_whole_diagram():
    cell = make_shape((1,))
    with pytest.raises(ProtrusionFailure):
        amalgamate(cell, cell, (1,))


def test_amalgamated_power_cell_count():
    for n in range(2, 7):
        for shape in enumerate_connected(n):
            tops = set(protrusion(shape, "top"))
            bots = set(protrusion(shape, "bottom"))
            for omega in tops & bots:
                if sum(omega) >= shape.n_diagonals():
                    continue
                for r in range(1, 5):
                    power = amalgamated_power(shape, omega, r)
                    assert power.size == r * shape.size - (r - 1) * sum(omega)


def test_dot_omega_display():
    assert dot_omega(RUN_D, RUN_D, (1,)) == make_shape((6, 5, 4, 3), (3, 2, 1))


def test_dot_omega_column_square():
    col = make_shape((1, 1))
    assert dot_omega(col, col, (1,)) == make_shape((2, 2))


def test_dot_omega_single_cells_rejected():
    cell = make_shape((1,))
    with pytest.raises(ProtrusionFailure):
        dot_omega(cell, cell, (1,))


def test_dot_omega_not_defined_exists():
    # some (shape, omega) with two-sided protrusion but no skew projection
    hit = False
    for n in range(2, 7):
        for shape in enumerate_connected(n):
            tops = set(protrusion(shape, "top"))
            bots = set(protrusion(shape, "bottom"))
            for omega in tops & bots:
                if sum(omega) >= shape.n_diagonals():
                    continue
                try:
                    dot_omega(shape, shape, omega)
                except NotDefined:
                    hit = True
    assert hit


def test_amalgamated_compose_display():
    result = amalgamated_compose((2, 1, 3), RUN_D, (1,))
    assert result == make_shape(
        (17, 16, 13, 10, 9, 8, 7, 6, 3), (14, 11, 8, 7, 6, 5, 4, 1)
    )
    assert result.size == 2 * 6 - 1 + 6 + 3 * 6 - 2


def test_amalgamated_compose_identity():
    assert amalgamated_compose((1,), RUN_D, (1,)) == RUN_D


def test_amalgamated_compose_associativity():
    comps = [c for n in (1, 2, 3) for c in compositions(n)]
    for alpha in comps:
        for beta in comps:
            inner = amalgamated_compose(beta, RUN_D, (1,))
            lhs = amalgamated_compose(alpha, inner, (1,))
            glued = compose_alpha_d(alpha, ribbon_to_shape(beta))
            rhs = amalgamated_compose(shape_to_ribbon(glued), RUN_D, (1,))
            assert lhs == rhs


def test_amalgamate_rotation_compatibility():
    for n in range(2, 7):
        for shape in enumerate_connected(n):
            tops = set(protrusion(shape, "top"))
            bots = set(protrusion(shape, "bottom"))
            for omega in tops & bots:
                if sum(omega) >= shape.n_diagonals():
                    continue
                rot = shape.rotate180()
                omega_rev = tuple(reversed(omega))
                for r in (2, 3):
                    assert (
                        amalgamated_power(shape, omega, r).rotate180()
                        == amalgamated_power(rot, omega_rev, r)
                    )


def test_check_hypotheses_cases():
    assert check_hypotheses(RUN_D, (1,)).ok
    col = check_hypotheses(make_shape((1, 1)), (1,))
    assert not col.ok and "separated" in col.failures[0]
    cell = check_hypotheses(make_shape((1,)), (1,))
    assert not cell.ok


# -- hat -----------------------------------------------------------------------


def test_hat_display_example():
    d = make_shape((4, 4, 3, 3, 2), (3, 3, 1))
    result = hat(d)
    assert result.shape == make_shape((4, 3, 2), (3, 1))
    assert result.rows == ((4,), (), (2, 3), (1, 2))


def test_hat_single_row():
    assert hat(make_shape((5,))).shape == EMPTY
    assert hat(make_shape((5,))).rows == ()


def test_hat_empty():
    assert hat(EMPTY).shape == EMPTY
