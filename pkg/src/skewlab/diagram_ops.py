"""Gluing and composition operations on skew diagrams.

Covers concatenation, near-concatenation and disjoint sum, the two cell
replacement compositions alpha.compose(D) and D.compose(beta), ribbon
amalgamation along a protruding ribbon, amalgamated composition, and the
column-peeling "hat" map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagrams import (
    Cell,
    Composition,
    EMPTY,
    SkewShape,
    cells_of,
    normalize,
    ribbon_to_shape,
    shape_to_ribbon,
)
from .errors import NotDefined, NotSkew, ProtrusionFailure


# ---------------------------------------------------------------------------
# concatenation family


def join(d1: SkewShape, d2: SkewShape, mode: str) -> SkewShape:
    """Glue d2 to the northeast of d1.

    mode 'disjoint': no shared rows or columns (direct sum).
    mode 'concat': rightmost column of d1 = leftmost column of d2.
    mode 'near_concat': topmost row of d1 = bottommost row of d2.
    """
    if mode not in ("disjoint", "concat", "near_concat"):
        raise ValueError(f"unknown join mode {mode!r}")
    if not d1.outer:
        return d2
    if not d2.outer:
        return d1
    h2 = d2.n_rows
    w1 = d1.n_cols
    if mode == "disjoint":
        dr, dc = h2, 0
        er, ec = 0, w1
    elif mode == "concat":
        dr, dc = h2, 0
        er, ec = 0, w1 - 1
    else:
        dr, dc = h2 - 1, 0
        er, ec = 0, w1
    cells = [(i + dr, j + dc) for i, j in cells_of(d1)]
    cells += [(i + er, j + ec) for i, j in cells_of(d2)]
    if len(set(cells)) != len(cells):
        raise NotSkew("join produced overlapping cells")
    return normalize(cells)


def oplus(d1: SkewShape, d2: SkewShape) -> SkewShape:
    return join(d1, d2, "disjoint")


def concat(d1: SkewShape, d2: SkewShape) -> SkewShape:
    return join(d1, d2, "concat")


def near_concat(d1: SkewShape, d2: SkewShape) -> SkewShape:
    return join(d1, d2, "near_concat")


# ---------------------------------------------------------------------------
# compositions


def compose_alpha_d(alpha: Composition, d: SkewShape) -> SkewShape:
    """Replace each cell of the ribbon alpha by a copy of d.

    Copies in the same ribbon row are near-concatenated, consecutive rows
    are concatenated.
    """
    if not alpha:
        raise ValueError("alpha must be nonempty")
    if not d.outer:
        raise ValueError("d must be nonempty")
    result = None
    for row in alpha:
        block = d
        for _ in range(row - 1):
            block = near_concat(block, d)
        result = block if result is None else concat(result, block)
    return result


def compose_d_beta(d: SkewShape, beta: Composition) -> SkewShape:
    """Replace each cell of d by a copy of the ribbon beta.

    Horizontally adjacent cells give near-concatenated copies, vertically
    adjacent cells give concatenated copies.  Consistency of the local
    offsets around every 2x2 block of d is asserted during placement.
    """
    b = ribbon_to_shape(beta)
    if not d.outer:
        return EMPTY
    if not d.is_connected():
        from .diagrams import components

        result = EMPTY
        for comp in components(d):
            result = oplus(result, compose_d_beta(comp, beta))
        return result
    h, w = b.n_rows, b.n_cols
    # offset of the copy for each cell of d, solved by propagation over
    # horizontal and vertical adjacencies
    right = (-(h - 1), w)   # shift between copies sharing a row
    down = (h, -(w - 1))    # shift from a cell to the one below it
    cells = cells_of(d)
    start = min(cells)
    offset: dict[Cell, Cell] = {start: (0, 0)}
    queue = [start]
    while queue:
        i, j = queue.pop()
        r, c = offset[(i, j)]
        for cell, (dr, dc) in (
            ((i, j + 1), right),
            ((i, j - 1), (-right[0], -right[1])),
            ((i + 1, j), down),
            ((i - 1, j), (-down[0], -down[1])),
        ):
            if cell in cells:
                target = (r + dr, c + dc)
                if cell in offset:
                    assert offset[cell] == target, "inconsistent copy placement"
                else:
                    offset[cell] = target
                    queue.append(cell)
    assert len(offset) == len(cells)
    out = []
    bcells = cells_of(b)
    for r, c in offset.values():
        out.extend((r + i, c + j) for i, j in bcells)
    if len(set(out)) != len(out):
        raise NotSkew("copies overlap")
    return normalize(out)


# ---------------------------------------------------------------------------
# diagonal restrictions and protrusion


def _diagonal_cells(shape: SkewShape) -> dict[int, list[Cell]]:
    by_content: dict[int, list[Cell]] = {}
    for i, j in cells_of(shape):
        by_content.setdefault(j - i, []).append((i, j))
    return by_content


def restrict_to_diagonals(shape: SkewShape, contents: Iterable[int]) -> frozenset[Cell]:
    wanted = set(contents)
    return frozenset(c for c in cells_of(shape) if c[1] - c[0] in wanted)


def _cellset_is_ribbon(cells: frozenset[Cell]) -> bool:
    """One cell per content on a contiguous interval, consecutive cells adjacent."""
    if not cells:
        return False
    by_content: dict[int, Cell] = {}
    for cell in cells:
        d = cell[1] - cell[0]
        if d in by_content:
            return False
        by_content[d] = cell
    lo, hi = min(by_content), max(by_content)
    if set(by_content) != set(range(lo, hi + 1)):
        return False
    for d in range(lo, hi):
        i, j = by_content[d]
        if by_content[d + 1] not in ((i - 1, j), (i, j + 1)):
            return False
    return True


def _cellset_to_composition(cells: frozenset[Cell]) -> Composition:
    return shape_to_ribbon(normalize(cells))


def protrusion(shape: SkewShape, end: str) -> list[Composition]:
    """All ribbons protruding from the top (northeast) or bottom (southwest).

    A ribbon omega protrudes when the restriction of the diagram to its
    |omega| extreme diagonals equals omega and the restriction to one more
    diagonal is still a ribbon.
    """
    if end not in ("top", "bottom"):
        raise ValueError("end must be 'top' or 'bottom'")
    if not shape.outer:
        return []
    lo, hi = shape.contents()
    total = hi - lo + 1
    out = []
    for ell in range(1, total + 1):
        if end == "top":
            inner_r = range(hi - ell + 1, hi + 1)
            wider_r = range(max(lo, hi - ell), hi + 1)
        else:
            inner_r = range(lo, lo + ell)
            wider_r = range(lo, min(hi, lo + ell) + 1)
        inner = restrict_to_diagonals(shape, inner_r)
        wider = restrict_to_diagonals(shape, wider_r)
        if _cellset_is_ribbon(inner) and _cellset_is_ribbon(wider):
            out.append(_cellset_to_composition(inner))
    return out


def _protruding_cells(shape: SkewShape, omega: Composition, end: str) -> list[Cell]:
    """Cells of the protruding copy of omega, sorted by content."""
    lo, hi = shape.contents()
    k = sum(omega)
    if end == "top":
        rng = range(hi - k + 1, hi + 1)
    else:
        rng = range(lo, lo + k)
    cells = restrict_to_diagonals(shape, rng)
    if not _cellset_is_ribbon(cells) or _cellset_to_composition(cells) != omega:
        raise ProtrusionFailure(f"{omega} does not protrude from {end} of {shape}")
    if end == "top":
        wider = restrict_to_diagonals(shape, range(max(lo, hi - k), hi + 1))
    else:
        wider = restrict_to_diagonals(shape, range(lo, min(hi, lo + k) + 1))
    if not _cellset_is_ribbon(wider):
        raise ProtrusionFailure(f"{omega} does not protrude from {end} of {shape}")
    return sorted(cells, key=lambda c: c[1] - c[0])


def _require_nontrivial(shape: SkewShape, omega: Composition) -> None:
    if sum(omega) >= shape.n_diagonals():
        raise ProtrusionFailure(
            f"omega {omega} must be a proper part of {shape}"
        )


def amalgamate(d1: SkewShape, d2: SkewShape, omega: Composition) -> SkewShape:
    """Glue d2 on top of d1, identifying the two protruding copies of omega."""
    _require_nontrivial(d1, omega)
    _require_nontrivial(d2, omega)
    top = _protruding_cells(d1, omega, "top")
    bot = _protruding_cells(d2, omega, "bottom")
    di = top[0][0] - bot[0][0]
    dj = top[0][1] - bot[0][1]
    assert all(
        (b[0] + di, b[1] + dj) == t for b, t in zip(bot, top)
    ), "protruding copies are not translates"
    cells = set(cells_of(d1))
    overlap = 0
    for i, j in cells_of(d2):
        cell = (i + di, j + dj)
        if cell in cells:
            overlap += 1
        cells.add(cell)
    if overlap != sum(omega):
        raise ProtrusionFailure("amalgamation overlaps outside omega")
    return normalize(cells)


def amalgamated_power(d: SkewShape, omega: Composition, r: int) -> SkewShape:
    if r < 1:
        raise ValueError("power must be >= 1")
    result = d
    for _ in range(r - 1):
        result = amalgamate(result, d, omega)
    return result


def _power_with_anchors(
    d: SkewShape, omega: Composition, r: int
) -> tuple[frozenset[Cell], tuple[Cell, ...], tuple[Cell, ...]]:
    """Cells of the r-th amalgamated power plus its two extreme omega copies.

    The anchors are the omega copy of the first (southwest) and last
    (northeast) glued factor, tracked through the construction; for deep
    overlaps they are not recoverable from the result's diagonals alone.
    """
    _require_nontrivial(d, omega)
    top = _protruding_cells(d, omega, "top")
    bot = _protruding_cells(d, omega, "bottom")
    cells = set(cells_of(d))
    ne_anchor = list(top)
    for _ in range(r - 1):
        di = ne_anchor[0][0] - bot[0][0]
        dj = ne_anchor[0][1] - bot[0][1]
        assert all(
            (b[0] + di, b[1] + dj) == t for b, t in zip(bot, ne_anchor)
        ), "protruding copies are not translates"
        overlap = 0
        for i, j in cells_of(d):
            cell = (i + di, j + dj)
            if cell in cells:
                overlap += 1
            cells.add(cell)
        if overlap != sum(omega):
            raise ProtrusionFailure("amalgamation overlaps outside omega")
        ne_anchor = [(i + di, j + dj) for i, j in top]
    return frozenset(cells), tuple(bot), tuple(ne_anchor)


def dot_omega(d1: SkewShape, d2: SkewShape, omega: Composition) -> SkewShape:
    """The unique skew projection of d1 onto d2 along omega.

    The two copies of omega are placed on the same diagonals, adjacent,
    with d1's copy either northwest (outer) or southeast (inner) of d2's;
    at most one of the two placements is a skew diagram.
    """
    _require_nontrivial(d1, omega)
    _require_nontrivial(d2, omega)
    top = _protruding_cells(d1, omega, "top")
    bot = _protruding_cells(d2, omega, "bottom")
    results = []
    for shift in (1, -1):
        # shift +1: d1's omega immediately northwest of d2's omega
        di = top[0][0] - bot[0][0] + shift
        dj = top[0][1] - bot[0][1] + shift
        cells = list(cells_of(d1)) + [
            (i + di, j + dj) for i, j in cells_of(d2)
        ]
        if len(set(cells)) != len(cells):
            continue
        try:
            results.append(normalize(cells))
        except NotSkew:
            continue
    if not results:
        raise NotDefined(
            f"neither projection of {d1} onto {d2} along {omega} is skew"
        )
    assert len(results) == 1, "both projections are skew"
    return results[0]


def amalgamated_compose(
    alpha: Composition, d: SkewShape, omega: Composition
) -> SkewShape:
    """Assemble amalgamated powers of d along omega following alpha.

    Consecutive powers are placed like the projection of d onto d: the
    omega copy of the previous block's last factor and the next block's
    first factor sit adjacent on the same diagonals.  The placement is
    anchored to the extreme factors, so products of powers stay defined
    whenever the base projection is.
    """
    if not alpha:
        raise ValueError("alpha must be nonempty")
    blocks = [_power_with_anchors(d, omega, r) for r in alpha]
    cells = set(blocks[0][0])
    ne_anchor = blocks[0][2]
    for bcells, sw_anchor, block_ne in blocks[1:]:
        placed = None
        for shift in (1, -1):
            di = ne_anchor[0][0] - sw_anchor[0][0] + shift
            dj = ne_anchor[0][1] - sw_anchor[0][1] + shift
            moved = {(i + di, j + dj) for i, j in bcells}
            if moved & cells:
                continue
            try:
                normalize(cells | moved)
            except NotSkew:
                continue
            assert placed is None, "both projections are skew"
            placed = (moved, di, dj)
        if placed is None:
            raise NotDefined(
                f"no skew projection while assembling {alpha} over {omega}"
            )
        moved, di, dj = placed
        cells |= moved
        ne_anchor = [(i + di, j + dj) for i, j in block_ne]
    return normalize(cells)


@dataclass(frozen=True)
class HypothesesReport:
    ok: bool
    failures: tuple[str, ...]


def check_hypotheses(d: SkewShape, omega: Composition) -> HypothesesReport:
    """Connectivity, two-sided protrusion, defined projection, separation."""
    failures = []
    if not d.is_connected():
        failures.append("disconnected")
    if omega not in protrusion(d, "top"):
        failures.append("no top protrusion")
    if omega not in protrusion(d, "bottom"):
        failures.append("no bottom protrusion")
    if not failures:
        if d.n_diagonals() < 2 * sum(omega) + 1:
            failures.append("copies of omega not separated by a diagonal")
        try:
            dot_omega(d, d, omega)
        except (NotDefined, ProtrusionFailure):
            failures.append("projection not defined")
    return HypothesesReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# hat


@dataclass(frozen=True)
class HatDiagram:
    """Result of removing the top cell of every column.

    ``rows`` keeps the pre-normalization bookkeeping: occupied columns per
    row between the first and last nonempty rows, empty rows included, so
    window overlaps remain observable.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]


def hat(shape: SkewShape) -> HatDiagram:
    cells = set(cells_of(shape))
    for j in {c for _, c in cells}:
        top = min(i for i, c in cells if c == j)
        cells.remove((top, j))
    if not cells:
        return HatDiagram(EMPTY, ())
    by_row: dict[int, list[int]] = {}
    for i, j in cells:
        by_row.setdefault(i, []).append(j)
    first, last = min(by_row), max(by_row)
    rows = tuple(
        tuple(sorted(by_row.get(i, ()))) for i in range(first, last + 1)
    )
    return HatDiagram(normalize(cells), rows)
