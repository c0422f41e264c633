"""Necessary invariants of skew equivalence: overlaps, rank, fingerprint."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .diagrams import Partition, SkewShape, partitions, weight
from .symfunc import (
    SchurVector,
    character,
    lowest_power,
    principal_eval,
    schur_expand_lr,
)

RowRecord = Sequence[Sequence[int]]


@dataclass(frozen=True)
class OverlapProfile:
    """Window overlap data of a diagram.

    ``row_comps[k-1]`` lists, for every window of k consecutive rows, the
    number of columns occupied by all of them (zeros permitted);
    ``row_parts`` are the sorted forms with zeros dropped.  ``rect[k-1][l-1]``
    counts the k x l rectangles contained in the diagram.
    """

    row_comps: tuple[tuple[int, ...], ...]
    row_parts: tuple[Partition, ...]
    col_comps: tuple[tuple[int, ...], ...]
    col_parts: tuple[Partition, ...]
    rect: tuple[tuple[int, ...], ...]


def overlap_compositions(rows: RowRecord) -> tuple[tuple[int, ...], ...]:
    """k-row overlap compositions of a row record (column sets per row)."""
    sets = [frozenset(r) for r in rows]
    out = []
    for k in range(1, len(sets) + 1):
        comp = []
        for i in range(len(sets) - k + 1):
            common = sets[i]
            for j in range(i + 1, i + k):
                common = common & sets[j]
            comp.append(len(common))
        out.append(tuple(comp))
    return tuple(out)


def _rows_of(shape: SkewShape) -> list[range]:
    return [range(a, b + 1) for a, b in shape.row_intervals()]


def overlaps(shape: SkewShape) -> OverlapProfile:
    row_comps = overlap_compositions(_rows_of(shape))
    col_comps = overlap_compositions(_rows_of(shape.transpose()))

    def parts(comps):
        return tuple(
            tuple(sorted((x for x in comp if x), reverse=True))
            for comp in comps
        )

    max_w = max((max(c) for c in row_comps if c), default=0)
    rect = tuple(
        tuple(
            sum(max(0, x - l + 1) for x in comp) for l in range(1, max_w + 1)
        )
        for comp in row_comps
    )
    return OverlapProfile(
        row_comps, parts(row_comps), col_comps, parts(col_comps), rect
    )


def prefilter_key(shape: SkewShape) -> tuple:
    """Row overlap partitions for all k; shared by skew-equivalent diagrams."""
    return overlaps(shape).row_parts


# ---------------------------------------------------------------------------
# Frobenius rank


def frobenius_rank(shape: SkewShape) -> int:
    """Minimum power sum length with nonzero coefficient (character route)."""
    if not shape.outer:
        raise ValueError("rank of the empty diagram is undefined")
    n = shape.size
    for length in range(1, n + 1):
        for nu in partitions(n):
            if len(nu) != length:
                continue
            if character(shape, nu):
                return length
    raise AssertionError("no power sum term found")


def rank_from_principal(vec: SchurVector) -> int:
    """Order of vanishing at t = 0 of the principal specialization."""
    return lowest_power(principal_eval(vec))


def rank_brute_force(shape: SkewShape) -> int:
    """Minimum number of ribbons partitioning the cells (test-scale only)."""
    cells = frozenset(shape.cells())
    if not cells:
        raise ValueError("rank of the empty diagram is undefined")
    best = [len(cells)]

    def ribbons_from(start, remaining):
        """All up/right walks inside remaining starting at start."""
        walks = [[start]]
        yield frozenset([start])
        while walks:
            walk = walks.pop()
            i, j = walk[-1]
            for nxt in ((i - 1, j), (i, j + 1)):
                if nxt in remaining and nxt not in walk:
                    new = walk + [nxt]
                    walks.append(new)
                    yield frozenset(new)

    def rec(remaining: frozenset, used: int) -> None:
        if not remaining:
            best[0] = min(best[0], used)
            return
        if used + 1 >= best[0]:
            return
        start = min(remaining, key=lambda c: (c[1] - c[0], c[0]))
        for walk in ribbons_from(start, remaining):
            rec(remaining - walk, used + 1)

    rec(cells, 0)
    return best[0]


# ---------------------------------------------------------------------------
# fingerprint


@lru_cache(maxsize=200000)
def fingerprint(shape: SkewShape) -> SchurVector:
    """Canonical Schur expansion; equality is exactly skew equivalence."""
    return schur_expand_lr(shape)


def equivalent(d1: SkewShape, d2: SkewShape) -> bool:
    return fingerprint(d1) == fingerprint(d2)
