"""Partitions, compositions and canonical skew diagrams.

Partitions and compositions are plain tuples of positive integers.  A
``SkewShape`` stores the canonical pair (outer, inner): no empty rows, no
empty columns, trailing inner zeros trimmed.  Two cell sets that differ by
translation or by empty rows/columns normalize to the identical value, so
shapes can be used directly as dictionary keys.

Coordinates are matrix style: row 1 on top, column 1 on the left.  The
content of cell (i, j) is j - i.  Ribbons are identified with compositions
of row sizes read bottom-to-top.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import NotRibbon, NotSkew

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Cell = tuple[int, int]

ENV_MAX_CELLS = "SKEWLAB_MAX_CELLS"
DEFAULT_MAX_CELLS = 12


# ---------------------------------------------------------------------------
# partition / composition helpers


def is_partition(parts: Sequence[int]) -> bool:
    return all(a > 0 for a in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


def transpose_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for part in lam:
        for j in range(part):
            out[j] += 1
    return tuple(out)


def contains(lam: Partition, mu: Partition) -> bool:
    """Inclusion order: mu_i <= lam_i for all i."""
    if len(mu) > len(lam):
        if any(m > 0 for m in mu[len(lam):]):
            return False
    return all(m <= l for m, l in zip(mu, lam))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <=_dom lam for partitions of the same weight."""
    if weight(mu) != weight(lam):
        raise ValueError("dominance order needs equal weights")
    pm = pl = 0
    for i in range(min(len(mu), len(lam))):
        pm += mu[i]
        pl += lam[i]
        if pm > pl:
            return False
    return True


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts bounded by max_part, descending lex."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_upto_length(n: int, max_len: int) -> Iterator[Partition]:
    for lam in partitions(n):
        if len(lam) <= max_len:
            yield lam


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All mu with mu included in lam (weakly decreasing, trailing zeros trimmed)."""

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for part in range(min(prev, lam[i]), -1, -1):
            if part == 0:
                yield ()
                break
            for rest in rec(i + 1, part):
                yield (part,) + rest

    yield from rec(0, lam[0] if lam else 0)


def compositions(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def composition_to_subset(alpha: Composition) -> frozenset[int]:
    """Partial-sum bijection onto subsets of [n-1]."""
    total, out = 0, []
    for part in alpha[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def subset_to_composition(subset: Iterable[int], n: int) -> Composition:
    cuts = sorted(subset)
    if any(c < 1 or c > n - 1 for c in cuts):
        raise ValueError("subset must live in [n-1]")
    prev, out = 0, []
    for c in cuts + [n]:
        out.append(c - prev)
        prev = c
    return tuple(out)


# ---------------------------------------------------------------------------
# the canonical skew shape


@dataclass(frozen=True)
class SkewShape:
    """Canonical skew diagram outer/inner.

    Instances must already be canonical; use :func:`make_shape` or
    :func:`normalize` to build one from raw data.
    """

    outer: Partition = ()
    inner: Partition = ()

    def __post_init__(self) -> None:
        lam, mu = self.outer, self.inner
        if not is_partition(lam) or not is_partition(mu):
            raise NotSkew(f"not partitions: {lam}/{mu}")
        if len(mu) > len(lam) or not contains(lam, mu):
            raise NotSkew(f"inner not contained in outer: {lam}/{mu}")
        mu_pad = mu + (0,) * (len(lam) - len(mu))
        if any(l <= m for l, m in zip(lam, mu_pad)):
            raise NotSkew(f"empty row in {lam}/{mu}")
        if lam:
            covered = set()
            for l, m in zip(lam, mu_pad):
                covered.update(range(m + 1, l + 1))
            if covered != set(range(1, lam[0] + 1)):
                raise NotSkew(f"empty column in {lam}/{mu}")

    # -- basic geometry ----------------------------------------------------

    @property
    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def n_cols(self) -> int:
        return self.outer[0] if self.outer else 0

    def inner_padded(self) -> Partition:
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    def row_intervals(self) -> tuple[tuple[int, int], ...]:
        """Per row, the (first, last) occupied column, top to bottom."""
        return tuple(
            (m + 1, l) for l, m in zip(self.outer, self.inner_padded())
        )

    def cells(self) -> frozenset[Cell]:
        return cells_of(self)

    def contents(self) -> tuple[int, int]:
        """(min, max) content over all cells; undefined on the empty shape."""
        if not self.outer:
            raise ValueError("empty diagram has no contents")
        spans = [
            (a - i, b - i)
            for i, (a, b) in enumerate(self.row_intervals(), start=1)
        ]
        return min(s for s, _ in spans), max(e for _, e in spans)

    def n_diagonals(self) -> int:
        if not self.outer:
            return 0
        lo, hi = self.contents()
        return hi - lo + 1

    # -- predicates ----------------------------------------------------------

    def is_connected(self) -> bool:
        if not self.outer:
            return False
        iv = self.row_intervals()
        return all(
            iv[i + 1][1] >= iv[i][0] for i in range(len(iv) - 1)
        )

    def has_2x2(self) -> bool:
        iv = self.row_intervals()
        for i in range(len(iv) - 1):
            lo = max(iv[i][0], iv[i + 1][0])
            hi = min(iv[i][1], iv[i + 1][1])
            if hi - lo + 1 >= 2:
                return True
        return False

    def is_ribbon(self) -> bool:
        return self.is_connected() and not self.has_2x2()

    # -- symmetries ----------------------------------------------------------

    def transpose(self) -> "SkewShape":
        return SkewShape(
            transpose_partition(self.outer), transpose_partition(self.inner)
        )

    def rotate180(self) -> "SkewShape":
        return normalize((-i, -j) for i, j in self.cells())

    # -- formats ---------------------------------------------------------------

    def compact(self) -> str:
        return "%s/%s" % (
            ",".join(map(str, self.outer)),
            ",".join(map(str, self.inner)),
        )

    def ascii(self) -> str:
        lines = []
        for a, b in self.row_intervals():
            lines.append("." * (a - 1) + "X" * (b - a + 1) + "." * (self.n_cols - b))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.compact()


EMPTY = SkewShape((), ())


@lru_cache(maxsize=None)
def cells_of(shape: SkewShape) -> frozenset[Cell]:
    out = set()
    for i, (a, b) in enumerate(shape.row_intervals(), start=1):
        out.update((i, j) for j in range(a, b + 1))
    return frozenset(out)


def make_shape(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    """Normalize an arbitrary valid outer/inner pair."""
    lam = tuple(outer)
    mu = tuple(inner)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    if not is_partition(lam) or not is_partition(mu):
        raise NotSkew(f"not partitions: {lam}/{mu}")
    if not contains(lam, mu):
        raise NotSkew(f"inner not contained in outer: {lam}/{mu}")
    mu_pad = mu + (0,) * (len(lam) - len(mu))
    cells = []
    for i, (l, m) in enumerate(zip(lam, mu_pad), start=1):
        cells.extend((i, j) for j in range(m + 1, l + 1))
    return normalize(cells)


def normalize(cells: Iterable[Cell]) -> SkewShape:
    """Canonical shape of a cell set, or NotSkew.

    Empty rows and columns are removed and the result is translated so the
    top-left occupied row/column is 1; re-normalizing any translate returns
    the identical value.
    """
    by_row: dict[int, set[int]] = {}
    for i, j in cells:
        by_row.setdefault(i, set()).add(j)
    if not by_row:
        return EMPTY
    row_ids = sorted(by_row)
    col_ids = sorted({j for js in by_row.values() for j in js})
    col_index = {j: k + 1 for k, j in enumerate(col_ids)}
    intervals = []
    for i in row_ids:
        js = sorted(col_index[j] for j in by_row[i])
        if js != list(range(js[0], js[0] + len(js))):
            raise NotSkew("row is not contiguous")
        intervals.append((js[0], js[-1]))
    for (a1, b1), (a2, b2) in zip(intervals, intervals[1:]):
        if a2 > a1 or b2 > b1:
            raise NotSkew("row starts/ends must weakly decrease downwards")
    lam = tuple(b for _, b in intervals)
    mu = tuple(a - 1 for a, _ in intervals)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    return SkewShape(lam, mu)


# ---------------------------------------------------------------------------
# connectivity


def components(shape: SkewShape) -> list[SkewShape]:
    """Maximal direct-sum decomposition, southwest component first."""
    if not shape.outer:
        return []
    iv = shape.row_intervals()
    blocks: list[list[int]] = [[0]]
    for i in range(1, len(iv)):
        if iv[i][1] >= iv[i - 1][0]:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    cells = cells_of(shape)
    out = []
    for block in reversed(blocks):
        rows = set(r + 1 for r in block)
        out.append(normalize(c for c in cells if c[0] in rows))
    return out


# ---------------------------------------------------------------------------
# ribbons <-> compositions


def ribbon_to_shape(alpha: Composition) -> SkewShape:
    """The unique ribbon with alpha_i cells in the i-th row from the bottom."""
    if any(a <= 0 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    if not alpha:
        return EMPTY
    ell = len(alpha)
    start = 1
    cells = []
    for k, part in enumerate(alpha):  # k-th row from the bottom
        row = ell - k
        cells.extend((row, start + t) for t in range(part))
        start += part - 1
    return normalize(cells)


def shape_to_ribbon(shape: SkewShape) -> Composition:
    if not shape.is_connected():
        raise NotRibbon(f"{shape} is disconnected")
    if shape.has_2x2():
        raise NotRibbon(f"{shape} contains a 2x2 block")
    return tuple(b - a + 1 for a, b in reversed(shape.row_intervals()))


# ---------------------------------------------------------------------------
# enumeration


def max_cells_cap() -> int:
    return int(os.environ.get(ENV_MAX_CELLS, str(DEFAULT_MAX_CELLS)))


def enumerate_connected(n: int, ignore_cap: bool = False) -> list[SkewShape]:
    """All connected canonical shapes with n cells, deterministic order.

    A connected canonical shape is determined by its row sizes (top to
    bottom) together with the number of columns shared by each consecutive
    row pair, which ranges over 1..min of the two sizes.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not ignore_cap and n > max_cells_cap():
        raise ValueError(
            f"n={n} exceeds {ENV_MAX_CELLS} cap {max_cells_cap()}"
        )
    out: list[SkewShape] = []

    def rec(remaining: int, rows: list[int], overlaps: list[int]) -> None:
        if remaining == 0:
            out.append(_shape_from_rows_overlaps(rows, overlaps))
            return
        for size in range(1, remaining + 1):
            if not rows:
                rec(remaining - size, [size], overlaps)
            else:
                for o in range(1, min(rows[-1], size) + 1):
                    rows.append(size)
                    overlaps.append(o)
                    rec(remaining - size, rows, overlaps)
                    rows.pop()
                    overlaps.pop()

    rec(n, [], [])
    out.sort(key=lambda s: (s.n_rows, s.outer, s.inner))
    return out


def _shape_from_rows_overlaps(rows: Sequence[int], overlaps: Sequence[int]) -> SkewShape:
    # rows top-to-bottom; overlap[i] = columns shared by rows i and i+1
    starts = [0] * len(rows)
    starts[-1] = 1
    for i in range(len(rows) - 2, -1, -1):
        starts[i] = starts[i + 1] + rows[i + 1] - overlaps[i]
    lam = tuple(s + r - 1 for s, r in zip(starts, rows))
    mu = tuple(s - 1 for s in starts)
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    return SkewShape(lam, mu)


# ---------------------------------------------------------------------------
# text formats


def parse_compact(text: str) -> SkewShape:
    text = text.strip()
    outer_s, _, inner_s = text.partition("/")
    try:
        outer = tuple(int(p) for p in outer_s.split(",") if p.strip())
        inner = tuple(int(p) for p in inner_s.split(",") if p.strip())
    except ValueError as exc:
        raise NotSkew(f"cannot parse shape {text!r}") from exc
    return make_shape(outer, inner)


def parse_ascii(text: str) -> SkewShape:
    cells = []
    for i, line in enumerate(text.splitlines(), start=1):
        for j, ch in enumerate(line.rstrip(), start=1):
            if ch == "X":
                cells.append((i, j))
            elif ch not in ". ":
                raise NotSkew(f"unexpected character {ch!r} in ascii diagram")
    return normalize(cells)
