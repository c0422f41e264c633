"""Outside decompositions, cutting strips, and ribbon staircases.

An outside decomposition splits a diagram into ribbons whose extreme cells
sit on the perimeter.  All its ribbons embed into a single cutting strip
and are recorded as content intervals, which is what the Hamel-Goulden
determinant consumes.  Ribbon staircases are the special decompositions
whose pieces are m-fold unions of one generator ribbon; their layout is
encoded by a nesting word over ``. ( ) |``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

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
from .diagram_ops import (
    _cellset_is_ribbon,
    amalgamate,
    protrusion,
)
from .errors import (
    Disconnected,
    IntersectionUndefined,
    InvalidDecomposition,
    InvalidNesting,
    NotSkew,
    TrivialIntersection,
)


# ---------------------------------------------------------------------------
# outside decompositions


@dataclass(frozen=True)
class OutsideDecomposition:
    """Ordered ribbons of an outside decomposition with their content intervals.

    ``strip_walk`` lists the cutting strip's cells indexed by rebased
    content 0..n-1; ``intervals[k]`` is the rebased content interval of the
    k-th ribbon.  The ribbon of an interval [p, q] is ``theta(p, q)``;
    p == q + 1 denotes the empty ribbon and p > q + 1 an undefined one.
    """

    shape: SkewShape
    ribbons: tuple[frozenset[Cell], ...]
    intervals: tuple[tuple[int, int], ...]
    strip_walk: tuple[Cell, ...]

    @property
    def cutting_strip(self) -> Composition:
        return shape_to_ribbon(normalize(self.strip_walk))

    def theta(self, p: int, q: int) -> Optional[SkewShape]:
        """Subribbon of the cutting strip; EMPTY for p = q + 1, None if undefined."""
        if p == q + 1:
            return EMPTY
        if p > q + 1:
            return None
        return normalize(self.strip_walk[p : q + 1])

    def entry(self, i: int, j: int) -> Optional[SkewShape]:
        """Ribbon for matrix position (i, j), 1-based: theta[p_j, q_i]."""
        p = self.intervals[j - 1][0]
        q = self.intervals[i - 1][1]
        return self.theta(p, q)

    def size(self) -> int:
        return len(self.ribbons)


def hash_ribbon(pi: OutsideDecomposition, i: int, j: int) -> Optional[SkewShape]:
    return pi.entry(i, j)


def _diag_bottoms(cells: Iterable[Cell]) -> dict[int, Cell]:
    out: dict[int, Cell] = {}
    for cell in cells:
        d = cell[1] - cell[0]
        if d not in out or cell[0] > out[d][0]:
            out[d] = cell
    return out


def _diag_tops(cells: Iterable[Cell]) -> dict[int, Cell]:
    out: dict[int, Cell] = {}
    for cell in cells:
        d = cell[1] - cell[0]
        if d not in out or cell[0] < out[d][0]:
            out[d] = cell
    return out


def _cellset_components(cells: frozenset[Cell]) -> list[frozenset[Cell]]:
    """Direct-sum components of a (possibly gappy) skew cell set, bottom first."""
    by_row: dict[int, list[int]] = {}
    for i, j in cells:
        by_row.setdefault(i, []).append(j)
    rows = sorted(by_row, reverse=True)
    blocks: list[list[int]] = []
    for r in rows:
        lo, hi = min(by_row[r]), max(by_row[r])
        if blocks:
            prev = blocks[-1][-1]
            # previous processed row is below; rows must be adjacent and overlap
            plo, phi = min(by_row[prev]), max(by_row[prev])
            if r == prev - 1 and not (hi < plo or lo > phi):
                blocks[-1].append(r)
                continue
        blocks.append([r])
    return [
        frozenset(c for c in cells if c[0] in set(block)) for block in blocks
    ]


def _border_ribbons(cells: frozenset[Cell], side: str) -> list[frozenset[Cell]]:
    """Recursive border strips; deterministic but the order is re-sorted later."""
    if not cells:
        return []
    picker = _diag_bottoms if side == "se" else _diag_tops
    border = frozenset(picker(cells).values())
    assert _cellset_is_ribbon(border), "border strip is not a ribbon"
    out = [border]
    rest = cells - border
    for comp in _cellset_components(rest):
        out.extend(_border_ribbons(comp, side))
    return out


def border_decomposition(shape: SkewShape, side: str) -> OutsideDecomposition:
    """Southeast or northwest decomposition of a connected diagram.

    The cutting strip is the first ribbon; the rest are ordered southwest
    to northeast by minimal content.
    """
    if side not in ("se", "nw"):
        raise ValueError("side must be 'se' or 'nw'")
    if not shape.is_connected():
        raise Disconnected(f"{shape} is not connected")
    cells = cells_of(shape)
    ribbons = _border_ribbons(cells, side)
    lo, _ = shape.contents()
    first, rest = ribbons[0], ribbons[1:]
    rest.sort(key=lambda r: min(c[1] - c[0] for c in r))
    ordered = [first] + rest
    intervals = tuple(
        (
            min(c[1] - c[0] for c in r) - lo,
            max(c[1] - c[0] for c in r) - lo,
        )
        for r in ordered
    )
    walk = tuple(sorted(first, key=lambda c: c[1] - c[0]))
    return OutsideDecomposition(shape, tuple(ordered), intervals, walk)


def from_ribbons(
    shape: SkewShape, ribbons: Sequence[Iterable[Cell]]
) -> OutsideDecomposition:
    """Validate an arbitrary outside decomposition given as cell sets."""
    rsets = [frozenset(r) for r in ribbons]
    cells = cells_of(shape)
    seen: set[Cell] = set()
    for r in rsets:
        if not _cellset_is_ribbon(r):
            raise InvalidDecomposition("piece is not a ribbon")
        if r & seen:
            raise InvalidDecomposition("ribbons overlap")
        seen |= r
    if seen != cells:
        raise InvalidDecomposition("ribbons do not cover the diagram")

    lo, hi = shape.contents()
    # up/right direction per diagonal, forced by in-ribbon successors and
    # by the perimeter rule for northeasternmost cells
    direction: dict[int, str] = {}

    def force(d: int, val: str) -> None:
        if direction.setdefault(d, val) != val:
            raise InvalidDecomposition(
                f"cells on diagonal {d} disagree on up/right"
            )

    for r in rsets:
        ne = max(r, key=lambda c: c[1] - c[0])
        sw = min(r, key=lambda c: c[1] - c[0])
        if (sw[0], sw[1] - 1) in cells and (sw[0] + 1, sw[1]) in cells:
            raise InvalidDecomposition(
                "southwestern end not on the left or bottom perimeter"
            )
        on_top = (ne[0] - 1, ne[1]) not in cells
        on_right = (ne[0], ne[1] + 1) not in cells
        if not (on_top or on_right):
            raise InvalidDecomposition(
                "northeastern end not on the top or right perimeter"
            )
        for i, j in r:
            d = j - i - lo
            if (i - 1, j) in r:
                force(d, "up")
            elif (i, j + 1) in r:
                force(d, "right")
            elif (i, j) == ne and d < hi - lo:
                if on_top and not on_right:
                    force(d, "up")
                elif on_right and not on_top:
                    force(d, "right")

    walk = [(0, 0)]
    for d in range(hi - lo):
        i, j = walk[-1]
        if direction.get(d, "up") == "up":
            walk.append((i - 1, j))
        else:
            walk.append((i, j + 1))

    pi = OutsideDecomposition(
        shape,
        tuple(rsets),
        tuple(
            (
                min(c[1] - c[0] for c in r) - lo,
                max(c[1] - c[0] for c in r) - lo,
            )
            for r in rsets
        ),
        tuple(walk),
    )
    for r, (p, q) in zip(pi.ribbons, pi.intervals):
        if normalize(r) != pi.theta(p, q):
            raise InvalidDecomposition(
                "ribbon does not match its cutting-strip interval"
            )
    return pi


# ---------------------------------------------------------------------------
# m-intersections and staircases


def m_intersect(alpha: Composition, beta: Composition, m: int) -> Composition:
    """The m-row ribbon protruding from the top of alpha and bottom of beta."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        omega: Composition = (min(alpha[-1], beta[0]),)
    else:
        if m - 1 > len(beta) or m > len(alpha):
            raise IntersectionUndefined(f"no {m}-intersection of {alpha}, {beta}")
        omega = tuple(beta[: m - 1]) + (alpha[-1],)
    if omega not in protrusion(ribbon_to_shape(alpha), "top"):
        raise IntersectionUndefined(f"{omega} does not protrude from top of {alpha}")
    if omega not in protrusion(ribbon_to_shape(beta), "bottom"):
        raise IntersectionUndefined(f"{omega} does not protrude from bottom of {beta}")
    return omega


def m_union(alpha: Composition, beta: Composition, m: int) -> Composition:
    omega = m_intersect(alpha, beta, m)
    if omega == alpha or omega == beta:
        raise TrivialIntersection(f"{m}-union of {alpha} and {beta} is trivial")
    glued = amalgamate(ribbon_to_shape(alpha), ribbon_to_shape(beta), omega)
    return shape_to_ribbon(glued)


def staircase(alpha: Composition, m: int, k: int) -> SkewShape:
    """k-fold m-union of alpha with itself, as a shape."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if m >= len(alpha):
        raise ValueError("m must be smaller than the number of rows of alpha")
    omega = m_intersect(alpha, alpha, m)
    if omega == alpha:
        raise TrivialIntersection(f"{m}-intersection of {alpha} with itself is trivial")
    comp = alpha
    for _ in range(k - 1):
        comp = m_union(comp, alpha, m)
    return ribbon_to_shape(comp)


# ---------------------------------------------------------------------------
# nestings


NESTING_ALPHABET = ".(|)"


def validate_nesting(word: str) -> None:
    depth = 0
    for ch in word:
        if ch not in NESTING_ALPHABET:
            raise InvalidNesting(f"bad letter {ch!r}")
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidNesting(f"unbalanced parentheses in {word!r}")
    if depth != 0:
        raise InvalidNesting(f"unbalanced parentheses in {word!r}")


def reverse_nesting(word: str) -> str:
    swap = {"(": ")", ")": "(", ".": ".", "|": "|"}
    return "".join(swap[ch] for ch in reversed(word))


@dataclass(frozen=True)
class StaircasePresentation:
    alpha: Composition
    m: int
    k: int
    nesting: str
    side: str  # "se" | "nw"

    def reversed(self) -> "StaircasePresentation":
        return StaircasePresentation(
            self.alpha, self.m, self.k, reverse_nesting(self.nesting), self.side
        )


def _nesting_intervals(
    word: str, n_copies: int, span: int, step: int, omega_size: int
) -> list[tuple[int, int]]:
    """Content intervals of the non-strip ribbons encoded by a nesting word."""
    validate_nesting(word)
    if len(word) != n_copies - 1:
        raise InvalidNesting(
            f"word length {len(word)} != {n_copies - 1} for height {n_copies}"
        )
    out = []
    stack = []
    for pos, ch in enumerate(word, start=1):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            i = stack.pop()
            out.append((i * step, (pos - 1) * step + span - 1))
        elif ch == "|":
            out.append((pos * step, (pos - 1) * step + span - 1))
    return out


def build_from_staircase(pres: StaircasePresentation) -> SkewShape:
    """The unique diagram whose border decomposition realizes the presentation."""
    if pres.side not in ("se", "nw"):
        raise ValueError("side must be 'se' or 'nw'")
    alpha, m, k = pres.alpha, pres.m, pres.k
    strip = staircase(alpha, m, k)
    size_a = sum(alpha)
    omega = m_intersect(alpha, alpha, m)
    step = size_a - sum(omega)
    intervals = [(0, strip.size - 1)]
    intervals += _nesting_intervals(pres.nesting, k, size_a, step, sum(omega))
    counts = [0] * strip.size
    for p, q in intervals:
        for d in range(p, q + 1):
            counts[d] += 1
    walk = sorted(cells_of(strip), key=lambda c: c[1] - c[0])
    cells = []
    sign = -1 if pres.side == "se" else 1
    for d, (i, j) in enumerate(walk):
        cells.extend((i + sign * t, j + sign * t) for t in range(counts[d]))
    try:
        return normalize(cells)
    except NotSkew as exc:
        raise InvalidNesting(f"nesting {pres.nesting!r} does not yield a diagram") from exc


def detect_staircase(shape: SkewShape, side: str) -> Optional[StaircasePresentation]:
    """A presentation whose build reproduces the shape, or None.

    When several (alpha, m) generate the decomposition the lexicographically
    least pair is returned; uniqueness is not asserted.
    """
    if not shape.is_connected():
        raise Disconnected(f"{shape} is not connected")
    pi = border_decomposition(shape, side)
    theta = pi.cutting_strip
    candidates = []
    for alpha, m, k in _staircase_parameters(theta):
        size_a = sum(alpha)
        omega = m_intersect(alpha, alpha, m)
        step = size_a - sum(omega)
        word = _match_nesting(pi, alpha, m, k, size_a, sum(omega), step)
        if word is not None:
            candidates.append(StaircasePresentation(alpha, m, k, word, side))
    if not candidates:
        return None
    return min(candidates, key=lambda p: (p.alpha, p.m))


def _staircase_parameters(theta: Composition):
    """(alpha, m, k) with the k-fold m-union of alpha equal to theta."""
    rows = len(theta)
    for big_l in range(2, rows + 1):
        for m in range(1, big_l):
            if big_l == rows:
                k = 1
                alpha = theta
            else:
                if (rows - m) % (big_l - m):
                    continue
                k = (rows - m) // (big_l - m)
                if k < 2:
                    continue
                alpha = tuple(theta[: big_l - 1]) + (theta[-1],)
            try:
                built = staircase(alpha, m, k)
            except (IntersectionUndefined, TrivialIntersection, Exception) as exc:
                if not isinstance(
                    exc, (IntersectionUndefined, TrivialIntersection)
                ):
                    continue
                continue
            if shape_to_ribbon(built) == theta:
                yield alpha, m, k


def _match_nesting(
    pi: OutsideDecomposition,
    alpha: Composition,
    m: int,
    k: int,
    size_a: int,
    size_w: int,
    step: int,
) -> Optional[str]:
    letters: dict[int, str] = {}

    def place(pos: int, left: str, right: Optional[str] = None) -> bool:
        if pos in letters:
            return False
        letters[pos] = left
        return True

    for idx in range(1, pi.size()):
        p, q = pi.intervals[idx]
        length = q - p + 1
        if step and p % step:
            return None
        if length == size_w and step:
            i = p // step
            if not 1 <= i <= k - 1:
                return None
            expected = pi.theta(p, q)
            if normalize_ribbon(alpha, m, 1, expected, omega=True):
                if not place(i, "|"):
                    return None
                continue
            return None
        if step and (length - size_a) % step == 0:
            i = p // step
            copies = (length - size_a) // step + 1
            j = i + copies
            if not (1 <= i < j <= k - 1):
                return None
            expected = pi.theta(p, q)
            if normalize_ribbon(alpha, m, copies, expected):
                if i in letters or j in letters:
                    return None
                letters[i] = "("
                letters[j] = ")"
                continue
        return None
    word = "".join(letters.get(pos, ".") for pos in range(1, k))
    try:
        validate_nesting(word)
    except InvalidNesting:
        return None
    return word


def normalize_ribbon(
    alpha: Composition,
    m: int,
    copies: int,
    piece: Optional[SkewShape],
    omega: bool = False,
) -> bool:
    """Check a decomposition piece against the expected staircase block."""
    if piece is None:
        return False
    if omega:
        expected = ribbon_to_shape(m_intersect(alpha, alpha, m))
    else:
        expected = staircase(alpha, m, copies)
    return piece == expected
