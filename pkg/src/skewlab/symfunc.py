"""Exact symmetric function arithmetic over the integers.

Sparse vectors over the Schur basis and sparse polynomials in the complete
homogeneous generators h_1, h_2, ... with arbitrary-precision integer
coefficients.  Skew Schur expansions are available through four routes:

* Littlewood-Richardson pictures, counted by a horizontal-strip chain DP
  (the workhorse; ``pictures`` enumerates the actual witnesses),
* the Jacobi-Trudi determinant, expanded by a zero-pruned minor DP that
  stays cheap on long thin shapes,
* the Hamel-Goulden determinant over any outside decomposition,
* direct column-strict tableau counting (Kostka numbers, monomial basis).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

from .diagrams import (
    Cell,
    Composition,
    EMPTY,
    Partition,
    SkewShape,
    make_shape,
    normalize,
    ribbon_to_shape,
    transpose_partition,
    weight,
)
from .diagram_ops import amalgamated_power, near_concat
from .errors import InvalidDecomposition, WeightMismatch
from .staircases import OutsideDecomposition, border_decomposition

Terms = dict[Partition, int]


def _insert_part(key: Partition, k: int) -> Partition:
    """Insert k into a weakly decreasing tuple."""
    lo, hi = 0, len(key)
    while lo < hi:
        mid = (lo + hi) // 2
        if key[mid] >= k:
            lo = mid + 1
        else:
            hi = mid
    return key[:lo] + (k,) + key[lo:]


class _SparseBase:
    """Shared arithmetic for integer-coefficient sparse objects."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Terms] = None):
        self.terms: Terms = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = coeff

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.key()))

    def key(self) -> tuple:
        """Canonical hashable form, usable for bucketing."""
        return tuple(sorted(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            val = out.get(key, 0) + coeff
            if val:
                out[key] = val
            else:
                out.pop(key, None)
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int):
        if n == 0:
            return type(self)()
        return type(self)({k: n * c for k, c in self.terms.items()})

    def __rmul__(self, n):
        if isinstance(n, int):
            return self.scale(n)
        return NotImplemented

    def coefficient(self, key: Iterable[int]) -> int:
        return self.terms.get(tuple(key), 0)


class SchurVector(_SparseBase):
    """Integer combination of Schur functions, keyed by partitions."""

    @classmethod
    def zero(cls) -> "SchurVector":
        return cls()

    @classmethod
    def one(cls) -> "SchurVector":
        return cls({(): 1})

    @classmethod
    def basis(cls, lam: Iterable[int]) -> "SchurVector":
        return cls({tuple(lam): 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SchurVector):
            return NotImplemented
        return schur_multiply(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            name = "s[%s]" % ",".join(map(str, lam))
            bits.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(bits)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "coeff": self.terms[lam]}
            for lam in sorted(self.terms, reverse=True)
        ]


class HPolynomial(_SparseBase):
    """Integer polynomial in h_1, h_2, ..., keyed by subscript partitions."""

    @classmethod
    def zero(cls) -> "HPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "HPolynomial":
        return cls({(): 1})

    @classmethod
    def gen(cls, r: int) -> "HPolynomial":
        if r < 1:
            raise ValueError("h subscripts are positive")
        return cls({(r,): 1})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, HPolynomial):
            return NotImplemented
        out: Terms = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                val = out.get(key, 0) + c1 * c2
                if val:
                    out[key] = val
                else:
                    del out[key]
        return HPolynomial(out)

    def times_h(self, r: int, coeff: int = 1) -> "HPolynomial":
        return HPolynomial(
            {_insert_part(k, r): coeff * c for k, c in self.terms.items()}
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            name = "".join(f"h{r}" for r in key) or "1"
            bits.append(f"{c}*{name}" if c != 1 or not key else str(c))
        return " + ".join(bits)

    def to_json(self) -> list[dict]:
        return [
            {"subscripts": list(key), "coeff": self.terms[key]}
            for key in sorted(self.terms, reverse=True)
        ]


# ---------------------------------------------------------------------------
# horizontal strips


def _horizontal_strips(
    lam: Partition, size: int, max_cols: int
) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    """(new shape, tableau rows of the added cells in column order).

    Added cells sorted by column correspond to strip rows from the bottom
    up, which is the order used by the picture condition.
    """
    rows = len(lam)
    caps = [max_cols - (lam[0] if lam else 0)]
    caps += [lam[i - 1] - lam[i] for i in range(1, rows)]
    caps += [lam[rows - 1]] if rows else []
    suffix = [0] * (len(caps) + 1)
    for i in range(len(caps) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]

    added = [0] * len(caps)

    def rec(i: int, remaining: int) -> Iterator[None]:
        if i == len(caps):
            if remaining == 0:
                yield None
            return
        if remaining > suffix[i]:
            return
        for a in range(min(caps[i], remaining), -1, -1):
            added[i] = a
            yield from rec(i + 1, remaining - a)
        added[i] = 0

    for _ in rec(0, size):
        new = tuple(
            (lam[i] if i < rows else 0) + added[i]
            for i in range(len(caps))
            if (lam[i] if i < rows else 0) + added[i] > 0
        )
        trow: list[int] = []
        for i in range(len(caps) - 1, -1, -1):
            if added[i]:
                trow.extend([i + 1] * added[i])
        yield new, tuple(trow)


# ---------------------------------------------------------------------------
# Littlewood-Richardson pictures


def _row_data(shape: SkewShape):
    iv = shape.row_intervals()
    sizes = [b - a + 1 for a, b in iv]
    overlaps, shifts = [], []
    for r in range(len(iv) - 1):
        overlaps.append(max(0, iv[r + 1][1] - iv[r][0] + 1))
        shifts.append(iv[r][1] - iv[r + 1][1])
    return iv, sizes, overlaps, shifts


def schur_expand_lr(shape: SkewShape) -> SchurVector:
    """Schur expansion by counting pictures per target shape.

    Pictures are chains of horizontal strips (strip r holds the entries r)
    subject to the column condition, which only couples consecutive strips;
    the DP state keeps the slice of the previous strip the condition reads.
    """
    iv, sizes, overlaps, shifts = _row_data(shape)
    ell = len(iv)
    if ell == 0:
        return SchurVector.one()
    ncols = shape.n_cols

    def window(trow: tuple[int, ...], r: int) -> tuple[int, ...]:
        if r == ell - 1:
            return ()
        o = overlaps[r]
        if o == 0:
            return ()
        d = shifts[r]
        return trow[d : d + o]

    states: dict[tuple[Partition, tuple[int, ...]], int] = {}
    for new, trow in _horizontal_strips((), sizes[0], ncols):
        states[(new, window(trow, 0))] = (
            states.get((new, window(trow, 0)), 0) + 1
        )
    for r in range(1, ell):
        need = overlaps[r - 1]
        new_states: dict[tuple[Partition, tuple[int, ...]], int] = {}
        for (shp, win), cnt in states.items():
            for new, trow in _horizontal_strips(shp, sizes[r], ncols):
                if any(trow[t] <= win[t] for t in range(need)):
                    continue
                key = (new, window(trow, r))
                new_states[key] = new_states.get(key, 0) + cnt
        states = new_states
    out: Terms = {}
    for (shp, _), cnt in states.items():
        out[shp] = out.get(shp, 0) + cnt
    return SchurVector(out)


@dataclass(frozen=True)
class Picture:
    """Column-strict tableau witnessing one Littlewood-Richardson term.

    ``witness`` maps each diagram cell to the tableau cell holding its row
    entry (the k-th cell from the right of diagram row r goes to the k-th
    occurrence of r from the left).
    """

    tableau: tuple[tuple[int, ...], ...]
    witness: tuple[tuple[Cell, Cell], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.tableau)


def pictures(shape: SkewShape) -> list[Picture]:
    """Depth-first enumeration of all pictures for the diagram."""
    iv, sizes, overlaps, shifts = _row_data(shape)
    ell = len(iv)
    if ell == 0:
        return []
    ncols = shape.n_cols
    out: list[Picture] = []
    strip_cells: list[list[Cell]] = []

    def strip_positions(prev: Partition, new: Partition) -> list[Cell]:
        cells = []
        rows = len(new)
        prev_pad = prev + (0,) * (rows - len(prev))
        for i in range(rows - 1, -1, -1):
            cells.extend(
                (i + 1, j) for j in range(prev_pad[i] + 1, new[i] + 1)
            )
        return cells

    def rec(r: int, shp: Partition) -> None:
        if r == ell:
            tableau_rows: dict[int, dict[int, int]] = {}
            for entry, cells in enumerate(strip_cells, start=1):
                for i, j in cells:
                    tableau_rows.setdefault(i, {})[j] = entry
            tab = tuple(
                tuple(tableau_rows[i][j] for j in sorted(tableau_rows[i]))
                for i in sorted(tableau_rows)
            )
            witness = []
            for row, (a, b) in enumerate(iv, start=1):
                for k in range(1, b - a + 2):
                    witness.append(
                        ((row, b - k + 1), strip_cells[row - 1][k - 1])
                    )
            out.append(Picture(tab, tuple(witness)))
            return
        for new, trow in _horizontal_strips(shp, sizes[r], ncols):
            if r > 0:
                need = overlaps[r - 1]
                d = shifts[r - 1]
                prev_rows = [c[0] for c in strip_cells[-1]]
                if any(
                    trow[t] <= prev_rows[d + t] for t in range(need)
                ):
                    continue
            strip_cells.append(strip_positions(shp, new))
            rec(r + 1, new)
            strip_cells.pop()

    rec(0, ())
    return out


# ---------------------------------------------------------------------------
# Kostka numbers


def kostka_expand(shape: SkewShape) -> dict[Partition, int]:
    """Monomial expansion: partition content -> number of column-strict tableaux."""
    cells = sorted(shape.cells())
    n = shape.size
    if n == 0:
        return {(): 1}
    counts: dict[Partition, int] = {}
    filling: dict[Cell, int] = {}
    content = [0] * (n + 1)

    def rec(idx: int) -> None:
        if idx == len(cells):
            mu = list(content[1:])
            while mu and mu[-1] == 0:
                mu.pop()
            if all(c > 0 for c in mu) and all(
                a >= b for a, b in zip(mu, mu[1:])
            ):
                key = tuple(mu)
                counts[key] = counts.get(key, 0) + 1
            return
        i, j = cells[idx]
        lo = filling.get((i, j - 1), 1)
        up = filling.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            content[v] += 1
            rec(idx + 1)
            content[v] -= 1
        filling.pop((i, j), None)

    rec(0)
    return counts


# ---------------------------------------------------------------------------
# Jacobi-Trudi


def jt_subscripts(shape: SkewShape) -> list[list[int]]:
    """Subscript matrix lam_i - mu_j - i + j (negative entries are zero)."""
    lam = shape.outer
    mu = shape.inner_padded()
    ell = len(lam)
    return [
        [lam[i] - mu[j] - (i + 1) + (j + 1) for j in range(ell)]
        for i in range(ell)
    ]


def jacobi_trudi(shape: SkewShape) -> HPolynomial:
    """Signed determinant expansion of the h-subscript matrix.

    Processed row by row over sets of used columns; columns that fall
    behind the staircase of zero entries must be used already, which keeps
    the live state count small on banded (thin) shapes.
    """
    lam = shape.outer
    mu = shape.inner_padded()
    ell = len(lam)
    if ell == 0:
        return HPolynomial.one()
    sub = jt_subscripts(shape)
    jmin = []
    for i in range(ell):
        row = sub[i]
        j = 0
        while j < ell and row[j] < 0:
            j += 1
        jmin.append(j)
    jmin.append(ell)  # after the last row every column must be used
    if any(jmin[i] > i for i in range(ell)):
        return HPolynomial.zero()

    states: dict[tuple[int, ...], Terms] = {(): {(): 1}}
    for i in range(ell):
        new_states: dict[tuple[int, ...], Terms] = {}
        lo, nlo = jmin[i], jmin[i + 1]
        for used, poly in states.items():
            used_set = set(used)
            for j in range(lo, ell):
                if j in used_set:
                    continue
                k = sub[i][j]
                below = sum(1 for s in used if s < j)
                sign = -1 if (j - lo - below) % 2 else 1
                new_used = tuple(sorted(used + (j,)))
                if any(
                    c not in used_set and c != j for c in range(lo, nlo)
                ):
                    continue
                win = tuple(s for s in new_used if s >= nlo)
                target = new_states.setdefault(win, {})
                if k == 0:
                    for key, c in poly.items():
                        val = target.get(key, 0) + sign * c
                        if val:
                            target[key] = val
                        else:
                            del target[key]
                else:
                    for key, c in poly.items():
                        nk = _insert_part(key, k)
                        val = target.get(nk, 0) + sign * c
                        if val:
                            target[nk] = val
                        else:
                            del target[nk]
        states = new_states
    if not states:
        return HPolynomial.zero()
    assert set(states) <= {()}
    return HPolynomial(states.get((), {}))


def jacobi_trudi_dual(shape: SkewShape) -> HPolynomial:
    """Dual determinant; keys are e-subscripts (h of the transpose)."""
    return jacobi_trudi(shape.transpose())


# ---------------------------------------------------------------------------
# Schur products (Pieri chains over the h-expansion of one factor)


@lru_cache(maxsize=None)
def _h_expansion_of_schur(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple(sorted(jacobi_trudi(make_shape(lam)).terms.items()))


def _pieri_row(terms: Terms, r: int) -> Terms:
    out: Terms = {}
    for lam, c in terms.items():
        width = (lam[0] if lam else 0) + r
        for new, _ in _horizontal_strips(lam, r, width):
            out[new] = out.get(new, 0) + c
    return out


@lru_cache(maxsize=None)
def _h_monomial_schur(key: Partition) -> tuple[tuple[Partition, int], ...]:
    terms: Terms = {(): 1}
    for r in key:
        terms = _pieri_row(terms, r)
    return tuple(sorted(terms.items()))


@lru_cache(maxsize=None)
def _mult_basis(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not lam:
        return (((mu), 1),) if mu else (((), 1),)
    if not mu:
        return ((lam, 1),)
    if weight(lam) < weight(mu):
        lam, mu = mu, lam
    out: Terms = {}
    for key, c in _h_expansion_of_schur(mu):
        terms: Terms = {lam: 1}
        for r in key:
            terms = _pieri_row(terms, r)
        for nu, k in terms.items():
            val = out.get(nu, 0) + c * k
            if val:
                out[nu] = val
            else:
                del out[nu]
    return tuple(sorted(out.items()))


def schur_multiply(a: SchurVector, b: SchurVector) -> SchurVector:
    out: Terms = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, k in _mult_basis(lam, mu):
                val = out.get(nu, 0) + ca * cb * k
                if val:
                    out[nu] = val
                else:
                    del out[nu]
    return SchurVector(out)


# ---------------------------------------------------------------------------
# basis changes and the involution


def schur_from_h(poly: HPolynomial) -> SchurVector:
    out: Terms = {}
    for key, c in poly.terms.items():
        for lam, k in _h_monomial_schur(key):
            val = out.get(lam, 0) + c * k
            if val:
                out[lam] = val
            else:
                del out[lam]
    return SchurVector(out)


def h_from_schur(vec: SchurVector) -> HPolynomial:
    out: Terms = {}
    for lam, c in vec.terms.items():
        for key, k in _h_expansion_of_schur(lam):
            val = out.get(key, 0) + c * k
            if val:
                out[key] = val
            else:
                del out[key]
    return HPolynomial(out)


@lru_cache(maxsize=None)
def _e_in_h(r: int) -> HPolynomial:
    return jacobi_trudi(make_shape((1,) * r))


def omega_involution(
    f: Union[SchurVector, HPolynomial]
) -> Union[SchurVector, HPolynomial]:
    """e_r <-> h_r; on the Schur basis, transpose every partition."""
    if isinstance(f, SchurVector):
        out: Terms = {}
        for lam, c in f.terms.items():
            out[transpose_partition(lam)] = c
        return SchurVector(out)
    result = HPolynomial.zero()
    for key, c in f.terms.items():
        term = HPolynomial.one()
        for r in key:
            term = term * _e_in_h(r)
        result = result + term.scale(c)
    return result


# ---------------------------------------------------------------------------
# Hamel-Goulden determinant


def hamel_goulden(
    shape: SkewShape, pi: Union[OutsideDecomposition, str] = "se"
) -> SchurVector:
    """det(s_{theta_i # theta_j}) over an outside decomposition."""
    if isinstance(pi, str):
        pi = border_decomposition(shape, pi)
    elif pi.shape != shape:
        raise InvalidDecomposition("decomposition belongs to a different shape")
    m = pi.size()
    entries: list[list[Optional[SchurVector]]] = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            piece = pi.entry(i, j)
            row.append(None if piece is None else schur_expand_lr(piece))
        entries.append(row)

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> SchurVector:
        if not rows:
            return SchurVector.one()
        r = max(
            rows,
            key=lambda rr: sum(1 for c in cols if entries[rr][c] is None),
        )
        rest_rows = tuple(x for x in rows if x != r)
        pos = rows.index(r)
        total = SchurVector.zero()
        for idx, c in enumerate(cols):
            entry = entries[r][c]
            if entry is None:
                continue
            minor = det(rest_rows, tuple(x for x in cols if x != c))
            term = schur_multiply(entry, minor)
            if (pos + idx) % 2:
                term = term.scale(-1)
            total = total + term
        return total

    return det(tuple(range(m)), tuple(range(m)))


# ---------------------------------------------------------------------------
# characters (Murnaghan-Nakayama)


def _removable_strips(lam: Partition, mu: Partition, size: int):
    """(smaller partition, height) for border strips of the given size."""
    ell = len(lam)
    mu_pad = mu + (0,) * (ell - len(mu))
    for i in range(ell):
        for j in range(i, ell):
            xi = list(lam)
            ok = True
            for r in range(i, j):
                xi[r] = lam[r + 1] - 1
                if xi[r] < mu_pad[r]:
                    ok = False
                    break
            if not ok:
                continue
            last = lam[i] + (j - i) - size
            nxt = lam[j + 1] if j + 1 < ell else 0
            if last < nxt or last < mu_pad[j] or last > lam[j] - 1:
                continue
            xi[j] = last
            out = tuple(xi)
            while out and out[-1] == 0:
                out = out[:-1]
            yield out, j - i


def character(shape: SkewShape, nu: Partition) -> int:
    """Signed border-strip tableau count for the power sum coefficient."""
    nu = tuple(nu)
    if weight(nu) != shape.size:
        raise WeightMismatch(f"|{nu}| != |{shape}|")
    mu = shape.inner

    @lru_cache(maxsize=None)
    def rec(lam: Partition, idx: int) -> int:
        if idx == 0:
            return 1 if lam == mu else 0
        total = 0
        for xi, height in _removable_strips(lam, mu, nu[idx - 1]):
            sub = rec(xi, idx - 1)
            if sub:
                total += (-sub if height % 2 else sub)
        return total

    return rec(shape.outer, len(nu))


@dataclass(frozen=True)
class CharacterVector:
    terms: tuple[tuple[Partition, int], ...]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)


def character_vector(shape: SkewShape) -> CharacterVector:
    from .diagrams import partitions

    n = shape.size
    out = []
    for nu in partitions(n):
        val = character(shape, nu)
        if val:
            out.append((nu, val))
    return CharacterVector(tuple(sorted(out)))


def z_factor(nu: Partition) -> int:
    out = 1
    mult: dict[int, int] = {}
    for part in nu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        fact = 1
        for t in range(1, m + 1):
            fact *= t
        out *= part**m * fact
    return out


# ---------------------------------------------------------------------------
# the linear maps of the overlap recursion


def phi_ell(vec: SchurVector, ell: int) -> SchurVector:
    """s_lam -> s_{lam + 1^ell}, killing terms with more than ell rows."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    out: Terms = {}
    for lam, c in vec.terms.items():
        if len(lam) > ell:
            continue
        new = tuple(p + 1 for p in lam) + (1,) * (ell - len(lam))
        out[new] = out.get(new, 0) + c
    return SchurVector(out)


def h_coeff(poly: HPolynomial, r: int) -> HPolynomial:
    """Coefficient of h_r: keep terms with exactly one factor h_r, drop it."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out: Terms = {}
    for key, c in poly.terms.items():
        if key.count(r) == 1:
            rest = list(key)
            rest.remove(r)
            out[tuple(rest)] = out.get(tuple(rest), 0) + c
    return HPolynomial(out)


# ---------------------------------------------------------------------------
# substitution maps


def _odot_power(d: SkewShape, r: int) -> SkewShape:
    out = d
    for _ in range(r - 1):
        out = near_concat(out, d)
    return out


def circ_map(poly: HPolynomial, d: SkewShape) -> SchurVector:
    """Algebra map h_r -> s of the r-fold near-concatenation power of d."""
    if not d.outer:
        raise ValueError("d must be nonempty")
    powers: dict[int, SchurVector] = {}

    def power(r: int) -> SchurVector:
        if r not in powers:
            powers[r] = schur_expand_lr(_odot_power(d, r))
        return powers[r]

    out = SchurVector.zero()
    for key, c in poly.terms.items():
        term = SchurVector.one()
        for r in key:
            term = schur_multiply(term, power(r))
        out = out + term.scale(c)
    return out


def _homogenized_terms(poly: HPolynomial) -> list[tuple[Partition, int, int]]:
    """(key, power of the homogenization variable, coeff) at top degree."""
    if not poly.terms:
        return []
    top = max(len(key) for key in poly.terms)
    return [(key, top - len(key), c) for key, c in poly.terms.items()]


def circ_omega_map(
    poly: HPolynomial, d: SkewShape, omega: Composition
) -> SchurVector:
    """Homogenize in deg(h_r) = 1, then h_r -> s of the r-th amalgamated power.

    The homogenization variable maps to s of omega.  Pointwise evaluation
    only: the composite is neither linear nor multiplicative.
    """
    s_omega = schur_expand_lr(ribbon_to_shape(omega))
    powers: dict[int, SchurVector] = {}

    def power(r: int) -> SchurVector:
        if r not in powers:
            powers[r] = schur_expand_lr(amalgamated_power(d, omega, r))
        return powers[r]

    out = SchurVector.zero()
    for key, t_deg, c in _homogenized_terms(poly):
        term = SchurVector.one()
        for r in key:
            term = schur_multiply(term, power(r))
        for _ in range(t_deg):
            term = schur_multiply(term, s_omega)
        out = out + term.scale(c)
    return out


def circ_omega_map_h(
    poly: HPolynomial, d: SkewShape, omega: Composition
) -> HPolynomial:
    """Same map computed in the h-basis (cheap for large diagrams)."""
    omega_h = jacobi_trudi(ribbon_to_shape(omega))
    powers: dict[int, HPolynomial] = {}

    def power(r: int) -> HPolynomial:
        if r not in powers:
            powers[r] = jacobi_trudi(amalgamated_power(d, omega, r))
        return powers[r]

    out = HPolynomial.zero()
    for key, t_deg, c in _homogenized_terms(poly):
        term = HPolynomial.one()
        for r in key:
            term = term * power(r)
        for _ in range(t_deg):
            term = term * omega_h
        out = out + term.scale(c)
    return out


# ---------------------------------------------------------------------------
# principal specialization


def _poly_mul_linear(poly: list[Fraction], const: int) -> list[Fraction]:
    # multiply by (t + const)
    out = [Fraction(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] += c * const
        out[i + 1] += c
    return out


@lru_cache(maxsize=None)
def _principal_basis(lam: Partition) -> tuple[Fraction, ...]:
    """s_lam evaluated at t ones, as an exact polynomial in t."""
    lamt = transpose_partition(lam)
    poly = [Fraction(1)]
    den = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            poly = _poly_mul_linear(poly, j - i)
            den *= part - j + lamt[j - 1] - i + 1
    return tuple(c / den for c in poly)


def principal_eval(vec: SchurVector) -> tuple[Fraction, ...]:
    """Sum of c_lam * s_lam(1^t); exact rational coefficients, integer valued."""
    out: list[Fraction] = []
    for lam, c in vec.terms.items():
        poly = _principal_basis(lam)
        if len(poly) > len(out):
            out.extend([Fraction(0)] * (len(poly) - len(out)))
        for i, coeff in enumerate(poly):
            out[i] += c * coeff
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(poly: tuple[Fraction, ...], t: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(poly):
        total = total * t + c
    return total


def lowest_power(poly: tuple[Fraction, ...]) -> int:
    for i, c in enumerate(poly):
        if c:
            return i
    raise ValueError("zero polynomial")


def is_integer_valued(poly: tuple[Fraction, ...]) -> bool:
    """Integrality of all binomial-basis coordinates (finite differences)."""
    values = [poly_eval(poly, t) for t in range(len(poly) + 1)]
    while values:
        if values[0].denominator != 1:
            return False
        values = [b - a for a, b in zip(values, values[1:])]
    return True
