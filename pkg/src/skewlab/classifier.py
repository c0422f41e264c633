"""Exhaustive skew-equivalence classification at a given cell count.

Connected diagrams are bucketed by their row overlap partitions (a proven
invariant of equivalence), each bucket is split by exact fingerprint, and
the resulting classes are reported with rank, symmetry flags and the
power-of-two cardinality check.  The six bundled sporadic pairs are
verified alongside.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .diagrams import (
    Composition,
    SkewShape,
    compositions,
    enumerate_connected,
    normalize,
    parse_ascii,
)
from .diagram_ops import (
    check_hypotheses,
    compose_alpha_d,
    compose_d_beta,
    amalgamated_compose,
    protrusion,
)
from .errors import FixtureMismatch, NotDefined, NotSkew, ProtrusionFailure
from .invariants import fingerprint, frobenius_rank, prefilter_key
from .staircases import build_from_staircase, detect_staircase
from .symfunc import SchurVector

FIXTURE_DIR = Path(__file__).parent / "fixtures" / "sporadic"
N_SPORADIC_PAIRS = 6


@dataclass(frozen=True)
class EquivalenceClass:
    members: tuple[SkewShape, ...]
    fingerprint: SchurVector
    size_n: int
    rank: int
    closed_under_rotation: bool
    closed_under_transpose: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def power_of_two(self) -> bool:
        return self.size & (self.size - 1) == 0


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    classes: tuple[EquivalenceClass, ...]
    histogram: tuple[tuple[int, int], ...]  # (class size, count)
    power_of_two_violations: tuple[EquivalenceClass, ...]
    sporadics: tuple[dict, ...]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "classes": [
                {
                    "members": [m.compact() for m in cls.members],
                    "size": cls.size,
                    "rank": cls.rank,
                    "power_of_two": cls.power_of_two(),
                }
                for cls in self.classes
            ],
            "histogram": [list(pair) for pair in self.histogram],
            "sporadics": list(self.sporadics),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2)


def _fingerprint_bucket(shapes: list[SkewShape]) -> list[tuple]:
    return [(shape, fingerprint(shape).key()) for shape in shapes]


def classify(
    n: int,
    jobs: int = 1,
    with_sporadics: bool = True,
    prefilter: bool = True,
) -> ClassificationReport:
    """Partition all connected n-cell diagrams into equivalence classes."""
    shapes = enumerate_connected(n)
    buckets: dict[tuple, list[SkewShape]] = {}
    for shape in shapes:
        key = prefilter_key(shape) if prefilter else ()
        buckets.setdefault(key, []).append(shape)
    bucket_list = [buckets[k] for k in sorted(buckets)]

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_fingerprint_bucket, bucket_list)
    else:
        results = [_fingerprint_bucket(b) for b in bucket_list]

    classes = []
    for bucket in results:
        by_fp: dict[tuple, list[SkewShape]] = {}
        for shape, fp_key in bucket:
            by_fp.setdefault(fp_key, []).append(shape)
        for fp_key, members in by_fp.items():
            members = sorted(members, key=lambda s: (s.n_rows, s.outer, s.inner))
            member_set = set(members)
            classes.append(
                EquivalenceClass(
                    members=tuple(members),
                    fingerprint=fingerprint(members[0]),
                    size_n=n,
                    rank=frobenius_rank(members[0]),
                    closed_under_rotation=all(
                        m.rotate180() in member_set for m in members
                    ),
                    closed_under_transpose=all(
                        m.transpose() in member_set for m in members
                    ),
                )
            )
    classes.sort(key=lambda c: (c.members[0].n_rows, c.members[0].outer, c.members[0].inner))
    assert sum(c.size for c in classes) == len(shapes)

    hist: dict[int, int] = {}
    for cls in classes:
        hist[cls.size] = hist.get(cls.size, 0) + 1
    violations = tuple(c for c in classes if not c.power_of_two())
    sporadics = tuple(verify_sporadics()) if with_sporadics else ()
    return ClassificationReport(
        n=n,
        classes=tuple(classes),
        histogram=tuple(sorted(hist.items())),
        power_of_two_violations=violations,
        sporadics=sporadics,
    )


# ---------------------------------------------------------------------------
# sporadic fixtures


@lru_cache(maxsize=None)
def load_sporadic_pair(pair_id: int) -> tuple[SkewShape, SkewShape]:
    if not 1 <= pair_id <= N_SPORADIC_PAIRS:
        raise ValueError(f"pair_id must be 1..{N_SPORADIC_PAIRS}")
    pair = []
    for tag in "ab":
        text = (FIXTURE_DIR / f"pair{pair_id}_{tag}.txt").read_text()
        pair.append(parse_ascii(text))
    return tuple(pair)


def verify_sporadics() -> list[dict]:
    """Check every fixture pair (and its rotations/transposes) for equality."""
    out = []
    for pair_id in range(1, N_SPORADIC_PAIRS + 1):
        a, b = load_sporadic_pair(pair_id)
        equal = (
            fingerprint(a) == fingerprint(b)
            and fingerprint(a.rotate180()) == fingerprint(b.rotate180())
            and fingerprint(a.transpose()) == fingerprint(b.transpose())
        )
        if not equal:
            raise FixtureMismatch(f"sporadic pair {pair_id} failed verification")
        out.append({"pair_id": pair_id, "equal": True, "size": a.size})
    return out


def perturbed_negative_control() -> tuple[SkewShape, SkewShape]:
    """Pair 2 with one cell of the first diagram moved; must not be equivalent."""
    a, b = load_sporadic_pair(2)
    cells = set(a.cells())
    cells.remove((3, 1))
    cells.add((2, 7))
    return normalize(cells), b


# ---------------------------------------------------------------------------
# generator search


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n) if n % d == 0]


def _compose_alpha_factorizations(shape: SkewShape):
    n = shape.size
    for e in _divisors(n):
        k = n // e
        if k < 2:
            continue
        for base in enumerate_connected(e, ignore_cap=True):
            for alpha in compositions(k):
                try:
                    if compose_alpha_d(alpha, base) == shape:
                        yield alpha, base
                except NotSkew:
                    continue


def _compose_beta_factorizations(shape: SkewShape):
    n = shape.size
    for b in _divisors(n):
        k = n // b
        if k < 2:
            continue
        for beta in compositions(b):
            for base in enumerate_connected(k, ignore_cap=True):
                try:
                    if compose_d_beta(base, beta) == shape:
                        yield base, beta
                except NotSkew:
                    continue


def _amalgamated_factorizations(shape: SkewShape, max_base: int = 8):
    n = shape.size
    for e in range(2, min(n, max_base + 1)):
        for base in enumerate_connected(e, ignore_cap=True):
            tops = set(protrusion(base, "top"))
            bots = set(protrusion(base, "bottom"))
            for omega in sorted(tops & bots):
                w = sum(omega)
                if w >= base.n_diagonals():
                    continue
                if not check_hypotheses(base, omega).ok:
                    continue
                step = e - w
                for a in range(2, n // step + 2):
                    rem = n - a * step
                    if rem <= 0 or rem % w:
                        continue
                    length = rem // w
                    if length > a:
                        continue
                    for alpha in compositions(a):
                        if len(alpha) != length:
                            continue
                        try:
                            if amalgamated_compose(alpha, base, omega) == shape:
                                yield alpha, base, omega
                        except (NotDefined, ProtrusionFailure, NotSkew):
                            continue


def generator_moves(shape: SkewShape, include_amalgamated: bool = True):
    """(move name, image) for every single known-equivalence rewrite."""
    yield "rotate", shape.rotate180()
    for side in ("se", "nw"):
        pres = detect_staircase(shape, side)
        if pres is not None and pres.nesting:
            partner = build_from_staircase(pres.reversed())
            yield f"nesting-reversal-{side}", partner
    for alpha, base in _compose_alpha_factorizations(shape):
        rev = tuple(reversed(alpha))
        if rev != alpha:
            yield "compose-left-reverse", compose_alpha_d(rev, base)
        yield "compose-right-rotate", compose_alpha_d(alpha, base.rotate180())
    for base, beta in _compose_beta_factorizations(shape):
        rev = tuple(reversed(beta))
        if rev != beta:
            yield "compose-ribbon-reverse", compose_d_beta(base, rev)
        yield "compose-base-rotate", compose_d_beta(base.rotate180(), beta)
    if include_amalgamated:
        for alpha, base, omega in _amalgamated_factorizations(shape):
            rev = tuple(reversed(alpha))
            if rev != alpha:
                yield "amalgamated-reverse", amalgamated_compose(rev, base, omega)


def explain_pair(
    a: SkewShape, b: SkewShape, depth: int = 2, include_amalgamated: bool = True
) -> Optional[tuple[str, ...]]:
    """Shortest generator path from a to b within the depth bound, if any."""
    if a == b:
        return ()
    frontier = {a: ()}
    seen = {a}
    for _ in range(depth):
        new_frontier: dict[SkewShape, tuple[str, ...]] = {}
        for shape, path in frontier.items():
            for name, image in generator_moves(shape, include_amalgamated):
                if image == b:
                    return path + (name,)
                if image not in seen:
                    seen.add(image)
                    new_frontier[image] = path + (name,)
        frontier = new_frontier
    return None


def explain_by_generators(
    cls: EquivalenceClass, depth: int = 2, include_amalgamated: bool = True
) -> dict[tuple[SkewShape, SkewShape], Optional[tuple[str, ...]]]:
    """Annotate member pairs with a linking generator path where one is found.

    ``None`` marks a pair no bounded search explains; that is a legitimate
    outcome.
    """
    out = {}
    members = cls.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            out[(members[i], members[j])] = explain_pair(
                members[i], members[j], depth, include_amalgamated
            )
    return out
