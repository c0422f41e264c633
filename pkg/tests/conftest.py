import itertools
from functools import lru_cache

import hypothesis
import pytest

from skewlab.diagrams import SkewShape, enumerate_connected
from skewlab.diagram_ops import oplus

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None
)
hypothesis.settings.load_profile("default")


@lru_cache(maxsize=None)
def connected_upto(n: int) -> tuple[SkewShape, ...]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_connected(k))
    return tuple(out)


@lru_cache(maxsize=None)
def all_diagrams_upto(n: int) -> tuple[SkewShape, ...]:
    """Connected diagrams plus every direct-sum assembly, up to n cells."""
    out = list(connected_upto(n))
    by_size = {k: enumerate_connected(k) for k in range(1, n)}

    def rec(base: SkewShape, remaining: int):
        for k in range(1, remaining + 1):
            for comp in by_size.get(k, ()):
                shape = oplus(base, comp)
                out.append(shape)
                rec(shape, remaining - k)

    for k in range(1, n):
        for comp in by_size[k]:
            rec(comp, n - k)
    return tuple(out)


@pytest.fixture(scope="session")
def small_connected():
    return connected_upto(6)
