import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spiderkit import complement, kernels
from spiderkit._pykernels import first_p4_violation as py_p4
from spiderkit._pykernels import thick_census as py_thick
from spiderkit._pykernels import thin_census as py_thin
from spiderkit.gen import random_graph, random_thin_spider

try:
    from spiderkit import _kernels
except ImportError:  # pragma: no cover - extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def _same(a, b):
    if a is None or b is None:
        return a is None and b is None
    return all(np.array_equal(x, y) for x, y in zip(a, b))


def _masks(g):
    return np.array(g.masks(), dtype=np.uint64) if g.n else np.zeros(0, dtype=np.uint64)


@st.composite
def graphs(draw):
    seed = draw(st.integers(0, 2**32))
    if draw(st.booleans()):
        s = draw(st.integers(2, 6))
        head = random_graph(draw(st.integers(0, 6)), draw(st.floats(0, 1)), seed)
        g, _ = random_thin_spider(s, head, seed)
        return complement(g) if draw(st.booleans()) else g
    return random_graph(draw(st.integers(0, 14)), draw(st.floats(0, 1)), seed)


@needs_ext
@settings(max_examples=300, deadline=None)
@given(graphs())
def test_census_backends_agree(g):
    assert _same(_kernels.thin_census(g.indptr, g.indices), py_thin(g.indptr, g.indices))
    assert _same(_kernels.thick_census(g.indptr, g.indices), py_thick(g.indptr, g.indices))


@needs_ext
@settings(max_examples=200, deadline=None)
@given(graphs())
def test_p4_scan_backends_agree(g):
    a = _kernels.first_p4_violation(_masks(g))
    b = py_p4(_masks(g))
    assert (None if a is None else tuple(a)) == (None if b is None else tuple(b))


def test_python_census_on_spider():
    g, p = random_thin_spider(3, random_graph(4, 0.5, 1), 2)
    body, legs, partner = py_thin(g.indptr, g.indices)
    assert tuple(body) == p.K
    assert dict(zip(body.tolist(), partner.tolist())) == p.matching_map
    clique, stable, partner = py_thick(*(lambda c: (c.indptr, c.indices))(complement(g)))
    assert tuple(clique) == p.S and tuple(stable) == p.K


def _backend_in_subprocess(env_value):
    env = dict(os.environ)
    env.pop("SPIDERKIT_PURE_PYTHON", None)
    if env_value is not None:
        env["SPIDERKIT_PURE_PYTHON"] = env_value
    out = subprocess.run(
        [sys.executable, "-c", "import spiderkit; print(spiderkit.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_backend_selection():
    assert _backend_in_subprocess("1") == "python"
    expected = "cython" if _kernels is not None else "python"
    assert _backend_in_subprocess(None) == expected
    assert _backend_in_subprocess("0") == expected
    assert kernels.BACKEND == expected or os.environ.get("SPIDERKIT_PURE_PYTHON")
