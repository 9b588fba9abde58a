import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptealg import kernels
from ptealg._kernels_py import equal_power_sum_classes as py_classes

backends = ["python"] + (["compiled"] if kernels.compiled is not None else [])


@pytest.mark.parametrize("backend", backends)
def test_small_frozen(backend):
    assert kernels.equal_power_sum_classes(2, 1, 0, 3, backend=backend) == [
        [(0, 2), (1, 1)],
        [(0, 3), (1, 2)],
        [(1, 3), (2, 2)],
    ]


@pytest.mark.parametrize("backend", backends)
def test_empty_ranges(backend):
    assert kernels.equal_power_sum_classes(2, 1, 3, 0, backend=backend) == []


@pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
@given(st.integers(1, 4), st.integers(1, 4), st.integers(-6, 0), st.integers(0, 6))
def test_backends_agree(size, degree, lo, hi):
    a = kernels.equal_power_sum_classes(size, degree, lo, hi, backend="compiled")
    b = kernels.equal_power_sum_classes(size, degree, lo, hi, backend="python")
    assert a == b


def test_overflow_falls_back_to_python():
    # entries this large would overflow int64 power sums
    assert not kernels._fits_int64(3, 6, -10**4, 10**4)
    if kernels.compiled is not None:
        assert kernels.equal_power_sum_classes(2, 5, 10**4, 10**4 + 2, backend="compiled") == []


def test_python_twin_groups_have_two_members():
    for group in py_classes(3, 1, 0, 3):
        assert len(group) >= 2


def test_env_forces_python_backend():
    env = dict(os.environ, PTEALG_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import ptealg.kernels as k; print(k.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
