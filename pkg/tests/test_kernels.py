import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from collatzmat import kernels
from collatzmat.kernels import _numpy
from collatzmat.numth import ord2, ord2_batch, ord2_batch_capped

try:
    from collatzmat.kernels import _numba
except ImportError:  # pragma: no cover - numba genuinely unavailable
    _numba = None

odd_arrays = st.lists(
    st.integers(min_value=0, max_value=500_000).map(lambda k: 2 * k + 1),
    min_size=1,
    max_size=50,
).map(lambda xs: np.array(xs, dtype=np.int64))


def test_backend_selected():
    assert kernels.BACKEND in ("numpy", "numba")


@given(odd_arrays)
def test_batch_matches_scalar(values):
    orders = ord2_batch(values)
    assert orders.dtype == np.int64
    for a, t in zip(values.tolist(), orders.tolist()):
        assert t == ord2(a)


@given(odd_arrays, st.integers(min_value=1, max_value=30))
def test_capped_batch(values, cap):
    capped = ord2_batch_capped(values, cap)
    full = ord2_batch(values)
    for t_c, t in zip(capped.tolist(), full.tolist()):
        assert t_c == (t if t <= cap else 0)


@given(odd_arrays)
def test_numpy_fallback_agrees(values):
    assert _numpy.order_batch(values).tolist() == ord2_batch(values).tolist()
    assert (
        _numpy.order_batch_capped(values, 12).tolist()
        == ord2_batch_capped(values, 12).tolist()
    )


@pytest.mark.skipif(_numba is None, reason="numba not installed")
def test_numba_and_numpy_kernels_agree():
    values = np.arange(3, 20_001, 2, dtype=np.int64)
    assert np.array_equal(_numba.order_batch(values), _numpy.order_batch(values))
    assert np.array_equal(
        _numba.order_batch_capped(values, 19), _numpy.order_batch_capped(values, 19)
    )


def _backend_in_subprocess(flag: str) -> str:
    env = dict(os.environ, COLLATZMAT_BACKEND=flag)
    out = subprocess.run(
        [sys.executable, "-c", "from collatzmat import kernels; print(kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return out.stdout.strip()


def test_env_flag_numpy():
    assert _backend_in_subprocess("numpy") == "numpy"


@pytest.mark.skipif(_numba is None, reason="numba not installed")
def test_env_flag_numba():
    assert _backend_in_subprocess("numba") == "numba"


def test_env_flag_auto():
    assert _backend_in_subprocess("auto") in ("numpy", "numba")


def test_env_flag_invalid():
    env = dict(os.environ, COLLATZMAT_BACKEND="fortran")
    out = subprocess.run(
        [sys.executable, "-c", "import collatzmat.kernels"],
        env=env,
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0
