"""Backend selection for the hot order-of-2 kernels.

The environment variable COLLATZMAT_BACKEND picks the implementation:

* ``numba`` — require the compiled backend (ImportError if numba is missing);
* ``numpy`` — force the pure-numpy fallback;
* unset or ``auto`` — use numba when importable, else numpy.

Both backends implement identical contracts (see ``_numpy``); selection only
affects speed, never results.  ``benchmarks/bench_kernels.py`` compares them.
"""

import os

_choice = os.environ.get("COLLATZMAT_BACKEND", "auto").strip().lower() or "auto"

if _choice == "numpy":
    from collatzmat.kernels import _numpy as _impl
elif _choice == "numba":
    from collatzmat.kernels import _numba as _impl
elif _choice == "auto":
    try:
        from collatzmat.kernels import _numba as _impl
    except ImportError:
        from collatzmat.kernels import _numpy as _impl
else:
    raise ValueError(
        f"COLLATZMAT_BACKEND={_choice!r}: expected 'numba', 'numpy', or 'auto'"
    )

BACKEND = _impl.BACKEND
order_batch = _impl.order_batch
order_batch_capped = _impl.order_batch_capped

__all__ = ["BACKEND", "order_batch", "order_batch_capped"]
