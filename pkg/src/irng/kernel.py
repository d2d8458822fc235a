"""Backend selection for the hot kernels.

The compiled extension is used when importable; ``IRNG_PURE_PYTHON=1``
forces the Python fallback. Rngs whose moduli exceed the compiled limit
always get the Python kernel.
"""

import os

from . import _pykernel

try:
    if os.environ.get("IRNG_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = _ckernel.BACKEND if _ckernel is not None else _pykernel.BACKEND


def _backend(factors):
    if _ckernel is not None and all(f < _ckernel.MAX_MODULUS for f in factors):
        return _ckernel
    return _pykernel


def make_rng_kernel(factors, constants):
    return _backend(factors).RngKernel(factors, constants)


def make_lattice(factors):
    return _backend(factors).Lattice(factors)
