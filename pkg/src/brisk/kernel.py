"""Kernel selection: compiled extension if available, else pure Python.

The two implementations are behaviourally identical; the compiled one
(_speedups, built from Cython) only accelerates the inner loops.  Set
BRISK_PURE=1 in the environment to force the pure-Python kernel (used by
the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("BRISK_PURE") == "1":
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

KERNEL_NAME = _impl.KERNEL_NAME

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_divides = _impl.mono_divides
mono_lcm = _impl.mono_lcm
mono_deg = _impl.mono_deg
key_of = _impl.key_of
neg_key_of = _impl.neg_key_of
leading_exponent = _impl.leading_exponent
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
normal_form = _impl.normal_form


def implementations():
    """All available kernel implementations, keyed by name."""
    impls = {"python": _kernel_py}
    try:
        from . import _speedups

        impls[_speedups.KERNEL_NAME] = _speedups
    except ImportError:
        pass
    return impls
