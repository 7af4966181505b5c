"""Selects the compiled counting kernel, falling back to pure Python.

Set TREECENSUS_PURE=1 to force the pure backend (used by the benchmark and
the backend-agreement tests).  The kernel is also bypassed whenever the
search space could overflow its 64-bit accumulators.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _kernel
except ImportError:  # extension not built
    _kernel = None

_FORCE_PURE = os.environ.get("TREECENSUS_PURE", "") not in ("", "0")

_KERNEL_COUNT_LIMIT = 2**63


def kernel_loaded() -> bool:
    return _kernel is not None


def kernel_active() -> bool:
    return _kernel is not None and not _FORCE_PURE


def backend_name() -> str:
    return "cython" if kernel_active() else "pure"


def brute_count(n, q, order, nbr_start, nbr_flat, check_start, check_flat,
                scheme_id, kparam, p4_start, p4_flat):
    if kernel_active() and n <= 16 and q < 2**31 and q**n < _KERNEL_COUNT_LIMIT:
        return _kernel.brute_count(n, q, order, nbr_start, nbr_flat,
                                   check_start, check_flat, scheme_id, kparam,
                                   p4_start, p4_flat)
    return _pure.brute_count(n, q, order, nbr_start, nbr_flat,
                             check_start, check_flat, scheme_id, kparam,
                             p4_start, p4_flat)


def pruefer_census_packed(n: int) -> list[int]:
    if kernel_active() and 2 <= n <= 12:
        return _kernel.pruefer_census(n)
    return _pure.pruefer_census(n)
