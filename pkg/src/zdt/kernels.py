"""Backend selection for the bitset kernels.

The compiled extension handles carriers of at most 63 elements (masks live in
a machine word there); wider posets, which only arise through Fin P on large
bases, fall back to the pure twin per call.  Set ``ZDT_BACKEND=py`` to force
the pure implementation.
"""

import os

from zdt import _kernels_py as _py

if os.environ.get("ZDT_BACKEND", "").lower() in ("py", "python", "pure"):
    _c = None
else:
    try:
        from zdt import _ckernels as _c
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"
_C_MAX_N = 63

SYS_SINGLETONS = _py.SYS_SINGLETONS
SYS_CHAINS = _py.SYS_CHAINS
SYS_DIRECTED = _py.SYS_DIRECTED
SYS_FINITE = _py.SYS_FINITE
SYS_CONNECTED = _py.SYS_CONNECTED


def transitive_closure(n, rows):
    if _c is not None and n <= _C_MAX_N:
        return _c.transitive_closure(n, rows)
    return _py.transitive_closure(n, rows)


def is_partial_order(n, rows):
    if _c is not None and n <= _C_MAX_N:
        return _c.is_partial_order(n, rows)
    return _py.is_partial_order(n, rows)


def canonical_key(n, rows):
    if _c is not None and n <= _C_MAX_N:
        return _c.canonical_key(n, rows)
    return _py.canonical_key(n, rows)


def enumerate_labeled_orders(n):
    if _c is not None and n <= _C_MAX_N:
        return _c.enumerate_labeled_orders(n)
    return _py.enumerate_labeled_orders(n)


def z_contains(sys_id, n, up, down, mask):
    if _c is not None and n <= _C_MAX_N:
        return _c.z_contains(sys_id, n, up, down, mask)
    return _py.z_contains(sys_id, n, up, down, mask)


def z_member_masks(sys_id, n, up, down):
    if _c is not None and n <= _C_MAX_N:
        return _c.z_member_masks(sys_id, n, up, down)
    return _py.z_member_masks(sys_id, n, up, down)


def order_ideals(n, up, down):
    if _c is not None and n <= _C_MAX_N:
        return _c.order_ideals(n, up, down)
    return _py.order_ideals(n, up, down)


def absorbing_ideals(ideals, constraints):
    if _c is not None and (not ideals or max(ideals).bit_length() <= _C_MAX_N):
        return _c.absorbing_ideals(ideals, constraints)
    return _py.absorbing_ideals(ideals, constraints)

