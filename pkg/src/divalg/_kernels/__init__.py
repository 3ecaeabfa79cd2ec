"""Kernel selection: compiled Cython extension when available, numpy/Python
fallback otherwise.  `BACKEND` reports which one is active."""

import os

if os.environ.get("DIVALG_PURE_KERNELS") == "1":
    from . import pure as _impl
else:
    try:
        from . import _native as _impl        # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND
is_latin = _impl.is_latin
assoc_exhaustive = _impl.assoc_exhaustive
assoc_triples = _impl.assoc_triples
center_indices = _impl.center_indices
element_orders = _impl.element_orders
span_indices = _impl.span_indices
is_normal = _impl.is_normal
max_isotropic = _impl.max_isotropic
