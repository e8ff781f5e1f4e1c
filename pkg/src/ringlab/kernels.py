"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
numpy fallback in ``_pykernels``.  Setting ``RINGLAB_PURE_PYTHON=1`` forces
the fallback.  ``BACKEND`` names the active one.
"""

import contextlib
import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["compiled"] = _ckernels

if _ckernels is not None and os.environ.get("RINGLAB_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "compiled"
else:
    BACKEND = "python"

_impl = BACKENDS[BACKEND]

inverse_table = _impl.inverse_table
clean_counts = _impl.clean_counts
radical_mask = _impl.radical_mask
saturate = _impl.saturate
componentwise_table = _impl.componentwise_table
bilinear_table = _impl.bilinear_table
assoc_violation = _impl.assoc_violation
distrib_violation = _impl.distrib_violation

_NAMES = ("inverse_table", "clean_counts", "radical_mask", "saturate", "componentwise_table",
          "bilinear_table", "assoc_violation", "distrib_violation")


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily route every kernel call to backend ``name``."""
    global BACKEND
    impl = BACKENDS[name]
    g = globals()
    saved = {n: g[n] for n in _NAMES}, BACKEND
    g.update({n: getattr(impl, n) for n in _NAMES})
    BACKEND = name
    try:
        yield impl
    finally:
        g.update(saved[0])
        BACKEND = saved[1]
