"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module.  Setting ``IRLAB_BACKEND=python`` forces the fallback.
"""
import os

from irlab import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("IRLAB_BACKEND", "").lower() != "python":
    try:
        from irlab import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass

canon_label = _impl.canon_label
dom_feasible = _impl.dom_feasible
ir_search = _impl.ir_search
find_induced = _impl.find_induced
bc_pair_exists = _impl.bc_pair_exists
induced_p4_sequences = _impl.induced_p4_sequences


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from irlab import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
