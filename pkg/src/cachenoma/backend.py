"""Kernel backend selection.

The hot scalar kernels exist twice: a compiled extension (``_ckernels``) and
a pure-Python twin (``_kernels_py``).  Selection happens once at import:

* ``CACHENOMA_BACKEND=c``    require the extension, fail if missing
* ``CACHENOMA_BACKEND=py``   force the pure-Python kernels
* unset / ``auto``           prefer the extension, fall back silently
"""
import os

from . import _kernels_py

_choice = os.environ.get("CACHENOMA_BACKEND", "auto").lower()

if _choice not in ("auto", "c", "py"):
    raise ImportError(f"CACHENOMA_BACKEND must be 'auto', 'c' or 'py', got {_choice!r}")

_impl = None
if _choice in ("auto", "c"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        if _choice == "c":
            raise ImportError(
                "CACHENOMA_BACKEND=c but the compiled extension is not available"
            )
        _impl = None
if _impl is None:
    _impl = _kernels_py

ln_gamma = _impl.ln_gamma
bessel_k = _impl.bessel_k
pdf_w = _impl.pdf_w
cdf_w = _impl.cdf_w
sf_w = _impl.sf_w
TAIL_SWITCH = _impl.TAIL_SWITCH


def active_backend():
    """'c' when the compiled extension is in use, 'py' otherwise."""
    return "py" if _impl is _kernels_py else "c"
