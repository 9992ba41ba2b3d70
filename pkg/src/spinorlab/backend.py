"""Kernel backend selection.

The compiled extension is preferred when present; the pure-numpy fallback is
bit-compatible.  Set SPINORLAB_BACKEND=pure|compiled to force a choice
(``compiled`` raises if the extension is missing).
"""
import os

from . import _pure

_requested = os.environ.get("SPINORLAB_BACKEND", "auto")
if _requested not in ("auto", "compiled", "pure"):
    raise ValueError(f"SPINORLAB_BACKEND must be auto|compiled|pure, got {_requested!r}")

if _requested == "pure":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _pure
        BACKEND = "pure"

bilinears = _impl.bilinears
helicity_residuals = _impl.helicity_residuals
dirac_apply_shift = _impl.dirac_apply_shift


def available_backends():
    """Mapping of backend name to kernel module, for benchmarks and tests."""
    found = {"pure": _pure}
    try:
        from . import _core

        found["compiled"] = _core
    except ImportError:
        pass
    return found
