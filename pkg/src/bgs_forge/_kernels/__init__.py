"""Simulation kernels: compiled extension when built, pure Python otherwise.

Set ``BGS_FORGE_PURE=1`` to force the pure-Python backend.
"""

import os

from . import _pure

if os.environ.get("BGS_FORGE_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = _pure

BACKEND = "native" if _impl is not _pure else "python"

HALTED = _pure.HALTED
CUTOFF = _pure.CUTOFF
UNDEFINED = _pure.UNDEFINED

run_tm = _impl.run_tm
run_beaver = _impl.run_beaver
brute_census = _impl.brute_census
beaver_options = _pure.beaver_options


def backends():
    """Mapping of every importable backend name to its module."""
    found = {"python": _pure}
    try:
        from . import _native
    except ImportError:
        pass
    else:
        found["native"] = _native
    return found
