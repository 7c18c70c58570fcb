"""Select the compiled kernels when available, else the pure-Python ones.

Set ``MVBRAID_PURE_PYTHON=1`` to force the Python implementation.
"""

import os

if os.environ.get("MVBRAID_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
free_reduce = _impl.free_reduce
trace = _impl.trace
rewrite = _impl.rewrite
enumerate_cosets = _impl.enumerate_cosets
