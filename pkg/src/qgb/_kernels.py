"""Kernel backend selection.

Imports the compiled kernels when available, otherwise the pure-Python
fallback.  Set QGB_PURE_PYTHON=1 to force the fallback (used by the
benchmark to compare both backends).
"""

import os

if os.environ.get("QGB_PURE_PYTHON"):
    from qgb._kernels_py import (  # noqa: F401
        BACKEND, axpy, axpy_mod, exp_divides, mul, mul_mod, tuple_add, tuple_sub,
    )
else:
    try:
        from qgb._ckernels import (  # noqa: F401
            BACKEND, axpy, axpy_mod, exp_divides, mul, mul_mod, tuple_add, tuple_sub,
        )
    except ImportError:
        from qgb._kernels_py import (  # noqa: F401
            BACKEND, axpy, axpy_mod, exp_divides, mul, mul_mod, tuple_add, tuple_sub,
        )
