"""Backend selection for the Faddeeva / dispersion kernel.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``STOKES_SPECTRA_KERNEL=python`` to force the
fallback (the benchmark and the backend-agreement tests do this).
"""

import os

if os.environ.get("STOKES_SPECTRA_KERNEL", "").lower() == "python":
    from ._kernel_py import *  # noqa: F401,F403
    from ._kernel_py import BACKEND
else:
    try:
        from ._kernel import *  # noqa: F401,F403
        from ._kernel import BACKEND
    except ImportError:
        from ._kernel_py import *  # noqa: F401,F403
        from ._kernel_py import BACKEND

__all__ = [
    "BACKEND",
    "faddeeva",
    "lambda0_upper",
    "dlambda0_upper",
    "lambda0_real",
    "plasma_z_upper",
    "lambda0_upper_array",
    "lambda0_real_array",
]
