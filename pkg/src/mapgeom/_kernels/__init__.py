"""Hot inner loops: orbit sweeps, cycle walks and rooted map codes.

The compiled extension ``_ckernels`` is used when it has been built;
otherwise the pure-Python ``_pykernels`` twin is loaded.  Setting
``MAPGEOM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("MAPGEOM_PURE_PYTHON") != "1":
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = "cython" if _active is compiled_backend else "python"

orbit_labels = _active.orbit_labels
cycles = _active.cycles
cycle_count = _active.cycle_count
face_permutation = _active.face_permutation
rooted_code = _active.rooted_code
canonical_code = _active.canonical_code
matching_roots = _active.matching_roots

__all__ = [
    "BACKEND",
    "canonical_code",
    "compiled_backend",
    "cycle_count",
    "cycles",
    "face_permutation",
    "matching_roots",
    "orbit_labels",
    "python_backend",
    "rooted_code",
]
