"""Numerical verification of Hamiltonian stationary Lagrangian surfaces.

The heavy lifting lives in the compiled `_core` extension; this package
re-exports it. When running from a plain CMake build tree, put the
directory containing the built `_core` module on `sys.path`.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed wheel layout)
    from ._core import __doc__ as _core_doc
except ImportError:  # in-tree build: _core sits on sys.path directly
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__all__ = [
    "list_catalog",
    "verify",
    "verify_json",
    "point_geometry",
    "dump_fields",
    "first_variation",
    "area",
    "herm",
    "symplectic_form",
    "growth_ratio",
    "gauss_bonnet_flat",
]
