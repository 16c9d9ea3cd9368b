"""Exact verification, enumeration and deformation of translational tilings."""

try:
    from ._tilekit import *  # noqa: F401,F403
    from ._tilekit import __doc__ as _core_doc  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _tilekit import *  # noqa: F401,F403
