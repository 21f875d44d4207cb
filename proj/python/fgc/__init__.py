"""Exact cocycles on cyclic sets and fat graphs, with their closed-form constants."""

try:
    from ._fgc import *  # noqa: F401,F403
    from . import _fgc as _core
except ImportError:  # building out of tree: the module sits next to the package
    from _fgc import *  # noqa: F401,F403
    import _fgc as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
