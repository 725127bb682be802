"""Tensor-product multiplicities via sums over tables of partitions."""

try:
    from ._lrct import *  # noqa: F401,F403
    from . import _lrct as _impl
except ImportError:  # in-tree test runs put the extension on sys.path directly
    from _lrct import *  # noqa: F401,F403
    import _lrct as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
