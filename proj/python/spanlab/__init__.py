"""Signed sumsets, Cayley graph diameters, and extremal censuses for finite
abelian groups of rank at most 2."""

from ._spanlab import *  # noqa: F401,F403
from ._spanlab import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
