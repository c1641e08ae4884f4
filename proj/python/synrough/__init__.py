"""Synthetic surface roughness from a single colormapped scan."""

from ._synrough import *  # noqa: F401,F403
from ._synrough import __doc__  # noqa: F401

__version__ = "0.1.0"
