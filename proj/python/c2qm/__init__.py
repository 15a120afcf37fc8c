"""Quantum mechanics on C^2: monopole states, gauge fields, identity checks."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "1.0.0"
