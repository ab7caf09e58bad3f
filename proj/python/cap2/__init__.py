"""Capability of two-generator 2-groups of class two."""

from ._cap2 import *  # noqa: F401,F403
from ._cap2 import __doc__  # noqa: F401
