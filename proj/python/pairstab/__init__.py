"""Exact semistability checks for vector pairs in SL2/SL3 representations."""

from pairstab._core import *  # noqa: F401,F403
from pairstab._core import __version__  # noqa: F401
