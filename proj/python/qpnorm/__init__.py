"""Maximal p-norms of completely positive maps.

Thin wrapper over the compiled extension; see the function docstrings
on qpnorm._core for the full API.
"""

from qpnorm._core import *  # noqa: F401,F403
from qpnorm._core import __version__  # noqa: F401
