"""Numerics for the meromorphic W-map of the zeta functional equation.

The heavy lifting lives in the compiled extension ``wmap._core``; this
package re-exports its public surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
