"""Common-root experiments for random ±1 polynomial systems.

Thin package wrapper around the _crl extension module.
"""

from _crl import *  # noqa: F401,F403
from _crl import __doc__  # noqa: F401
