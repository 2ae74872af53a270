"""Python interface to the plap-claw simulation core."""

from ._plapclaw import *  # noqa: F401,F403
from ._plapclaw import __version__  # noqa: F401
