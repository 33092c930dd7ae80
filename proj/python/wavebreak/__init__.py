"""Wave-breaking criteria and pseudospectral simulation for nonlocal
perturbations of the Burgers equation."""

from wavebreak._core import *  # noqa: F401,F403
from wavebreak._core import __version__  # noqa: F401
