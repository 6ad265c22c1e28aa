"""Exact contraction ranks, cohomology and grid curves on P^1 x P^1."""

from ._core import *  # noqa: F401,F403
from ._core import DEFAULT_PRIME, ESCALATION_PRIME, __version__  # noqa: F401
