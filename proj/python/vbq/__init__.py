"""Finite virtual biquandles, virtual braid actions and coloring counts."""

from ._core import *  # noqa: F401,F403
from ._core import AxiomFailure, BudgetExceeded, OperatorTable, VirtualBiquandle

__all__ = [name for name in dir() if not name.startswith("_")]
