"""Thompson NFAs and their simulation."""

from .nfa import Label, Nfa, StateSet, compile_nfa
from .simulation import (
    BoolArray,
    SummaryVector,
    accepts,
    eps_closure,
    prefix_acceptance,
    run,
    states_of,
    step,
    summary_accepts_from,
    summary_init,
    summary_inject,
    summary_step,
)

__all__ = [
    "BoolArray",
    "Label",
    "Nfa",
    "StateSet",
    "SummaryVector",
    "accepts",
    "compile_nfa",
    "eps_closure",
    "prefix_acceptance",
    "run",
    "states_of",
    "step",
    "summary_accepts_from",
    "summary_init",
    "summary_inject",
    "summary_step",
]
