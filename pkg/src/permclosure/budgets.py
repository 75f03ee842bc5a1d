"""Search bounds.

Defaults keep every built-in verification comfortably inside desk scale
while refusing absurd inputs fast.  Each bound can be overridden per call,
through CLI flags, or with environment variables read at import time:

    PERMCLOSURE_TUPLE_BUDGET          largest tuple space that will be indexed
    PERMCLOSURE_CANDIDATE_BUDGET      largest candidate pool filtered per closure call
    PERMCLOSURE_MATERIALIZATION_BOUND largest group materialized element by element
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

TUPLE_ENV = "PERMCLOSURE_TUPLE_BUDGET"
CANDIDATE_ENV = "PERMCLOSURE_CANDIDATE_BUDGET"
MATERIALIZATION_ENV = "PERMCLOSURE_MATERIALIZATION_BOUND"

DEFAULT_TUPLE_BUDGET = 10**8
DEFAULT_CANDIDATE_BUDGET = 10**7
DEFAULT_MATERIALIZATION_BOUND = math.factorial(10)


@dataclass(frozen=True)
class Budgets:
    tuple_budget: int = DEFAULT_TUPLE_BUDGET
    candidate_budget: int = DEFAULT_CANDIDATE_BUDGET
    materialization_bound: int = DEFAULT_MATERIALIZATION_BOUND

    def __post_init__(self):
        for name in ("tuple_budget", "candidate_budget", "materialization_bound"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def default_budgets() -> Budgets:
    """Budgets from the environment, falling back to the package defaults."""
    return Budgets(
        tuple_budget=_env_int(TUPLE_ENV, DEFAULT_TUPLE_BUDGET),
        candidate_budget=_env_int(CANDIDATE_ENV, DEFAULT_CANDIDATE_BUDGET),
        materialization_bound=_env_int(MATERIALIZATION_ENV, DEFAULT_MATERIALIZATION_BOUND),
    )


DEFAULT = default_budgets()


def resolve(budgets: Budgets | None) -> Budgets:
    return DEFAULT if budgets is None else budgets
