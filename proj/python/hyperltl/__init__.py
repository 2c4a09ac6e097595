"""Python bindings for the hyperchk HyperLTL model checker."""

from ._core import (
    BudgetError,
    FragmentError,
    QuantifiedFormula,
    System,
    Verdict,
    check,
    load_system,
    oracle_holds,
    parse,
    policy,
    policy_names,
)

__all__ = [
    "BudgetError",
    "FragmentError",
    "QuantifiedFormula",
    "System",
    "Verdict",
    "check",
    "load_system",
    "oracle_holds",
    "parse",
    "policy",
    "policy_names",
]
