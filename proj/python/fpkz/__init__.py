"""Exact F_p-hypergeometric solutions of the KZ system.

The heavy lifting happens in the C++ extension; this package re-exports the
main operations: instance arithmetic, solution construction, verification,
leading-term predictions, the determinant identity and the brute-force
solution-space oracle.
"""

from ._fpkz import (
    FpkzError,
    KzInstance,
    beta,
    binom,
    det_report,
    gamma,
    initial_value,
    leading,
    make_instance,
    reduce,
    search,
    selftest,
    solve,
    verify,
)

__all__ = [
    "FpkzError",
    "KzInstance",
    "beta",
    "binom",
    "det_report",
    "gamma",
    "initial_value",
    "leading",
    "make_instance",
    "reduce",
    "search",
    "selftest",
    "solve",
    "verify",
]

__version__ = "0.1.0"
