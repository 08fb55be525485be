"""Shift-method simulation toolkit.

Thin wrapper over the _shiftmc extension: seeded uniform tapes, MC/shift/QMC
estimators, low-discrepancy nodes and the branching-transport benchmark.
"""

from ._shiftmc import (
    ContractViolation,
    ReclaimedCellError,
    Tape,
    __version__,
    batch_means_variance,
    estimate,
    halton_point,
    koksma_hlawka_bound,
    radical_inverse,
    run_ruin,
    run_table,
    run_transport,
    star_discrepancy_1d,
    uniforms,
)

__all__ = [
    "ContractViolation",
    "ReclaimedCellError",
    "Tape",
    "__version__",
    "batch_means_variance",
    "estimate",
    "halton_point",
    "koksma_hlawka_bound",
    "radical_inverse",
    "run_ruin",
    "run_table",
    "run_transport",
    "star_discrepancy_1d",
    "uniforms",
]
