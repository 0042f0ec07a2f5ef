"""Signal alignment for multi-user MIMO two-way relay networks.

Thin Python façade over the compiled core. The main entry points are:

- :func:`upper_bound`, :func:`achievable_dof`, :func:`plane_points` for the
  degrees-of-freedom geometry,
- :func:`design` / :func:`check_alignment` for explicit constructions,
- :func:`run_once` / :func:`run_batch` for seeded end-to-end simulation.
"""

from ._core import (
    AlignmentReport,
    BatchReport,
    ChannelRealization,
    ConstructionError,
    Design,
    PairCheck,
    PlanePoint,
    SimReport,
    StreamMatrix,
    SystemConfig,
    TolerancePolicy,
    achievable_dof,
    asymptotic_dof,
    check_alignment,
    cutset_bound,
    design,
    generic_feasible,
    plane_points,
    run_batch,
    run_once,
    sample_channels,
    symbol_extend,
    upper_bound,
)

__all__ = [
    "AlignmentReport",
    "BatchReport",
    "ChannelRealization",
    "ConstructionError",
    "Design",
    "PairCheck",
    "PlanePoint",
    "SimReport",
    "StreamMatrix",
    "SystemConfig",
    "TolerancePolicy",
    "achievable_dof",
    "asymptotic_dof",
    "check_alignment",
    "cutset_bound",
    "design",
    "generic_feasible",
    "plane_points",
    "run_batch",
    "run_once",
    "sample_channels",
    "symbol_extend",
    "upper_bound",
]

__version__ = "0.1.0"
