from ._rabi import (
    BarrierStats,
    ConfigError,
    DoubletCounts,
    NumericError,
    RegimeError,
    VariationalSolution,
    barrier_stats,
    doublet_counts,
    doublet_energies,
    feasibility,
    lower_band_at,
    run_cli,
    spectrum,
    tunneling_splitting,
    variational_params,
)

__all__ = [name for name in dir() if not name.startswith("_")]
