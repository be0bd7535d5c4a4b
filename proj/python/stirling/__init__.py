from ._stirling import (
    BathSpec,
    DistanceDiagnostics,
    EnergyLedger,
    InvalidParameter,
    LedgerColumns,
    NumericalError,
    RunConfig,
    SweepRow,
    coupling_spectrum,
    limiting_cycles,
    oracles_csv,
    parse_config,
    run_cycle,
    spectrum_csv,
    sweep,
    time_scales,
)

__all__ = [
    "BathSpec",
    "DistanceDiagnostics",
    "EnergyLedger",
    "InvalidParameter",
    "LedgerColumns",
    "NumericalError",
    "RunConfig",
    "SweepRow",
    "coupling_spectrum",
    "limiting_cycles",
    "oracles_csv",
    "parse_config",
    "run_cycle",
    "spectrum_csv",
    "sweep",
    "time_scales",
]
