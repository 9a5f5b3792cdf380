"""Minute-resolution residential electric load profile simulation.

Thin wrapper over the C++ core: scenario runners (calibrate, simulate,
analyze, pipeline) plus a few small model helpers.
"""

from ._core import (
    __version__,
    cold_duty_probability,
    effective_occupancy,
    profile_energy_kwh,
    run_analyze,
    run_calibrate,
    run_pipeline,
    run_simulate,
)

__all__ = [
    "__version__",
    "cold_duty_probability",
    "effective_occupancy",
    "profile_energy_kwh",
    "run_analyze",
    "run_calibrate",
    "run_pipeline",
    "run_simulate",
]
