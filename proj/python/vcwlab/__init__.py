"""Viscous contact wave solvers and diagnostics."""

from ._core import (
    GasInputs,
    Grid1D,
    PhysParams,
    ProfileParams,
    ProfileState,
    VcwError,
    advance_profile,
    build_params,
    build_profile,
    entropy_phi,
    eval_theta2_and_K,
    fit_power_law,
    load_config,
    parse_config,
    run_scenario,
    theta0,
)

__all__ = [
    "GasInputs",
    "Grid1D",
    "PhysParams",
    "ProfileParams",
    "ProfileState",
    "VcwError",
    "advance_profile",
    "build_params",
    "build_profile",
    "entropy_phi",
    "eval_theta2_and_K",
    "fit_power_law",
    "load_config",
    "parse_config",
    "run_scenario",
    "theta0",
]
