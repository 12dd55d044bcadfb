"""Proxy-VM placement across edge cloudlets.

Thin Python surface over the C++ core: grid topology, mobility traces,
the cloudlet energy model, the placement solvers and the slot simulator.
"""

import json as _json

from ._edgeplace import (
    Assignment,
    AssignmentProblem,
    CloudletParams,
    EnergyModel,
    InfeasibleError,
    InvalidArgument,
    IoError,
    MobilityTrace,
    RunAggregates,
    RunReport,
    Scenario,
    Topology,
    assign_utilizations,
    brute_force,
    count_handovers,
    generate_synthetic,
    load_trace,
    on_grid_power,
    run,
    save_trace,
    solve_eam_exact,
    solve_eam_heuristic,
    solve_transportation,
    sweep_green,
    sweep_lambda,
)


def scenario_from_config(config=None):
    """Build a Scenario from a config dict (missing keys take defaults)."""
    return Scenario.from_config_json(_json.dumps(config or {}))


__all__ = [
    "Assignment",
    "AssignmentProblem",
    "CloudletParams",
    "EnergyModel",
    "InfeasibleError",
    "InvalidArgument",
    "IoError",
    "MobilityTrace",
    "RunAggregates",
    "RunReport",
    "Scenario",
    "Topology",
    "assign_utilizations",
    "brute_force",
    "count_handovers",
    "generate_synthetic",
    "load_trace",
    "on_grid_power",
    "run",
    "save_trace",
    "scenario_from_config",
    "solve_eam_exact",
    "solve_eam_heuristic",
    "solve_transportation",
    "sweep_green",
    "sweep_lambda",
]
