import json

import pytest

import edgeplace as ep


def test_topology_delays():
    topo = ep.Topology.build_grid(2, 1, 1.0)
    assert topo.cloudlet_count == 2
    assert topo.delay(0, 0) == 10.0
    assert topo.delay(0, 1) == 35.0
    assert topo.locate_base_station(0.5, 1.5) == 1
    assert topo.with_lambda(0.0).delay_matrix() == [[10.0, 10.0], [10.0, 10.0]]


def test_energy_reference_points():
    m = ep.EnergyModel()
    assert m.pm_power(600.0) == 200.0
    assert m.demand_exact([100.0] * 30) == 1000.0
    assert m.demand_exact([50.0] * 7) == 230.0
    assert m.demand_linear([]) == 0.0
    assert ep.on_grid_power(1200.0, 1000.0) == 200.0


def test_solvers():
    lam = ep.AssignmentProblem("linear_delay", [[10.0, 35.0]], [1, 1], device_groups=[0, 0])
    a = ep.solve_transportation(lam)
    assert a.objective_value == 45.0
    assert ep.brute_force(lam).objective_value == 45.0

    eam = ep.AssignmentProblem(
        "rectified_energy",
        [[10.0, 10.0], [10.0, 10.0]],
        [2, 2],
        green=[40.0, 1000.0],
        loads=[30.0, 30.0],
        feasible_sets=[[0], [0]],
    )
    assert ep.solve_eam_exact(eam).objective_value == 20.0
    assert ep.solve_eam_heuristic(eam).objective_value == 20.0
    back = ep.AssignmentProblem.from_json(eam.to_json())
    assert back.device_count == 2


def test_errors_map_to_python_exceptions():
    lam = ep.AssignmentProblem("linear_delay", [[10.0, 35.0]], [1, 1], device_groups=[0, 0, 0])
    with pytest.raises(ep.InfeasibleError):
        ep.solve_transportation(lam)
    with pytest.raises(ValueError):
        ep.AssignmentProblem("speed", [[1.0]], [1])


def test_trace_round_trip(tmp_path):
    topo = ep.Topology.build_grid(5, 5, 1.0)
    trace = ep.generate_synthetic(1, 50, 4, topo)
    path = tmp_path / "trace.csv"
    ep.save_trace(path, trace)
    back = ep.load_trace(path, topo)
    assert back.device_count == 50
    assert [back.slot_associations(s) for s in range(4)] == [
        trace.slot_associations(s) for s in range(4)
    ]
    u = ep.assign_utilizations(2, 1000)
    assert all(20.0 <= x <= 100.0 for x in u)


def test_run_and_sweep():
    scenario = ep.scenario_from_config({"mobility": {"slots": 3}})
    assert scenario.device_count == 632
    scenario.strategy = "eam"
    report = ep.run(scenario)
    assert report.slot_count == 3
    assert report.aggregates.mean_violation_rate == 0.0
    summary = json.loads(report.summary_json())
    assert summary["strategy"] == "eam"
    reports = ep.sweep_green(scenario, [0.0, 1000.0])
    assert reports[1].aggregates.mean_on_grid_w == 0.0
    assert reports[0].aggregates.mean_on_grid_w > 0.0
