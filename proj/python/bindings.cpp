#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "edgeplace/config.hpp"
#include "edgeplace/energy.hpp"
#include "edgeplace/mobility.hpp"
#include "edgeplace/optimizer.hpp"
#include "edgeplace/problem_io.hpp"
#include "edgeplace/report.hpp"
#include "edgeplace/simulator.hpp"
#include "edgeplace/topology.hpp"

namespace py = pybind11;
using namespace edgeplace;

namespace {

std::vector<std::vector<double>> ToRows(const Matrix<double>& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

Matrix<double> FromRows(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  Matrix<double> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged cost matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

AssignmentProblem MakeProblem(const std::string& objective,
                              const std::vector<std::vector<double>>& costs,
                              const std::vector<int>& capacities,
                              std::optional<std::vector<int>> device_groups,
                              const std::vector<double>& green, const std::vector<double>& loads,
                              std::optional<std::vector<std::vector<int>>> feasible_sets) {
  AssignmentProblem p;
  if (objective == "linear_delay") {
    p.objective = ObjectiveKind::kLinearDelay;
  } else if (objective == "rectified_energy") {
    p.objective = ObjectiveKind::kRectifiedEnergy;
  } else {
    throw InvalidArgument("objective must be 'linear_delay' or 'rectified_energy'");
  }
  p.costs = FromRows(costs, capacities.size());
  p.capacities = capacities;
  if (device_groups) {
    p.device_groups = *device_groups;
  } else {
    for (std::size_t i = 0; i < costs.size(); ++i) p.device_groups.push_back(static_cast<int>(i));
  }
  p.green = green;
  p.loads = loads;
  p.feasible_sets = std::move(feasible_sets);
  p.Validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_edgeplace, m) {
  m.doc() = "Proxy-VM placement across edge cloudlets: solvers, energy model and simulator.";

  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<CloudletParams>(m, "CloudletParams")
      .def(py::init<>())
      .def_readwrite("pm_count", &CloudletParams::pm_count)
      .def_readwrite("vms_per_pm", &CloudletParams::vms_per_pm)
      .def_readwrite("green_power_w", &CloudletParams::green_power_w)
      .def_readwrite("static_pm_power_w", &CloudletParams::static_pm_power_w)
      .def_readwrite("power_coefficient_w_per_pct", &CloudletParams::power_coefficient_w_per_pct)
      .def_property_readonly("capacity", &CloudletParams::capacity);

  py::class_<Topology>(m, "Topology")
      .def_static("build_grid", &Topology::BuildGrid, py::arg("rows"), py::arg("cols"),
                  py::arg("cell_km"), py::arg("cloudlet") = CloudletParams{},
                  py::arg("lambda_ms_per_km") = 25.0, py::arg("beta_ms") = 10.0)
      .def_property_readonly("base_station_count", &Topology::base_station_count)
      .def_property_readonly("cloudlet_count", &Topology::cloudlet_count)
      .def_property_readonly("total_capacity", &Topology::total_capacity)
      .def_property_readonly("lambda_ms_per_km", &Topology::lambda)
      .def_property_readonly("beta_ms", &Topology::beta)
      .def("distance", &Topology::Distance, py::arg("bs"), py::arg("cloudlet"))
      .def("delay", &Topology::Delay, py::arg("bs"), py::arg("cloudlet"))
      .def("delay_matrix", [](const Topology& t) { return ToRows(t.delay_matrix()); })
      .def("locate_base_station",
           [](const Topology& t, double x, double y) { return t.LocateBaseStation({x, y}); })
      .def("with_lambda", &Topology::WithLambda)
      .def("with_uniform_green", &Topology::WithUniformGreen);

  py::class_<MobilityTrace>(m, "MobilityTrace")
      .def_static("from_associations", &MobilityTrace::FromAssociations, py::arg("slot_count"),
                  py::arg("device_count"), py::arg("associations"), py::arg("topology"),
                  py::arg("slot_duration_h") = 0.5)
      .def_property_readonly("slot_count", &MobilityTrace::slot_count)
      .def_property_readonly("device_count", &MobilityTrace::device_count)
      .def_property_readonly("slot_duration_h", &MobilityTrace::slot_duration_h)
      .def("base_station_of", &MobilityTrace::BaseStationOf)
      .def("slot_associations", [](const MobilityTrace& t, int slot) {
        const auto s = t.SlotAssociations(slot);
        return std::vector<int>(s.begin(), s.end());
      });

  m.def(
      "generate_synthetic",
      [](std::uint64_t seed, int devices, int slots, const Topology& topo, double min_speed,
         double max_speed, double slot_h) {
        return GenerateSynthetic(seed, devices, slots, topo, {min_speed, max_speed, slot_h});
      },
      py::arg("seed"), py::arg("device_count"), py::arg("slot_count"), py::arg("topology"),
      py::arg("min_speed_kmh") = 3.0, py::arg("max_speed_kmh") = 30.0,
      py::arg("slot_duration_h") = 0.5);
  m.def("load_trace", &LoadTrace, py::arg("path"), py::arg("topology"),
        py::arg("slot_duration_h") = 0.5);
  m.def("save_trace", &SaveTrace, py::arg("path"), py::arg("trace"));
  m.def("count_handovers", &CountHandovers);
  m.def(
      "assign_utilizations",
      [](std::uint64_t seed, int count, double lo, double hi) {
        std::vector<double> out;
        for (const auto& d : AssignUtilizations(seed, count, lo, hi)) out.push_back(d.utilization_pct);
        return out;
      },
      py::arg("seed"), py::arg("device_count"), py::arg("min_pct") = 20.0,
      py::arg("max_pct") = 100.0);

  py::class_<EnergyModel>(m, "EnergyModel")
      .def(py::init<>())
      .def_readwrite("static_pm_power_w", &EnergyModel::static_pm_power_w)
      .def_readwrite("power_coefficient_w_per_pct", &EnergyModel::power_coefficient_w_per_pct)
      .def_readwrite("vms_per_pm", &EnergyModel::vms_per_pm)
      .def_readwrite("slot_duration_h", &EnergyModel::slot_duration_h)
      .def("pm_power", &EnergyModel::PmPower)
      .def("per_vm_load", &EnergyModel::PerVmLoad)
      .def("demand_exact",
           [](const EnergyModel& e, const std::vector<double>& u) { return e.CloudletDemandExact(u); })
      .def("demand_linear",
           [](const EnergyModel& e, const std::vector<double>& u) { return e.CloudletDemandLinear(u); });
  m.def("on_grid_power", &OnGridPower, py::arg("demand_w"), py::arg("green_w"));

  py::class_<AssignmentProblem>(m, "AssignmentProblem")
      .def(py::init(&MakeProblem), py::arg("objective"), py::arg("costs"), py::arg("capacities"),
           py::arg("device_groups") = py::none(), py::arg("green") = std::vector<double>{},
           py::arg("loads") = std::vector<double>{}, py::arg("feasible_sets") = py::none())
      .def_property_readonly("device_count", &AssignmentProblem::device_count)
      .def_property_readonly("cloudlet_count", &AssignmentProblem::cloudlet_count)
      .def("evaluate", [](const AssignmentProblem& p, const std::vector<int>& placement) {
        return EvaluateObjective(p, placement);
      })
      .def("to_json", [](const AssignmentProblem& p) { return ProblemToJson(p).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return ProblemFromJson(nlohmann::json::parse(text));
      });

  py::class_<Assignment>(m, "Assignment")
      .def_readonly("placement", &Assignment::placement)
      .def_readonly("objective_value", &Assignment::objective_value)
      .def_readonly("relaxed", &Assignment::relaxed)
      .def_property_readonly("status",
                             [](const Assignment& a) { return std::string(ToString(a.status)); });

  m.def("solve_transportation", &SolveTransportation, py::arg("problem"));
  m.def(
      "solve_eam_exact",
      [](const AssignmentProblem& p, int max_devices, int max_cloudlets) {
        return SolveEamExact(p, {max_devices, max_cloudlets});
      },
      py::arg("problem"), py::arg("max_devices") = 12, py::arg("max_cloudlets") = 4);
  m.def(
      "solve_eam_heuristic",
      [](const AssignmentProblem& p, int move_cap, bool delay_polish, int perturbation_rounds,
         std::uint64_t seed) {
        return SolveEamHeuristic(p, {move_cap, delay_polish, perturbation_rounds, seed});
      },
      py::arg("problem"), py::arg("move_cap") = 10000, py::arg("delay_polish") = true,
      py::arg("perturbation_rounds") = 50, py::arg("seed") = 1);
  m.def("brute_force", &BruteForce, py::arg("problem"), py::arg("max_enumerations") = 1e7);

  py::class_<RunAggregates>(m, "RunAggregates")
      .def_readonly("mean_average_delay_ms", &RunAggregates::mean_average_delay_ms)
      .def_readonly("max_delay_ms", &RunAggregates::max_delay_ms)
      .def_readonly("mean_violation_rate", &RunAggregates::mean_violation_rate)
      .def_readonly("total_violations", &RunAggregates::total_violations)
      .def_readonly("total_relaxed", &RunAggregates::total_relaxed)
      .def_readonly("mean_on_grid_w", &RunAggregates::mean_on_grid_w)
      .def_readonly("total_on_grid_wh", &RunAggregates::total_on_grid_wh)
      .def_readonly("mean_linearization_gap_w", &RunAggregates::mean_linearization_gap_w)
      .def_readonly("total_migrations", &RunAggregates::total_migrations);

  py::class_<RunReport>(m, "RunReport")
      .def_property_readonly("strategy",
                             [](const RunReport& r) { return std::string(ToString(r.strategy)); })
      .def_readonly("aggregates", &RunReport::aggregates)
      .def_property_readonly("slot_count", [](const RunReport& r) { return r.slots.size(); })
      .def("slot_csv", &SlotCsv)
      .def("summary_json", [](const RunReport& r) {
        return SummaryJson(r, nlohmann::json::object()).dump();
      });

  py::class_<Scenario>(m, "Scenario")
      .def_static(
          "from_config_json",
          [](const std::string& text) {
            return BuildScenario(ParseRunConfig(nlohmann::json::parse(text)));
          },
          py::arg("config_json") = "{}")
      .def_property_readonly("device_count",
                             [](const Scenario& s) { return s.trace.device_count(); })
      .def_property_readonly("slot_count", [](const Scenario& s) { return s.trace.slot_count(); })
      .def_readwrite("gamma_ms", &Scenario::gamma_ms)
      .def_property(
          "strategy", [](const Scenario& s) { return std::string(ToString(s.strategy)); },
          [](Scenario& s, const std::string& name) { s.strategy = ParseStrategy(name); });

  m.def("run", &Run, py::arg("scenario"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_green",
      [](const Scenario& s, const std::vector<double>& v) { return SweepGreen(s, v); },
      py::arg("scenario"), py::arg("green_w"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_lambda",
      [](const Scenario& s, const std::vector<double>& v) { return SweepLambda(s, v); },
      py::arg("scenario"), py::arg("lambda_ms_per_km"), py::call_guard<py::gil_scoped_release>());
}
