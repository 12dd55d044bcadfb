#include "edgeplace/simulator.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace edgeplace {

void Scenario::Validate() const {
  if (!(gamma_ms > 0.0)) throw InvalidArgument("gamma must be > 0");
  if (topology.cloudlet_count() == 0) throw InvalidArgument("scenario has no cloudlets");
  if (trace.slot_count() < 1) throw InvalidArgument("trace has no slots");
  if (devices.size() != static_cast<std::size_t>(trace.device_count()))
    throw InvalidArgument("utilization list has " + std::to_string(devices.size()) +
                          " devices, trace has " + std::to_string(trace.device_count()));
  for (int t = 0; t < trace.slot_count(); ++t)
    for (int bs : trace.SlotAssociations(t))
      if (bs < 0 || bs >= topology.base_station_count())
        throw InvalidArgument("trace references BS " + std::to_string(bs) +
                              " outside the topology");
  for (const auto& d : devices)
    if (!(d.utilization_pct > 0.0 && d.utilization_pct <= 100.0))
      throw InvalidArgument("device utilization must lie in (0, 100]");
  const auto& first = topology.cloudlets().front().params;
  for (const auto& c : topology.cloudlets()) {
    if (c.params.static_pm_power_w != first.static_pm_power_w ||
        c.params.power_coefficient_w_per_pct != first.power_coefficient_w_per_pct ||
        c.params.vms_per_pm != first.vms_per_pm)
      throw InvalidArgument("all cloudlets must share static power, power coefficient and "
                            "VMs per PM");
  }
  if (topology.total_capacity() < trace.device_count())
    throw InfeasibleError("total cloudlet capacity " + std::to_string(topology.total_capacity()) +
                          " is below the device count " + std::to_string(trace.device_count()) +
                          " (cloudlet capacity constraint)");
}

EnergyModel Scenario::energy_model() const {
  return EnergyModel::FromCloudlet(topology.cloudlets().front().params, trace.slot_duration_h());
}

SlotMetrics EvaluateSlot(const Scenario& scenario, const EnergyModel& model, int slot,
                         const Placement& placement, std::span<const int> previous) {
  const Topology& topo = scenario.topology;
  const int n = scenario.trace.device_count();
  const int m = topo.cloudlet_count();
  SlotMetrics s;
  s.slot = slot;

  std::vector<int> count(m, 0);
  std::vector<double> util(m, 0.0);
  double delay_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = placement.cloudlet_of[i];
    const double delay = topo.delay_matrix()(scenario.trace.BaseStationOf(slot, i), k);
    delay_sum += delay;
    s.max_delay_ms = std::max(s.max_delay_ms, delay);
    if (delay > scenario.gamma_ms) ++s.violation_count;
    ++count[k];
    util[k] += scenario.devices[i].utilization_pct;
    if (!previous.empty() && previous[i] != k) ++s.migration_count;
  }
  s.average_delay_ms = n > 0 ? delay_sum / n : 0.0;
  s.violation_rate = n > 0 ? static_cast<double>(s.violation_count) / n : 0.0;
  s.relaxed_count =
      static_cast<int>(std::count(placement.relaxed.begin(), placement.relaxed.end(), true));

  s.cloudlets.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double green = topo.cloudlets()[k].params.green_power_w;
    const CloudletEnergyState c = EvaluateCloudlet(model, count[k], util[k], green);
    const double linear = model.CloudletDemandLinear(count[k], util[k]);
    s.demand_w += c.demand_w;
    s.green_w += green;
    s.green_used_w += std::min(c.demand_w, green);
    s.on_grid_w += c.on_grid_w;
    s.linear_on_grid_w += OnGridPower(linear, green);
    s.linearization_gap_w += c.demand_w - linear;
    s.cloudlets.push_back(c);
  }
  return s;
}

RunAggregates Summarize(std::span<const SlotMetrics> slots, double slot_duration_h) {
  RunAggregates a;
  if (slots.empty()) return a;
  for (const auto& s : slots) {
    a.mean_average_delay_ms += s.average_delay_ms;
    a.max_delay_ms = std::max(a.max_delay_ms, s.max_delay_ms);
    a.mean_violation_rate += s.violation_rate;
    a.total_violations += s.violation_count;
    a.total_relaxed += s.relaxed_count;
    if (s.relaxed_count > 0) ++a.relaxed_slots;
    a.total_on_grid_w += s.on_grid_w;
    a.mean_linear_on_grid_w += s.linear_on_grid_w;
    a.mean_linearization_gap_w += s.linearization_gap_w;
    a.total_migrations += s.migration_count;
  }
  const double t = static_cast<double>(slots.size());
  a.mean_average_delay_ms /= t;
  a.mean_violation_rate /= t;
  a.mean_on_grid_w = a.total_on_grid_w / t;
  a.total_on_grid_wh = a.total_on_grid_w * slot_duration_h;
  a.mean_linear_on_grid_w /= t;
  a.mean_linearization_gap_w /= t;
  return a;
}

RunReport Run(const Scenario& scenario) {
  scenario.Validate();
  const EnergyModel model = scenario.energy_model();
  EamOptions eam;
  eam.gamma_ms = scenario.gamma_ms;
  eam.exact_limits = scenario.exact_limits;
  eam.heuristic = scenario.heuristic;

  RunReport report;
  report.strategy = scenario.strategy;
  report.device_count = scenario.trace.device_count();
  report.cloudlet_count = scenario.topology.cloudlet_count();
  report.gamma_ms = scenario.gamma_ms;
  report.slot_duration_h = scenario.trace.slot_duration_h();

  Placement fixed;
  std::vector<int> previous;
  for (int t = 0; t < scenario.trace.slot_count(); ++t) {
    Placement placement;
    try {
      switch (scenario.strategy) {
        case StrategyKind::kStatic:
          if (t == 0) fixed = StaticPlace(scenario.trace, scenario.topology);
          placement = fixed;
          placement.slot = t;
          break;
        case StrategyKind::kLam:
          placement = LamPlace(t, scenario.trace, scenario.topology);
          break;
        case StrategyKind::kEam:
          placement = EamPlace(t, scenario.trace, scenario.topology, scenario.devices, model, eam);
          break;
      }
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("slot " + std::to_string(t) + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("slot " + std::to_string(t) + ": " + e.what());
    }
    report.slots.push_back(EvaluateSlot(scenario, model, t, placement, previous));
    previous = std::move(placement.cloudlet_of);
  }
  report.aggregates = Summarize(report.slots, report.slot_duration_h);
  return report;
}

namespace {

template <typename MakeScenario>
std::vector<RunReport> RunAll(std::size_t count, MakeScenario make) {
  std::vector<std::future<RunReport>> pending;
  pending.reserve(count);
  for (std::size_t v = 0; v < count; ++v)
    pending.push_back(std::async(std::launch::async, [&make, v] { return Run(make(v)); }));
  std::vector<RunReport> reports;
  reports.reserve(count);
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace

std::vector<RunReport> SweepGreen(const Scenario& scenario, std::span<const double> green_w) {
  if (green_w.empty()) throw InvalidArgument("green sweep needs at least one value");
  for (double g : green_w)
    if (!(g >= 0.0)) throw InvalidArgument("green values must be >= 0");
  return RunAll(green_w.size(), [&](std::size_t v) {
    Scenario s = scenario;
    s.topology = scenario.topology.WithUniformGreen(green_w[v]);
    return s;
  });
}

std::vector<RunReport> SweepLambda(const Scenario& scenario,
                                   std::span<const double> lambda_ms_per_km) {
  if (lambda_ms_per_km.empty()) throw InvalidArgument("lambda sweep needs at least one value");
  for (double l : lambda_ms_per_km)
    if (!(l >= 0.0)) throw InvalidArgument("lambda values must be >= 0");
  return RunAll(lambda_ms_per_km.size(), [&](std::size_t v) {
    Scenario s = scenario;
    s.topology = scenario.topology.WithLambda(lambda_ms_per_km[v]);
    return s;
  });
}

}  // namespace edgeplace
