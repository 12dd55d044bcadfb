#include "edgeplace/energy.hpp"

#include <algorithm>
#include <cmath>

namespace edgeplace {

EnergyModel EnergyModel::FromCloudlet(const CloudletParams& params, double slot_duration_h) {
  EnergyModel m;
  m.static_pm_power_w = params.static_pm_power_w;
  m.power_coefficient_w_per_pct = params.power_coefficient_w_per_pct;
  m.vms_per_pm = params.vms_per_pm;
  m.slot_duration_h = slot_duration_h;
  m.Validate();
  return m;
}

void EnergyModel::Validate() const {
  if (!(static_pm_power_w > 0.0)) throw InvalidArgument("static PM power must be > 0");
  if (!(power_coefficient_w_per_pct > 0.0))
    throw InvalidArgument("power coefficient must be > 0");
  if (vms_per_pm <= 0) throw InvalidArgument("VMs per PM must be > 0");
  if (!(slot_duration_h > 0.0)) throw InvalidArgument("slot duration must be > 0");
}

double EnergyModel::PmPower(double utilization_sum_pct) const {
  if (!(utilization_sum_pct >= 0.0)) throw InvalidArgument("utilization must be >= 0");
  return static_pm_power_w + power_coefficient_w_per_pct * utilization_sum_pct;
}

int EnergyModel::WorkingPms(int vm_count) const {
  if (vm_count < 0) throw InvalidArgument("VM count must be >= 0");
  return (vm_count + vms_per_pm - 1) / vms_per_pm;
}

double EnergyModel::CloudletDemandExact(int vm_count, double utilization_sum_pct) const {
  if (vm_count == 0) return 0.0;
  return WorkingPms(vm_count) * static_pm_power_w +
         power_coefficient_w_per_pct * utilization_sum_pct;
}

double EnergyModel::CloudletDemandExact(std::span<const double> vm_utilizations_pct) const {
  double sum = 0.0;
  for (double mu : vm_utilizations_pct) sum += mu;
  return CloudletDemandExact(static_cast<int>(vm_utilizations_pct.size()), sum);
}

double EnergyModel::CloudletDemandLinear(std::span<const double> vm_utilizations_pct) const {
  double sum = 0.0;
  for (double mu : vm_utilizations_pct) sum += mu;
  return CloudletDemandLinear(static_cast<int>(vm_utilizations_pct.size()), sum);
}

double EnergyModel::CloudletDemandLinear(int vm_count, double utilization_sum_pct) const {
  if (vm_count < 0) throw InvalidArgument("VM count must be >= 0");
  return vm_count * static_pm_power_w / vms_per_pm +
         power_coefficient_w_per_pct * utilization_sum_pct;
}

double OnGridPower(double demand_w, double green_w) {
  return std::max(demand_w - green_w, 0.0);
}

CloudletEnergyState EvaluateCloudlet(const EnergyModel& model, int vm_count,
                                     double utilization_sum_pct, double green_w) {
  CloudletEnergyState s;
  s.vm_count = vm_count;
  s.utilization_sum_pct = utilization_sum_pct;
  s.demand_w = model.CloudletDemandExact(vm_count, utilization_sum_pct);
  s.green_w = green_w;
  s.on_grid_w = OnGridPower(s.demand_w, green_w);
  return s;
}

}  // namespace edgeplace
