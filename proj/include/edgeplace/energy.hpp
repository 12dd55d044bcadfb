#pragma once

#include <span>

#include "edgeplace/topology.hpp"

namespace edgeplace {

// Power model of a cloudlet's physical machines. All quantities are average
// watts over one slot; multiply by the slot length for watt-hours.
struct EnergyModel {
  double static_pm_power_w = 80.0;
  double power_coefficient_w_per_pct = 0.2;
  int vms_per_pm = 6;
  double slot_duration_h = 0.5;

  static EnergyModel FromCloudlet(const CloudletParams& params, double slot_duration_h);

  void Validate() const;

  // Static plus utilization-proportional power of one working PM.
  double PmPower(double utilization_sum_pct) const;

  // PMs needed for `vm_count` VMs when each PM is filled before the next is
  // opened.
  int WorkingPms(int vm_count) const;

  // Demand with whole working PMs (ceiling of count / vms_per_pm).
  double CloudletDemandExact(std::span<const double> vm_utilizations_pct) const;
  double CloudletDemandExact(int vm_count, double utilization_sum_pct) const;

  // Demand with the static share spread evenly over VMs:
  // sum of (static / vms_per_pm + coefficient * utilization).
  double CloudletDemandLinear(std::span<const double> vm_utilizations_pct) const;
  double CloudletDemandLinear(int vm_count, double utilization_sum_pct) const;

  // Linearized contribution of one VM.
  double PerVmLoad(double utilization_pct) const {
    return static_pm_power_w / vms_per_pm + power_coefficient_w_per_pct * utilization_pct;
  }

  double ToWattHours(double watts) const { return watts * slot_duration_h; }
};

// Grid draw once green supply is exhausted; surplus green is not banked.
double OnGridPower(double demand_w, double green_w);

struct CloudletEnergyState {
  int vm_count = 0;
  double utilization_sum_pct = 0.0;
  double demand_w = 0.0;
  double green_w = 0.0;
  double on_grid_w = 0.0;
};

CloudletEnergyState EvaluateCloudlet(const EnergyModel& model, int vm_count,
                                     double utilization_sum_pct, double green_w);

}  // namespace edgeplace
