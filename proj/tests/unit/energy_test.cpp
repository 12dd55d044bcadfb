#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "edgeplace/common.hpp"
#include "edgeplace/energy.hpp"

namespace edgeplace {
namespace {

TEST(PmPower, ReferencePoints) {
  const EnergyModel m;
  EXPECT_EQ(m.PmPower(0.0), 80.0);
  EXPECT_EQ(m.PmPower(600.0), 200.0);
  EXPECT_EQ(m.PmPower(100.0), 100.0);
  EXPECT_THROW(m.PmPower(-1.0), InvalidArgument);
}

TEST(CloudletDemandExact, ReferencePoints) {
  const EnergyModel m;
  EXPECT_EQ(m.CloudletDemandExact(std::vector<double>{}), 0.0);
  EXPECT_EQ(m.CloudletDemandExact(std::vector<double>(30, 100.0)), 1000.0);
  EXPECT_EQ(m.CloudletDemandExact(std::vector<double>(7, 50.0)), 230.0);
  EXPECT_EQ(m.WorkingPms(0), 0);
  EXPECT_EQ(m.WorkingPms(6), 1);
  EXPECT_EQ(m.WorkingPms(7), 2);
}

TEST(CloudletDemandLinear, ReferencePoints) {
  const EnergyModel m;
  EXPECT_EQ(m.CloudletDemandLinear(std::vector<double>{}), 0.0);
  EXPECT_DOUBLE_EQ(m.CloudletDemandLinear(std::vector<double>(30, 100.0)), 1000.0);
  EXPECT_NEAR(m.CloudletDemandLinear(std::vector<double>{20.0}), 17.333333333333333, 1e-12);
  EXPECT_NEAR(m.PerVmLoad(20.0), 80.0 / 6.0 + 4.0, 1e-12);
}

TEST(CloudletDemand, LinearNeverExceedsExactAndAgreesOnFullPms) {
  const EnergyModel m;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(20.0, 100.0);
  for (int n = 0; n <= 30; ++n) {
    std::vector<double> vms;
    for (int i = 0; i < n; ++i) vms.push_back(u(rng));
    const double exact = m.CloudletDemandExact(vms);
    const double linear = m.CloudletDemandLinear(vms);
    EXPECT_LE(linear, exact + 1e-9);
    if (n % 6 == 0) EXPECT_NEAR(linear, exact, 1e-9);
  }
}

TEST(OnGridPower, Rectifier) {
  EXPECT_EQ(OnGridPower(800.0, 1000.0), 0.0);
  EXPECT_EQ(OnGridPower(1200.0, 1000.0), 200.0);
  EXPECT_EQ(OnGridPower(1000.0, 1000.0), 0.0);
}

TEST(EvaluateCloudlet, ComposesDemandAndRectifier) {
  const EnergyModel m;
  const CloudletEnergyState s = EvaluateCloudlet(m, 7, 350.0, 100.0);
  EXPECT_EQ(s.demand_w, 230.0);
  EXPECT_EQ(s.on_grid_w, 130.0);
  EXPECT_EQ(m.ToWattHours(s.on_grid_w), 65.0);
}

TEST(EnergyModel, FromCloudletAndValidate) {
  CloudletParams p;
  p.vms_per_pm = 4;
  p.static_pm_power_w = 100.0;
  const EnergyModel m = EnergyModel::FromCloudlet(p, 1.0);
  EXPECT_EQ(m.vms_per_pm, 4);
  EXPECT_EQ(m.static_pm_power_w, 100.0);
  EnergyModel bad;
  bad.vms_per_pm = 0;
  EXPECT_THROW(bad.Validate(), InvalidArgument);
}

}  // namespace
}  // namespace edgeplace
