#include <gtest/gtest.h>

#include <vector>

#include "edgeplace/config.hpp"
#include "edgeplace/report.hpp"
#include "edgeplace/simulator.hpp"

namespace edgeplace {
namespace {

Scenario DefaultScenario(StrategyKind kind) {
  Scenario s = BuildScenario(ParseRunConfig(nlohmann::json::object()));
  s.strategy = kind;
  return s;
}

Scenario Tiny(std::vector<int> assoc, int slots, int devices, StrategyKind kind) {
  Scenario s;
  s.topology = Topology::BuildGrid(1, 2, 1.0, CloudletParams{}, 25.0, 10.0);
  s.trace = MobilityTrace::FromAssociations(slots, devices, std::move(assoc), s.topology, 0.5);
  s.devices = AssignUtilizations(3, devices);
  s.strategy = kind;
  return s;
}

constexpr StrategyKind kAll[] = {StrategyKind::kStatic, StrategyKind::kLam, StrategyKind::kEam};

TEST(Run, SingleCellCrossingMigratesOnce) {
  const RunReport r = edgeplace::Run(Tiny({0, 0, 1, 1}, 4, 1, StrategyKind::kLam));
  EXPECT_EQ(r.aggregates.total_migrations, 1);
  for (const SlotMetrics& m : r.slots) EXPECT_EQ(m.average_delay_ms, 10.0);
  EXPECT_EQ(r.slots[2].migration_count, 1);
}

TEST(Run, StationaryStaticEqualsLam) {
  Scenario s = DefaultScenario(StrategyKind::kStatic);
  s.trace = GenerateSynthetic(1, 632, 6, s.topology, {0.0, 0.0, 0.5});
  const RunReport st = edgeplace::Run(s);
  s.strategy = StrategyKind::kLam;
  const RunReport lam = edgeplace::Run(s);
  EXPECT_EQ(st.aggregates.total_migrations, 0);
  EXPECT_EQ(lam.aggregates.total_migrations, 0);
  std::string a = SlotCsv(st), b = SlotCsv(lam);
  // Only the strategy column differs.
  for (auto* text : {&a, &b}) {
    std::string out;
    for (std::size_t pos = 0; pos < text->size();) {
      const std::size_t eol = text->find('\n', pos);
      std::string line = text->substr(pos, eol - pos);
      const std::size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
      out += line.substr(0, c1) + line.substr(c2) + "\n";
      pos = eol + 1;
    }
    *text = out;
  }
  EXPECT_EQ(a, b);
}

TEST(Run, DeterministicAndConsistent) {
  for (StrategyKind kind : kAll) {
    const Scenario s = DefaultScenario(kind);
    const RunReport r1 = edgeplace::Run(s);
    const RunReport r2 = edgeplace::Run(s);
    EXPECT_EQ(SlotCsv(r1), SlotCsv(r2));
    EXPECT_EQ(CloudletCsv(r1), CloudletCsv(r2));
    for (const SlotMetrics& m : r1.slots) {
      int vms = 0;
      double on_grid = 0.0;
      for (const auto& c : m.cloudlets) {
        vms += c.vm_count;
        on_grid += std::max(c.demand_w - c.green_w, 0.0);
      }
      EXPECT_EQ(vms, 632);
      EXPECT_DOUBLE_EQ(m.on_grid_w, on_grid);
      EXPECT_EQ(m.violation_rate, m.violation_count / 632.0);
      EXPECT_LE(m.migration_count, 632);
      EXPECT_GE(m.linearization_gap_w, -1e-9);
    }
    const RunAggregates again = Summarize(r1.slots, r1.slot_duration_h);
    EXPECT_EQ(again.total_migrations, r1.aggregates.total_migrations);
    EXPECT_EQ(again.mean_average_delay_ms, r1.aggregates.mean_average_delay_ms);
    EXPECT_EQ(again.total_on_grid_wh, r1.aggregates.total_on_grid_wh);
  }
}

TEST(Run, DefaultScenarioProperties) {
  const RunReport st = edgeplace::Run(DefaultScenario(StrategyKind::kStatic));
  const RunReport lam = edgeplace::Run(DefaultScenario(StrategyKind::kLam));
  const RunReport eam = edgeplace::Run(DefaultScenario(StrategyKind::kEam));
  EXPECT_EQ(st.aggregates.total_migrations, 0);
  EXPECT_LE(lam.aggregates.mean_average_delay_ms, st.aggregates.mean_average_delay_ms);
  EXPECT_LE(lam.aggregates.mean_average_delay_ms, eam.aggregates.mean_average_delay_ms);
  EXPECT_EQ(eam.aggregates.total_relaxed, 0);
  EXPECT_EQ(eam.aggregates.mean_violation_rate, 0.0);
}

TEST(Run, RejectsCapacityShortfall) {
  Scenario s = Tiny(std::vector<int>(61, 0), 1, 61, StrategyKind::kLam);
  EXPECT_THROW(edgeplace::Run(s), InfeasibleError);
}

TEST(SweepGreen, BoundaryCases) {
  const std::vector<double> g{0.0, 1000.0};
  for (StrategyKind kind : kAll) {
    const auto reports = SweepGreen(DefaultScenario(kind), g);
    ASSERT_EQ(reports.size(), 2u);
    for (const SlotMetrics& m : reports[0].slots) EXPECT_DOUBLE_EQ(m.on_grid_w, m.demand_w);
    for (const SlotMetrics& m : reports[1].slots) EXPECT_EQ(m.on_grid_w, 0.0);
  }
}

TEST(SweepGreen, MatchesIndividualRunsInOrder) {
  const Scenario s = DefaultScenario(StrategyKind::kEam);
  const std::vector<double> g{500.0, 0.0, 250.0};
  const auto reports = SweepGreen(s, g);
  for (std::size_t v = 0; v < g.size(); ++v) {
    Scenario one = s;
    one.topology = s.topology.WithUniformGreen(g[v]);
    EXPECT_EQ(SlotCsv(reports[v]), SlotCsv(edgeplace::Run(one)));
  }
}

TEST(SweepLambda, ZeroLambdaGivesBetaEverywhere) {
  for (StrategyKind kind : kAll) {
    const auto reports = SweepLambda(DefaultScenario(kind), std::vector<double>{0.0});
    EXPECT_EQ(reports[0].aggregates.mean_average_delay_ms, 10.0);
  }
}

}  // namespace
}  // namespace edgeplace
