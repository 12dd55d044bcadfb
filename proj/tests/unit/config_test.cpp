#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "edgeplace/common.hpp"
#include "edgeplace/config.hpp"
#include "edgeplace/io.hpp"

namespace edgeplace {
namespace {

using nlohmann::json;

std::string ErrorOf(const json& doc) {
  try {
    ParseRunConfig(doc);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(ParseRunConfig, DefaultsMatchReferenceParameters) {
  const RunConfig c = ParseRunConfig(json::object());
  EXPECT_EQ(c.topology.rows, 5);
  EXPECT_EQ(c.topology.lambda, 25.0);
  EXPECT_EQ(c.topology.beta, 10.0);
  EXPECT_EQ(c.cloudlet.pm_count, 5);
  EXPECT_EQ(c.cloudlet.epsilon, 6);
  EXPECT_EQ(c.cloudlet.rho_s, 80.0);
  EXPECT_EQ(c.cloudlet.alpha, 0.2);
  EXPECT_EQ(c.cloudlet.g, 1000.0);
  EXPECT_EQ(c.mobility.devices, 632);
  EXPECT_EQ(c.mobility.slots, 12);
  EXPECT_EQ(c.gamma, 40.0);
  EXPECT_EQ(c.delta_t_hours, 0.5);
  EXPECT_EQ(c.strategies.size(), 3u);
}

TEST(ParseRunConfig, ErrorsNameKeyPath) {
  EXPECT_NE(ErrorOf({{"topology", {{"rowz", 5}}}}).find("topology.rowz"), std::string::npos);
  EXPECT_NE(ErrorOf({{"cloudlet", {{"g", "lots"}}}}).find("cloudlet.g"), std::string::npos);
  EXPECT_NE(ErrorOf({{"gamma", -1}}).find("gamma"), std::string::npos);
  EXPECT_NE(ErrorOf({{"strategies", {"lam", "fast"}}}).find("strategies"), std::string::npos);
  EXPECT_NE(ErrorOf({{"extra", 1}}).find("extra"), std::string::npos);
}

TEST(ToJson, RoundTrips) {
  const RunConfig c = ParseRunConfig({{"gamma", 35}, {"cloudlet", {{"g", 500}}}});
  const json doc = ToJson(c);
  EXPECT_EQ(ToJson(ParseRunConfig(doc)), doc);
  EXPECT_EQ(doc["gamma"], 35.0);
}

TEST(LoadRunConfig, ResolvesPathsAgainstConfigDir) {
  const auto dir = std::filesystem::temp_directory_path() / "edgeplace_config_test";
  std::filesystem::create_directories(dir);
  WriteFileAtomic(dir / "c.json", R"({"output": {"dir": "reports"}})");
  const RunConfig c = LoadRunConfig(dir / "c.json");
  EXPECT_EQ(std::filesystem::path(c.output.dir), dir / "reports");
  WriteFileAtomic(dir / "bad.json", "{ not json");
  EXPECT_THROW(LoadRunConfig(dir / "bad.json"), InvalidArgument);
  EXPECT_THROW(LoadRunConfig(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}

TEST(BuildScenario, UsesTraceFileAndQualifies) {
  const auto dir = std::filesystem::temp_directory_path() / "edgeplace_config_trace";
  std::filesystem::create_directories(dir);
  WriteFileAtomic(dir / "t.csv",
                  "slot,device_id,x_km,y_km\n0,1,0.5,0.5\n0,2,1.5,0.5\n1,1,0.6,0.5\n1,2,9.0,0.5\n");
  const RunConfig c =
      ParseRunConfig({{"mobility", {{"trace_file", (dir / "t.csv").string()}}}});
  const Scenario s = BuildScenario(c);
  EXPECT_EQ(s.trace.device_count(), 1);
  EXPECT_EQ(s.trace.slot_count(), 2);
  EXPECT_EQ(s.devices.size(), 1u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace edgeplace
