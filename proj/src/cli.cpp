#include "edgeplace/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "edgeplace/config.hpp"
#include "edgeplace/io.hpp"
#include "edgeplace/mobility.hpp"
#include "edgeplace/report.hpp"
#include "edgeplace/simulator.hpp"

namespace edgeplace {

namespace fs = std::filesystem;

namespace {

struct GenTraceArgs {
  std::uint64_t seed = 1;
  int devices = 632;
  int slots = 12;
  int rows = 5;
  int cols = 5;
  double cell_km = 1.0;
  double speed_min = 3.0;
  double speed_max = 30.0;
  double delta_t_hours = 0.5;
  std::string out;
};

struct RunArgs {
  std::string config;
  std::string out_dir;
};

struct SweepArgs {
  std::string config;
  std::string out_dir;
  std::string axis;
  std::string values;
};

RunConfig LoadConfigOrDefault(const std::string& path, const std::string& out_dir) {
  RunConfig config = path.empty() ? ParseRunConfig(nlohmann::json::object()) : LoadRunConfig(path);
  if (!out_dir.empty()) config.output.dir = fs::path(out_dir).lexically_normal().string();
  return config;
}

void EnsureDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
}

void WriteReportPair(const fs::path& dir, const std::string& stem, const RunReport& report,
                     const nlohmann::json& echo) {
  WriteFileAtomic(dir / (stem + ".csv"), SlotCsv(report));
  WriteFileAtomic(dir / (stem + "_cloudlets.csv"), CloudletCsv(report));
  WriteFileAtomic(dir / (stem + ".json"), SummaryJson(report, echo).dump(2) + "\n");
}

int CmdGenTrace(const GenTraceArgs& a, std::ostream& out) {
  if (a.devices < 1) throw InvalidArgument("--devices must be >= 1");
  if (a.slots < 1) throw InvalidArgument("--slots must be >= 1");
  CloudletParams params;
  const Topology topo = Topology::BuildGrid(a.rows, a.cols, a.cell_km, params, 25.0, 10.0);
  WaypointOptions wp;
  wp.min_speed_kmh = a.speed_min;
  wp.max_speed_kmh = a.speed_max;
  wp.slot_duration_h = a.delta_t_hours;
  const MobilityTrace trace = GenerateSynthetic(a.seed, a.devices, a.slots, topo, wp);
  SaveTrace(a.out, trace);
  out << "wrote " << a.out << ": " << trace.slot_count() << " slots x " << trace.device_count()
      << " devices, " << CountHandovers(trace) << " handovers\n";
  return kExitOk;
}

int CmdValidate(const std::string& path, std::ostream& out) {
  const RunConfig config = LoadRunConfig(path);
  const Scenario scenario = BuildScenario(config);
  scenario.Validate();
  out << "config ok: " << scenario.topology.cloudlet_count() << " cloudlets (capacity "
      << scenario.topology.total_capacity() << "), " << scenario.trace.device_count()
      << " devices, " << scenario.trace.slot_count() << " slots\n";
  return kExitOk;
}

int CmdRun(const RunArgs& a, std::ostream& out) {
  const RunConfig config = LoadConfigOrDefault(a.config, a.out_dir);
  Scenario scenario = BuildScenario(config);
  scenario.Validate();
  const fs::path dir(config.output.dir);
  EnsureDir(dir);
  const nlohmann::json echo = ToJson(config);
  for (StrategyKind kind : config.strategies) {
    scenario.strategy = kind;
    const RunReport report = Run(scenario);
    const std::string stem = config.output.prefix + "_" + std::string(ToString(kind));
    WriteReportPair(dir, stem, report, echo);
    const auto& agg = report.aggregates;
    out << ToString(kind) << ": mean delay " << FormatDouble(agg.mean_average_delay_ms)
        << " ms, max delay " << FormatDouble(agg.max_delay_ms) << " ms, violation rate "
        << FormatDouble(agg.mean_violation_rate) << ", mean on-grid "
        << FormatDouble(agg.mean_on_grid_w) << " W, migrations " << agg.total_migrations
        << "\n";
  }
  return kExitOk;
}

std::vector<double> ParseValueList(const std::string& text) {
  std::vector<double> values;
  if (text.find_first_not_of(" \t") == std::string::npos)
    throw InvalidArgument("--values must list at least one number");
  for (std::string_view field : SplitCsvLine(text)) {
    const auto v = ParseDouble(field);
    if (!v) throw InvalidArgument("--values: '" + std::string(field) + "' is not a number");
    values.push_back(*v);
  }
  return values;
}

int CmdSweep(const SweepArgs& a, std::ostream& out) {
  if (a.axis != "green" && a.axis != "lambda")
    throw InvalidArgument("--axis must be green or lambda");
  const std::vector<double> values = ParseValueList(a.values);
  for (double v : values)
    if (!(v >= 0.0)) throw InvalidArgument("--values must be >= 0");

  const RunConfig config = LoadConfigOrDefault(a.config, a.out_dir);
  Scenario scenario = BuildScenario(config);
  scenario.Validate();
  const fs::path dir(config.output.dir);
  EnsureDir(dir);

  std::string table =
      "axis,value,strategy,mean_avg_delay_ms,max_delay_ms,mean_violation_rate,mean_on_grid_w,"
      "total_on_grid_wh,total_migrations,total_relaxed\n";
  for (StrategyKind kind : config.strategies) {
    scenario.strategy = kind;
    const std::vector<RunReport> reports = a.axis == "green" ? SweepGreen(scenario, values)
                                                             : SweepLambda(scenario, values);
    for (std::size_t v = 0; v < values.size(); ++v) {
      RunConfig point = config;
      if (a.axis == "green") {
        point.cloudlet.g = values[v];
      } else {
        point.topology.lambda = values[v];
      }
      const std::string stem = config.output.prefix + "_" + a.axis + "-" +
                               FormatDouble(values[v]) + "_" + std::string(ToString(kind));
      WriteReportPair(dir, stem, reports[v], ToJson(point));
      const auto& agg = reports[v].aggregates;
      table += a.axis + "," + FormatDouble(values[v]) + "," + std::string(ToString(kind)) + "," +
               FormatDouble(agg.mean_average_delay_ms) + "," + FormatDouble(agg.max_delay_ms) +
               "," + FormatDouble(agg.mean_violation_rate) + "," +
               FormatDouble(agg.mean_on_grid_w) + "," + FormatDouble(agg.total_on_grid_wh) +
               "," + std::to_string(agg.total_migrations) + "," +
               std::to_string(agg.total_relaxed) + "\n";
    }
  }
  const fs::path summary = dir / (config.output.prefix + "_" + a.axis + "_sweep.csv");
  WriteFileAtomic(summary, table);
  out << table;
  out << "wrote " << summary.string() << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proxy-VM placement simulator for edge cloudlets"};
  app.require_subcommand(1);

  GenTraceArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-trace", "Write a synthetic random-waypoint trace CSV");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--devices", gen.devices, "Number of devices")->capture_default_str();
  gen_cmd->add_option("--slots", gen.slots, "Number of slots")->capture_default_str();
  gen_cmd->add_option("--rows", gen.rows, "Grid rows")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "Grid columns")->capture_default_str();
  gen_cmd->add_option("--cell-km", gen.cell_km, "Cell edge length in km")->capture_default_str();
  gen_cmd->add_option("--speed-min", gen.speed_min, "Minimum speed, km/h")->capture_default_str();
  gen_cmd->add_option("--speed-max", gen.speed_max, "Maximum speed, km/h")->capture_default_str();
  gen_cmd->add_option("--delta-t-hours", gen.delta_t_hours, "Slot length in hours")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output CSV path")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run every configured strategy and write reports");
  run_cmd->add_option("--config", run.config, "Run configuration (JSON); defaults if omitted");
  run_cmd->add_option("--out-dir", run.out_dir, "Override output.dir");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Repeat the run over green supply or lambda values");
  sweep_cmd->add_option("--config", sweep.config, "Run configuration (JSON); defaults if omitted");
  sweep_cmd->add_option("--out-dir", sweep.out_dir, "Override output.dir");
  sweep_cmd->add_option("--axis", sweep.axis, "green | lambda")->required();
  sweep_cmd->add_option("--values", sweep.values, "Comma-separated values")->required();

  std::string validate_config;
  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration without running");
  validate_cmd->add_option("--config", validate_config, "Run configuration (JSON)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return CmdGenTrace(gen, out);
    if (*run_cmd) return CmdRun(run, out);
    if (*sweep_cmd) return CmdSweep(sweep, out);
    if (*validate_cmd) return CmdValidate(validate_config, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace edgeplace
