#include "edgeplace/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "edgeplace/io.hpp"

namespace edgeplace {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw InvalidArgument("config error at '" + path + "': " + what);
}

// Typed access to one JSON object with key-path diagnostics.
class Section {
 public:
  Section(const json* obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (obj_ != nullptr && !obj_->is_object()) Fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string KeyPath(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void RejectUnknown(std::initializer_list<const char*> allowed) const {
    if (obj_ == nullptr) return;
    for (const auto& [key, value] : obj_->items()) {
      (void)value;
      if (std::none_of(allowed.begin(), allowed.end(),
                       [&](const char* a) { return key == a; }))
        Fail(KeyPath(key), "unknown key");
    }
  }

  const json* Find(const std::string& key) const {
    if (obj_ == nullptr) return nullptr;
    const auto it = obj_->find(key);
    if (it == obj_->end() || it->is_null()) return nullptr;
    return &*it;
  }

  Section Child(const std::string& key) const { return Section(Find(key), KeyPath(key)); }

  double Number(const std::string& key, double def) const {
    const json* v = Find(key);
    if (v == nullptr) return def;
    if (!v->is_number()) Fail(KeyPath(key), "expected a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) Fail(KeyPath(key), "expected a finite number");
    return d;
  }

  int Int(const std::string& key, int def) const {
    const json* v = Find(key);
    if (v == nullptr) return def;
    if (!v->is_number_integer()) Fail(KeyPath(key), "expected an integer");
    const auto i = v->get<std::int64_t>();
    if (i < -2147483647LL || i > 2147483647LL) Fail(KeyPath(key), "integer out of range");
    return static_cast<int>(i);
  }

  std::uint64_t Seed(const std::string& key, std::uint64_t def) const {
    const json* v = Find(key);
    if (v == nullptr) return def;
    if (v->is_number_unsigned()) return v->get<std::uint64_t>();
    if (v->is_number_integer()) {
      const auto i = v->get<std::int64_t>();
      if (i < 0) Fail(KeyPath(key), "seed must be >= 0");
      return static_cast<std::uint64_t>(i);
    }
    Fail(KeyPath(key), "expected a non-negative integer");
  }

  bool Bool(const std::string& key, bool def) const {
    const json* v = Find(key);
    if (v == nullptr) return def;
    if (!v->is_boolean()) Fail(KeyPath(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::string> String(const std::string& key) const {
    const json* v = Find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) Fail(KeyPath(key), "expected a string");
    return v->get<std::string>();
  }

 private:
  const json* obj_;
  std::string path_;
};

std::string ResolvePath(const std::string& p, const std::filesystem::path& base_dir) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return path.lexically_normal().string();
}

}  // namespace

RunConfig ParseRunConfig(const json& doc, const std::filesystem::path& base_dir) {
  RunConfig c;
  const Section root(&doc, "");
  root.RejectUnknown({"topology", "cloudlet", "mobility", "utilization", "gamma",
                      "delta_t_hours", "strategies", "solver", "output"});

  const Section topo = root.Child("topology");
  topo.RejectUnknown({"rows", "cols", "cell_km", "lambda", "beta", "delay_matrix_file"});
  c.topology.rows = topo.Int("rows", c.topology.rows);
  c.topology.cols = topo.Int("cols", c.topology.cols);
  c.topology.cell_km = topo.Number("cell_km", c.topology.cell_km);
  c.topology.lambda = topo.Number("lambda", c.topology.lambda);
  c.topology.beta = topo.Number("beta", c.topology.beta);
  if (auto f = topo.String("delay_matrix_file")) c.topology.delay_matrix_file = ResolvePath(*f, base_dir);
  if (c.topology.rows < 1) Fail("topology.rows", "must be >= 1");
  if (c.topology.cols < 1) Fail("topology.cols", "must be >= 1");
  if (!(c.topology.cell_km > 0.0)) Fail("topology.cell_km", "must be > 0");
  if (!(c.topology.lambda >= 0.0)) Fail("topology.lambda", "must be >= 0");
  if (!(c.topology.beta >= 0.0)) Fail("topology.beta", "must be >= 0");

  const Section cl = root.Child("cloudlet");
  cl.RejectUnknown({"pm_count", "epsilon", "rho_s", "alpha", "g"});
  c.cloudlet.pm_count = cl.Int("pm_count", c.cloudlet.pm_count);
  c.cloudlet.epsilon = cl.Int("epsilon", c.cloudlet.epsilon);
  c.cloudlet.rho_s = cl.Number("rho_s", c.cloudlet.rho_s);
  c.cloudlet.alpha = cl.Number("alpha", c.cloudlet.alpha);
  c.cloudlet.g = cl.Number("g", c.cloudlet.g);
  if (c.cloudlet.pm_count < 1) Fail("cloudlet.pm_count", "must be >= 1");
  if (c.cloudlet.epsilon < 1) Fail("cloudlet.epsilon", "must be >= 1");
  if (!(c.cloudlet.rho_s > 0.0)) Fail("cloudlet.rho_s", "must be > 0");
  if (!(c.cloudlet.alpha > 0.0)) Fail("cloudlet.alpha", "must be > 0");
  if (!(c.cloudlet.g >= 0.0)) Fail("cloudlet.g", "must be >= 0");

  const Section mob = root.Child("mobility");
  mob.RejectUnknown({"trace_file", "qualify", "devices", "slots", "seed", "speed_kmh"});
  if (auto f = mob.String("trace_file")) c.mobility.trace_file = ResolvePath(*f, base_dir);
  c.mobility.qualify = mob.Bool("qualify", c.mobility.qualify);
  c.mobility.devices = mob.Int("devices", c.mobility.devices);
  c.mobility.slots = mob.Int("slots", c.mobility.slots);
  c.mobility.seed = mob.Seed("seed", c.mobility.seed);
  if (const json* speed = mob.Find("speed_kmh")) {
    if (!speed->is_array() || speed->size() != 2 || !(*speed)[0].is_number() ||
        !(*speed)[1].is_number())
      Fail("mobility.speed_kmh", "expected [min, max]");
    c.mobility.speed_min_kmh = (*speed)[0].get<double>();
    c.mobility.speed_max_kmh = (*speed)[1].get<double>();
  }
  if (c.mobility.devices < 1) Fail("mobility.devices", "must be >= 1");
  if (c.mobility.slots < 1) Fail("mobility.slots", "must be >= 1");
  if (!(c.mobility.speed_min_kmh >= 0.0) || !(c.mobility.speed_max_kmh >= c.mobility.speed_min_kmh) ||
      !std::isfinite(c.mobility.speed_max_kmh))
    Fail("mobility.speed_kmh", "must satisfy 0 <= min <= max");

  const Section util = root.Child("utilization");
  util.RejectUnknown({"seed", "min_pct", "max_pct"});
  c.utilization.seed = util.Seed("seed", c.utilization.seed);
  c.utilization.min_pct = util.Number("min_pct", c.utilization.min_pct);
  c.utilization.max_pct = util.Number("max_pct", c.utilization.max_pct);
  if (!(c.utilization.min_pct > 0.0)) Fail("utilization.min_pct", "must be > 0");
  if (!(c.utilization.max_pct >= c.utilization.min_pct) || c.utilization.max_pct > 100.0)
    Fail("utilization.max_pct", "must satisfy min_pct <= max_pct <= 100");

  c.gamma = root.Number("gamma", c.gamma);
  if (!(c.gamma > 0.0)) Fail("gamma", "must be > 0");
  c.delta_t_hours = root.Number("delta_t_hours", c.delta_t_hours);
  if (!(c.delta_t_hours > 0.0)) Fail("delta_t_hours", "must be > 0");

  if (const json* s = root.Find("strategies")) {
    if (!s->is_array() || s->empty()) Fail("strategies", "expected a non-empty array");
    c.strategies.clear();
    for (std::size_t i = 0; i < s->size(); ++i) {
      const std::string path = "strategies[" + std::to_string(i) + "]";
      if (!(*s)[i].is_string()) Fail(path, "expected a strategy name");
      StrategyKind kind;
      try {
        kind = ParseStrategy((*s)[i].get<std::string>());
      } catch (const InvalidArgument& e) {
        Fail(path, e.what());
      }
      if (std::find(c.strategies.begin(), c.strategies.end(), kind) != c.strategies.end())
        Fail(path, "duplicate strategy");
      c.strategies.push_back(kind);
    }
  }

  const Section solver = root.Child("solver");
  solver.RejectUnknown(
      {"exact_max_devices", "exact_max_cloudlets", "heuristic_move_cap", "delay_polish",
       "perturbation_rounds", "heuristic_seed"});
  c.solver.exact_max_devices = solver.Int("exact_max_devices", c.solver.exact_max_devices);
  c.solver.exact_max_cloudlets = solver.Int("exact_max_cloudlets", c.solver.exact_max_cloudlets);
  c.solver.heuristic_move_cap = solver.Int("heuristic_move_cap", c.solver.heuristic_move_cap);
  c.solver.delay_polish = solver.Bool("delay_polish", c.solver.delay_polish);
  c.solver.perturbation_rounds = solver.Int("perturbation_rounds", c.solver.perturbation_rounds);
  c.solver.heuristic_seed = solver.Seed("heuristic_seed", c.solver.heuristic_seed);
  if (c.solver.exact_max_devices < 0) Fail("solver.exact_max_devices", "must be >= 0");
  if (c.solver.exact_max_cloudlets < 0) Fail("solver.exact_max_cloudlets", "must be >= 0");
  if (c.solver.heuristic_move_cap < 0) Fail("solver.heuristic_move_cap", "must be >= 0");
  if (c.solver.perturbation_rounds < 0) Fail("solver.perturbation_rounds", "must be >= 0");

  const Section out = root.Child("output");
  out.RejectUnknown({"dir", "prefix"});
  if (auto d = out.String("dir")) c.output.dir = ResolvePath(*d, base_dir);
  else c.output.dir = ResolvePath(c.output.dir, base_dir);
  if (auto p = out.String("prefix")) c.output.prefix = *p;
  if (c.output.prefix.empty() || c.output.prefix.find('/') != std::string::npos)
    Fail("output.prefix", "must be a non-empty file name prefix");
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(ReadTextFile(path));
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return ParseRunConfig(doc, path.parent_path());
}

json ToJson(const RunConfig& c) {
  json doc;
  doc["topology"] = {{"rows", c.topology.rows},
                     {"cols", c.topology.cols},
                     {"cell_km", c.topology.cell_km},
                     {"lambda", c.topology.lambda},
                     {"beta", c.topology.beta},
                     {"delay_matrix_file", c.topology.delay_matrix_file
                                               ? json(*c.topology.delay_matrix_file)
                                               : json(nullptr)}};
  doc["cloudlet"] = {{"pm_count", c.cloudlet.pm_count},
                     {"epsilon", c.cloudlet.epsilon},
                     {"rho_s", c.cloudlet.rho_s},
                     {"alpha", c.cloudlet.alpha},
                     {"g", c.cloudlet.g}};
  doc["mobility"] = {
      {"trace_file", c.mobility.trace_file ? json(*c.mobility.trace_file) : json(nullptr)},
      {"qualify", c.mobility.qualify},
      {"devices", c.mobility.devices},
      {"slots", c.mobility.slots},
      {"seed", c.mobility.seed},
      {"speed_kmh", {c.mobility.speed_min_kmh, c.mobility.speed_max_kmh}}};
  doc["utilization"] = {{"seed", c.utilization.seed},
                        {"min_pct", c.utilization.min_pct},
                        {"max_pct", c.utilization.max_pct}};
  doc["gamma"] = c.gamma;
  doc["delta_t_hours"] = c.delta_t_hours;
  json strategies = json::array();
  for (auto s : c.strategies) strategies.push_back(std::string(ToString(s)));
  doc["strategies"] = std::move(strategies);
  doc["solver"] = {{"exact_max_devices", c.solver.exact_max_devices},
                   {"exact_max_cloudlets", c.solver.exact_max_cloudlets},
                   {"heuristic_move_cap", c.solver.heuristic_move_cap},
                   {"delay_polish", c.solver.delay_polish},
                   {"perturbation_rounds", c.solver.perturbation_rounds},
                   {"heuristic_seed", c.solver.heuristic_seed}};
  doc["output"] = {{"dir", c.output.dir}, {"prefix", c.output.prefix}};
  return doc;
}

Scenario BuildScenario(const RunConfig& c) {
  CloudletParams params;
  params.pm_count = c.cloudlet.pm_count;
  params.vms_per_pm = c.cloudlet.epsilon;
  params.static_pm_power_w = c.cloudlet.rho_s;
  params.power_coefficient_w_per_pct = c.cloudlet.alpha;
  params.green_power_w = c.cloudlet.g;

  Scenario s;
  s.topology = Topology::BuildGrid(c.topology.rows, c.topology.cols, c.topology.cell_km, params,
                                   c.topology.lambda, c.topology.beta);
  if (c.topology.delay_matrix_file) {
    s.topology = s.topology.WithDelayMatrix(LoadDelayMatrixCsv(
        *c.topology.delay_matrix_file, s.topology.base_station_count(), s.topology.cloudlet_count()));
  }

  if (c.mobility.trace_file) {
    RawTrace raw = ReadTraceCsv(*c.mobility.trace_file);
    if (c.mobility.qualify) raw = FilterQualified(raw, s.topology.area());
    if (raw.device_count == 0)
      throw InvalidArgument("trace '" + *c.mobility.trace_file + "' has no qualified devices");
    s.trace = MobilityTrace(std::move(raw), s.topology, c.delta_t_hours);
  } else {
    WaypointOptions wp;
    wp.min_speed_kmh = c.mobility.speed_min_kmh;
    wp.max_speed_kmh = c.mobility.speed_max_kmh;
    wp.slot_duration_h = c.delta_t_hours;
    s.trace = GenerateSynthetic(c.mobility.seed, c.mobility.devices, c.mobility.slots, s.topology, wp);
  }
  s.devices = AssignUtilizations(c.utilization.seed, s.trace.device_count(),
                                 c.utilization.min_pct, c.utilization.max_pct);
  s.gamma_ms = c.gamma;
  s.exact_limits.max_devices = c.solver.exact_max_devices;
  s.exact_limits.max_cloudlets = c.solver.exact_max_cloudlets;
  s.heuristic.move_cap = c.solver.heuristic_move_cap;
  s.heuristic.delay_polish = c.solver.delay_polish;
  s.heuristic.perturbation_rounds = c.solver.perturbation_rounds;
  s.heuristic.seed = c.solver.heuristic_seed;
  return s;
}

}  // namespace edgeplace
