#include "edgeplace/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "edgeplace/io.hpp"
#include "edgeplace/random.hpp"

namespace edgeplace {

MobilityTrace::MobilityTrace(RawTrace raw, const Topology& topology, double slot_duration_h)
    : raw_(std::move(raw)), slot_duration_h_(slot_duration_h) {
  if (!(slot_duration_h > 0.0)) throw InvalidArgument("slot duration must be > 0");
  if (raw_.positions.size() !=
      static_cast<std::size_t>(raw_.slot_count) * raw_.device_count)
    throw InvalidArgument("trace position table has the wrong size");
  if (raw_.device_labels.empty()) {
    raw_.device_labels.resize(raw_.device_count);
    for (int i = 0; i < raw_.device_count; ++i) raw_.device_labels[i] = i;
  }
  associations_.resize(raw_.positions.size());
  for (int t = 0; t < raw_.slot_count; ++t) {
    for (int i = 0; i < raw_.device_count; ++i) {
      const std::size_t idx = static_cast<std::size_t>(t) * raw_.device_count + i;
      const auto bs = topology.LocateBaseStation(raw_.positions[idx]);
      if (!bs) {
        std::string where = "slot " + std::to_string(t) + ", device " +
                            std::to_string(raw_.device_labels[i]);
        if (!raw_.source_lines.empty())
          where = "line " + std::to_string(raw_.source_lines[idx]) + " (" + where + ")";
        throw InvalidArgument(where + ": position (" + FormatDouble(raw_.positions[idx].x_km) +
                              ", " + FormatDouble(raw_.positions[idx].y_km) +
                              ") lies outside every cell");
      }
      associations_[idx] = *bs;
    }
  }
}

MobilityTrace MobilityTrace::FromAssociations(int slot_count, int device_count,
                                              std::vector<int> associations,
                                              const Topology& topology,
                                              double slot_duration_h) {
  if (slot_count < 1 || device_count < 0)
    throw InvalidArgument("trace needs at least one slot");
  if (associations.size() != static_cast<std::size_t>(slot_count) * device_count)
    throw InvalidArgument("association table has the wrong size");
  RawTrace raw;
  raw.slot_count = slot_count;
  raw.device_count = device_count;
  raw.positions.reserve(associations.size());
  for (int bs : associations) {
    if (bs < 0 || bs >= topology.base_station_count())
      throw InvalidArgument("association references unknown BS " + std::to_string(bs));
    raw.positions.push_back(topology.base_stations()[bs].position);
  }
  MobilityTrace trace(std::move(raw), topology, slot_duration_h);
  // Cell centers always map back to their own BS.
  return trace;
}

RawTrace ReadTraceCsv(const std::filesystem::path& path) {
  struct Row {
    std::int64_t slot;
    std::int64_t device;
    Point p;
    int line;
  };
  const std::string text = ReadTextFile(path);
  std::istringstream in(text);
  std::string line;
  const auto fail = [&](int line_no, const std::string& what) {
    return InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };

  int line_no = 0;
  if (!std::getline(in, line)) throw fail(1, "empty file");
  ++line_no;
  {
    const auto header = SplitCsvLine(line);
    if (header.size() != 4 || header[0] != "slot" || header[1] != "device_id" ||
        header[2] != "x_km" || header[3] != "y_km")
      throw fail(line_no, "expected header 'slot,device_id,x_km,y_km'");
  }

  std::vector<Row> rows;
  std::int64_t max_slot = -1;
  std::map<std::int64_t, int> dense;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 4) throw fail(line_no, "expected 4 fields");
    const auto slot = ParseInt(f[0]);
    const auto dev = ParseInt(f[1]);
    const auto x = ParseDouble(f[2]);
    const auto y = ParseDouble(f[3]);
    if (!slot || !dev || !x || !y) throw fail(line_no, "malformed number");
    if (*slot < 0) throw fail(line_no, "negative slot");
    if (!std::isfinite(*x) || !std::isfinite(*y)) throw fail(line_no, "non-finite position");
    rows.push_back(Row{*slot, *dev, Point{*x, *y}, line_no});
    max_slot = std::max(max_slot, *slot);
    dense.emplace(*dev, 0);
  }
  if (rows.empty()) throw fail(line_no, "trace has no samples");

  RawTrace trace;
  trace.slot_count = static_cast<int>(max_slot + 1);
  trace.device_count = static_cast<int>(dense.size());
  int next = 0;
  for (auto& [label, idx] : dense) {
    idx = next++;
    trace.device_labels.push_back(label);
  }
  const std::size_t cells = static_cast<std::size_t>(trace.slot_count) * trace.device_count;
  trace.positions.assign(cells, Point{});
  trace.source_lines.assign(cells, 0);
  for (const Row& r : rows) {
    const std::size_t idx =
        static_cast<std::size_t>(r.slot) * trace.device_count + dense.at(r.device);
    if (trace.source_lines[idx] != 0)
      throw fail(r.line, "duplicate sample for slot " + std::to_string(r.slot) +
                             ", device " + std::to_string(r.device));
    trace.positions[idx] = r.p;
    trace.source_lines[idx] = r.line;
  }
  for (int t = 0; t < trace.slot_count; ++t) {
    for (int i = 0; i < trace.device_count; ++i) {
      if (trace.source_lines[static_cast<std::size_t>(t) * trace.device_count + i] == 0)
        throw InvalidArgument(path.string() + ": device " +
                              std::to_string(trace.device_labels[i]) +
                              " has no sample in slot " + std::to_string(t));
    }
  }
  return trace;
}

void WriteTraceCsv(const std::filesystem::path& path, const RawTrace& trace) {
  std::string out = "slot,device_id,x_km,y_km\n";
  out.reserve(out.size() + trace.positions.size() * 40);
  for (int t = 0; t < trace.slot_count; ++t) {
    for (int i = 0; i < trace.device_count; ++i) {
      const Point p = trace.position(t, i);
      const std::int64_t label = trace.device_labels.empty() ? i : trace.device_labels[i];
      out += std::to_string(t);
      out += ',';
      out += std::to_string(label);
      out += ',';
      out += FormatDouble(p.x_km);
      out += ',';
      out += FormatDouble(p.y_km);
      out += '\n';
    }
  }
  WriteFileAtomic(path, out);
}

MobilityTrace LoadTrace(const std::filesystem::path& path, const Topology& topology,
                        double slot_duration_h) {
  return MobilityTrace(ReadTraceCsv(path), topology, slot_duration_h);
}

void SaveTrace(const std::filesystem::path& path, const MobilityTrace& trace) {
  WriteTraceCsv(path, trace.raw());
}

namespace {

std::vector<int> QualifiedDevices(const RawTrace& trace, const Area& area) {
  std::vector<int> keep;
  for (int i = 0; i < trace.device_count; ++i) {
    bool inside = true;
    for (int t = 0; t < trace.slot_count && inside; ++t)
      inside = area.Contains(trace.position(t, i));
    if (inside) keep.push_back(i);
  }
  return keep;
}

RawTrace SelectDevices(const RawTrace& trace, const std::vector<int>& keep) {
  RawTrace out;
  out.slot_count = trace.slot_count;
  out.device_count = static_cast<int>(keep.size());
  out.positions.reserve(static_cast<std::size_t>(out.slot_count) * keep.size());
  for (int t = 0; t < trace.slot_count; ++t)
    for (int i : keep) out.positions.push_back(trace.position(t, i));
  for (int i : keep)
    out.device_labels.push_back(trace.device_labels.empty() ? i : trace.device_labels[i]);
  if (!trace.source_lines.empty()) {
    for (int t = 0; t < trace.slot_count; ++t)
      for (int i : keep)
        out.source_lines.push_back(
            trace.source_lines[static_cast<std::size_t>(t) * trace.device_count + i]);
  }
  return out;
}

}  // namespace

RawTrace FilterQualified(const RawTrace& trace, const Area& area) {
  return SelectDevices(trace, QualifiedDevices(trace, area));
}

MobilityTrace FilterQualified(const MobilityTrace& trace, const Area& area) {
  const std::vector<int> keep = QualifiedDevices(trace.raw(), area);
  RawTrace raw = SelectDevices(trace.raw(), keep);
  std::vector<int> assoc;
  assoc.reserve(raw.positions.size());
  for (int t = 0; t < trace.slot_count(); ++t)
    for (int i : keep) assoc.push_back(trace.BaseStationOf(t, i));
  // Reuse the existing associations rather than re-locating: the caller's
  // topology is the one the trace was built against.
  MobilityTrace out;
  out.raw_ = std::move(raw);
  out.associations_ = std::move(assoc);
  out.slot_duration_h_ = trace.slot_duration_h();
  return out;
}

MobilityTrace GenerateSynthetic(std::uint64_t seed, int device_count, int slot_count,
                                const Topology& topology, const WaypointOptions& options) {
  if (device_count < 1) throw InvalidArgument("device count must be >= 1");
  if (slot_count < 1) throw InvalidArgument("slot count must be >= 1");
  if (!(options.min_speed_kmh >= 0.0) || !(options.max_speed_kmh >= options.min_speed_kmh) ||
      !std::isfinite(options.max_speed_kmh))
    throw InvalidArgument("speed range must satisfy 0 <= min <= max");
  if (!(options.slot_duration_h > 0.0)) throw InvalidArgument("slot duration must be > 0");

  const Area area = topology.area();
  Rng rng(seed);
  const auto random_point = [&] {
    return Point{rng.Uniform(area.min_x_km, area.max_x_km),
                 rng.Uniform(area.min_y_km, area.max_y_km)};
  };

  RawTrace raw;
  raw.slot_count = slot_count;
  raw.device_count = device_count;
  raw.positions.assign(static_cast<std::size_t>(slot_count) * device_count, Point{});
  raw.device_labels.resize(device_count);

  for (int i = 0; i < device_count; ++i) {
    raw.device_labels[i] = i;
    Point pos = random_point();
    Point waypoint = random_point();
    double speed = rng.Uniform(options.min_speed_kmh, options.max_speed_kmh);
    for (int t = 0; t < slot_count; ++t) {
      raw.positions[static_cast<std::size_t>(t) * device_count + i] = pos;
      double remaining_h = options.slot_duration_h;
      while (remaining_h > 0.0 && speed > 0.0) {
        const double dist = EuclideanKm(pos, waypoint);
        const double needed_h = dist / speed;
        if (needed_h <= remaining_h) {
          pos = waypoint;
          remaining_h -= needed_h;
          waypoint = random_point();
          speed = rng.Uniform(options.min_speed_kmh, options.max_speed_kmh);
        } else {
          const double frac = remaining_h / needed_h;
          pos.x_km += (waypoint.x_km - pos.x_km) * frac;
          pos.y_km += (waypoint.y_km - pos.y_km) * frac;
          remaining_h = 0.0;
        }
      }
    }
  }
  return MobilityTrace(std::move(raw), topology, options.slot_duration_h);
}

std::vector<Device> AssignUtilizations(std::uint64_t seed, int device_count, double min_pct,
                                       double max_pct) {
  if (device_count < 1) throw InvalidArgument("device count must be >= 1");
  if (!(min_pct > 0.0) || !(max_pct >= min_pct) || max_pct > 100.0)
    throw InvalidArgument("utilization range must satisfy 0 < min <= max <= 100");
  Rng rng(seed);
  std::vector<Device> devices(device_count);
  for (int i = 0; i < device_count; ++i)
    devices[i] = Device{i, rng.Uniform(min_pct, max_pct)};
  return devices;
}

int CountHandovers(const MobilityTrace& trace) {
  int count = 0;
  for (int t = 1; t < trace.slot_count(); ++t)
    for (int i = 0; i < trace.device_count(); ++i)
      if (trace.BaseStationOf(t, i) != trace.BaseStationOf(t - 1, i)) ++count;
  return count;
}

}  // namespace edgeplace
