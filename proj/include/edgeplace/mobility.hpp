#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "edgeplace/topology.hpp"

namespace edgeplace {

// A device and the CPU utilization of its proxy VM, in percent of one CPU.
struct Device {
  int id = 0;
  double utilization_pct = 0.0;
};

// Per-slot device positions before association with base stations.
// Positions are slot-major: positions[slot * device_count + device].
struct RawTrace {
  int slot_count = 0;
  int device_count = 0;
  std::vector<Point> positions;
  // Original device id for each dense index.
  std::vector<std::int64_t> device_labels;
  // 1-based source line of each sample when read from a file, else empty.
  std::vector<int> source_lines;

  Point position(int slot, int device) const {
    return positions[static_cast<std::size_t>(slot) * device_count + device];
  }
};

// Device positions plus the covering base station for every (slot, device).
class MobilityTrace {
 public:
  MobilityTrace() = default;
  // Associates every sample with the BS whose cell contains it. Throws
  // InvalidArgument naming the sample (and source line, when known) for
  // positions outside the grid.
  MobilityTrace(RawTrace raw, const Topology& topology, double slot_duration_h);

  // Builds a trace from explicit associations; positions are the BS cell
  // centers.
  static MobilityTrace FromAssociations(int slot_count, int device_count,
                                        std::vector<int> associations,
                                        const Topology& topology,
                                        double slot_duration_h);

  int slot_count() const { return raw_.slot_count; }
  int device_count() const { return raw_.device_count; }
  double slot_duration_h() const { return slot_duration_h_; }
  const RawTrace& raw() const { return raw_; }

  int BaseStationOf(int slot, int device) const {
    return associations_[static_cast<std::size_t>(slot) * raw_.device_count + device];
  }
  std::span<const int> SlotAssociations(int slot) const {
    return {associations_.data() + static_cast<std::size_t>(slot) * raw_.device_count,
            static_cast<std::size_t>(raw_.device_count)};
  }
  Point position(int slot, int device) const { return raw_.position(slot, device); }

  friend MobilityTrace FilterQualified(const MobilityTrace& trace, const Area& area);

  friend bool operator==(const MobilityTrace& a, const MobilityTrace& b) {
    return a.raw_.slot_count == b.raw_.slot_count &&
           a.raw_.device_count == b.raw_.device_count &&
           a.raw_.positions == b.raw_.positions &&
           a.associations_ == b.associations_ &&
           a.slot_duration_h_ == b.slot_duration_h_;
  }

 private:
  RawTrace raw_;
  std::vector<int> associations_;
  double slot_duration_h_ = 0.5;
};

// Trace CSV: header `slot,device_id,x_km,y_km`, slots 0-based and contiguous,
// exactly one row per (slot, device). Device ids are re-indexed densely in
// ascending order of the original id.
RawTrace ReadTraceCsv(const std::filesystem::path& path);
void WriteTraceCsv(const std::filesystem::path& path, const RawTrace& trace);

MobilityTrace LoadTrace(const std::filesystem::path& path, const Topology& topology,
                        double slot_duration_h = 0.5);
void SaveTrace(const std::filesystem::path& path, const MobilityTrace& trace);

// Keeps exactly the devices that are inside `area` in every slot.
RawTrace FilterQualified(const RawTrace& trace, const Area& area);
MobilityTrace FilterQualified(const MobilityTrace& trace, const Area& area);

struct WaypointOptions {
  double min_speed_kmh = 3.0;
  double max_speed_kmh = 30.0;
  double slot_duration_h = 0.5;
};

// Random-waypoint motion inside the topology area, sampled at the start of
// each slot. Deterministic for a given seed.
MobilityTrace GenerateSynthetic(std::uint64_t seed, int device_count, int slot_count,
                                const Topology& topology,
                                const WaypointOptions& options = {});

// Utilizations drawn uniformly from [min_pct, max_pct].
std::vector<Device> AssignUtilizations(std::uint64_t seed, int device_count,
                                       double min_pct = 20.0, double max_pct = 100.0);

// Number of (slot, device) pairs whose BS differs from the previous slot.
int CountHandovers(const MobilityTrace& trace);

}  // namespace edgeplace
