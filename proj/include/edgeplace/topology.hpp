#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "edgeplace/common.hpp"

namespace edgeplace {

struct Point {
  double x_km = 0.0;
  double y_km = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double EuclideanKm(Point a, Point b);

// Closed axis-aligned rectangle.
struct Area {
  double min_x_km = 0.0;
  double min_y_km = 0.0;
  double max_x_km = 0.0;
  double max_y_km = 0.0;

  bool Contains(Point p) const {
    return p.x_km >= min_x_km && p.x_km <= max_x_km && p.y_km >= min_y_km &&
           p.y_km <= max_y_km;
  }
  double width_km() const { return max_x_km - min_x_km; }
  double height_km() const { return max_y_km - min_y_km; }
};

struct BaseStation {
  int id = 0;
  Point position;
};

// Physical parameters shared by the cloudlets of a grid. Defaults are the
// reference operating point: 5 PMs of 6 proxy VMs each, 1000 W green supply,
// 80 W static PM power and 0.2 W per utilization percent.
struct CloudletParams {
  int pm_count = 5;
  int vms_per_pm = 6;
  double green_power_w = 1000.0;
  double static_pm_power_w = 80.0;
  double power_coefficient_w_per_pct = 0.2;

  int capacity() const { return pm_count * vms_per_pm; }
  void Validate() const;

  friend bool operator==(const CloudletParams&, const CloudletParams&) = default;
};

struct Cloudlet {
  int id = 0;
  Point position;
  CloudletParams params;

  int capacity() const { return params.capacity(); }
};

struct GridSpec {
  int rows = 0;
  int cols = 0;
  double cell_km = 0.0;
};

// Base stations and cloudlets on a rectangular grid of square cells, one
// co-located BS/cloudlet pair per cell, plus the BS x cloudlet delay matrix.
// BS and cloudlet ids are row-major cell indices: id = row * cols + col.
//
// Immutable once built; the With* methods return modified copies.
class Topology {
 public:
  // Empty topology; use BuildGrid.
  Topology() = default;

  static Topology BuildGrid(int rows, int cols, double cell_km,
                            const CloudletParams& cloudlet_template,
                            double lambda_ms_per_km, double beta_ms);

  int base_station_count() const { return static_cast<int>(base_stations_.size()); }
  int cloudlet_count() const { return static_cast<int>(cloudlets_.size()); }
  const std::vector<BaseStation>& base_stations() const { return base_stations_; }
  const std::vector<Cloudlet>& cloudlets() const { return cloudlets_; }
  const GridSpec& grid() const { return grid_; }
  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  const Matrix<double>& delay_matrix() const { return delay_ms_; }
  // True when the delay matrix was supplied externally rather than derived
  // from positions.
  bool has_external_delays() const { return external_delays_; }

  // Euclidean distance between cell centers, in km.
  double Distance(int bs, int cloudlet) const;
  // End-to-end delay in ms between a BS and a cloudlet.
  double Delay(int bs, int cloudlet) const;

  Area area() const;
  // BS whose cell contains `p`. Cells are half-open except along the far
  // edges of the area, which belong to the last row/column.
  std::optional<int> LocateBaseStation(Point p) const;

  int total_capacity() const;

  Topology WithLambda(double lambda_ms_per_km) const;
  Topology WithUniformGreen(double green_power_w) const;
  // Replaces the delay matrix; values are kept as given.
  Topology WithDelayMatrix(Matrix<double> delay_ms) const;

 private:
  void CheckBs(int bs) const;
  void CheckCloudlet(int cloudlet) const;
  void RebuildDelays();

  GridSpec grid_;
  std::vector<BaseStation> base_stations_;
  std::vector<Cloudlet> cloudlets_;
  double lambda_ = 0.0;
  double beta_ = 0.0;
  Matrix<double> delay_ms_;
  bool external_delays_ = false;
};

// CSV with header `bs_id,cloudlet_id,delay_ms`, exactly one row per pair.
Matrix<double> LoadDelayMatrixCsv(const std::filesystem::path& path, int bs_count,
                                  int cloudlet_count);
void SaveDelayMatrixCsv(const std::filesystem::path& path, const Matrix<double>& delay_ms);

}  // namespace edgeplace
