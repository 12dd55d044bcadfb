#include "edgeplace/topology.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "edgeplace/io.hpp"

namespace edgeplace {

double EuclideanKm(Point a, Point b) {
  return std::hypot(a.x_km - b.x_km, a.y_km - b.y_km);
}

void CloudletParams::Validate() const {
  if (pm_count <= 0) throw InvalidArgument("cloudlet pm_count must be > 0");
  if (vms_per_pm <= 0) throw InvalidArgument("cloudlet vms_per_pm must be > 0");
  if (!(static_pm_power_w > 0.0)) throw InvalidArgument("cloudlet static PM power must be > 0");
  if (!(power_coefficient_w_per_pct > 0.0))
    throw InvalidArgument("cloudlet power coefficient must be > 0");
  if (!(green_power_w >= 0.0) || !std::isfinite(green_power_w))
    throw InvalidArgument("cloudlet green power must be finite and >= 0");
}

Topology Topology::BuildGrid(int rows, int cols, double cell_km,
                             const CloudletParams& cloudlet_template,
                             double lambda_ms_per_km, double beta_ms) {
  if (rows < 1 || cols < 1) throw InvalidArgument("grid rows and cols must be >= 1");
  if (!(cell_km > 0.0) || !std::isfinite(cell_km))
    throw InvalidArgument("grid cell size must be > 0");
  if (!(lambda_ms_per_km >= 0.0) || !std::isfinite(lambda_ms_per_km))
    throw InvalidArgument("lambda must be finite and >= 0");
  if (!(beta_ms >= 0.0) || !std::isfinite(beta_ms))
    throw InvalidArgument("beta must be finite and >= 0");
  cloudlet_template.Validate();

  Topology t;
  t.grid_ = GridSpec{rows, cols, cell_km};
  t.lambda_ = lambda_ms_per_km;
  t.beta_ = beta_ms;
  const int n = rows * cols;
  t.base_stations_.reserve(n);
  t.cloudlets_.reserve(n);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int id = r * cols + c;
      const Point center{(c + 0.5) * cell_km, (r + 0.5) * cell_km};
      t.base_stations_.push_back(BaseStation{id, center});
      t.cloudlets_.push_back(Cloudlet{id, center, cloudlet_template});
    }
  }
  t.RebuildDelays();
  return t;
}

void Topology::RebuildDelays() {
  delay_ms_ = Matrix<double>(base_stations_.size(), cloudlets_.size());
  for (const auto& bs : base_stations_) {
    for (const auto& cl : cloudlets_) {
      delay_ms_(bs.id, cl.id) = lambda_ * EuclideanKm(bs.position, cl.position) + beta_;
    }
  }
  external_delays_ = false;
}

void Topology::CheckBs(int bs) const {
  if (bs < 0 || bs >= base_station_count())
    throw InvalidArgument("base station id " + std::to_string(bs) + " out of range");
}

void Topology::CheckCloudlet(int cloudlet) const {
  if (cloudlet < 0 || cloudlet >= cloudlet_count())
    throw InvalidArgument("cloudlet id " + std::to_string(cloudlet) + " out of range");
}

double Topology::Distance(int bs, int cloudlet) const {
  CheckBs(bs);
  CheckCloudlet(cloudlet);
  return EuclideanKm(base_stations_[bs].position, cloudlets_[cloudlet].position);
}

double Topology::Delay(int bs, int cloudlet) const {
  CheckBs(bs);
  CheckCloudlet(cloudlet);
  return delay_ms_(bs, cloudlet);
}

Area Topology::area() const {
  return Area{0.0, 0.0, grid_.cols * grid_.cell_km, grid_.rows * grid_.cell_km};
}

std::optional<int> Topology::LocateBaseStation(Point p) const {
  if (!std::isfinite(p.x_km) || !std::isfinite(p.y_km) || !area().Contains(p))
    return std::nullopt;
  int col = static_cast<int>(std::floor(p.x_km / grid_.cell_km));
  int row = static_cast<int>(std::floor(p.y_km / grid_.cell_km));
  if (col >= grid_.cols) col = grid_.cols - 1;
  if (row >= grid_.rows) row = grid_.rows - 1;
  return row * grid_.cols + col;
}

int Topology::total_capacity() const {
  int total = 0;
  for (const auto& c : cloudlets_) total += c.capacity();
  return total;
}

Topology Topology::WithLambda(double lambda_ms_per_km) const {
  if (external_delays_)
    throw InvalidArgument("cannot rebuild delays from lambda: delay matrix was loaded from file");
  if (!(lambda_ms_per_km >= 0.0) || !std::isfinite(lambda_ms_per_km))
    throw InvalidArgument("lambda must be finite and >= 0");
  Topology t = *this;
  t.lambda_ = lambda_ms_per_km;
  t.RebuildDelays();
  return t;
}

Topology Topology::WithUniformGreen(double green_power_w) const {
  if (!(green_power_w >= 0.0) || !std::isfinite(green_power_w))
    throw InvalidArgument("green power must be finite and >= 0");
  Topology t = *this;
  for (auto& c : t.cloudlets_) c.params.green_power_w = green_power_w;
  return t;
}

Topology Topology::WithDelayMatrix(Matrix<double> delay_ms) const {
  if (delay_ms.rows() != base_stations_.size() || delay_ms.cols() != cloudlets_.size())
    throw InvalidArgument("delay matrix dimensions do not match the topology");
  for (double v : delay_ms.data()) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw InvalidArgument("delay matrix entries must be finite and >= 0");
  }
  Topology t = *this;
  t.delay_ms_ = std::move(delay_ms);
  t.external_delays_ = true;
  return t;
}

Matrix<double> LoadDelayMatrixCsv(const std::filesystem::path& path, int bs_count,
                                  int cloudlet_count) {
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
    if (header.size() != 3 || header[0] != "bs_id" || header[1] != "cloudlet_id" ||
        header[2] != "delay_ms")
      throw fail(line_no, "expected header 'bs_id,cloudlet_id,delay_ms'");
  }

  Matrix<double> delays(bs_count, cloudlet_count, 0.0);
  Matrix<char> seen(bs_count, cloudlet_count, 0);
  std::size_t rows_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = SplitCsvLine(line);
    if (fields.size() != 3) throw fail(line_no, "expected 3 fields");
    const auto bs = ParseInt(fields[0]);
    const auto cl = ParseInt(fields[1]);
    const auto d = ParseDouble(fields[2]);
    if (!bs || !cl || !d) throw fail(line_no, "malformed number");
    if (*bs < 0 || *bs >= bs_count) throw fail(line_no, "bs_id out of range");
    if (*cl < 0 || *cl >= cloudlet_count) throw fail(line_no, "cloudlet_id out of range");
    if (!(*d >= 0.0) || !std::isfinite(*d)) throw fail(line_no, "delay_ms must be >= 0");
    if (seen(*bs, *cl)) throw fail(line_no, "duplicate pair");
    seen(*bs, *cl) = 1;
    delays(*bs, *cl) = *d;
    ++rows_read;
  }
  if (rows_read != static_cast<std::size_t>(bs_count) * cloudlet_count)
    throw InvalidArgument(path.string() + ": expected " +
                          std::to_string(bs_count * cloudlet_count) + " pairs, found " +
                          std::to_string(rows_read));
  return delays;
}

void SaveDelayMatrixCsv(const std::filesystem::path& path, const Matrix<double>& delay_ms) {
  std::string out = "bs_id,cloudlet_id,delay_ms\n";
  for (std::size_t j = 0; j < delay_ms.rows(); ++j) {
    for (std::size_t k = 0; k < delay_ms.cols(); ++k) {
      out += std::to_string(j) + "," + std::to_string(k) + "," +
             FormatDouble(delay_ms(j, k)) + "\n";
    }
  }
  WriteFileAtomic(path, out);
}

}  // namespace edgeplace
