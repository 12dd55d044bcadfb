#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <random>
#include <string>

#include "edgeplace/common.hpp"
#include "edgeplace/io.hpp"
#include "edgeplace/mobility.hpp"

namespace edgeplace {
namespace {

namespace fs = std::filesystem;

Topology Grid5() { return Topology::BuildGrid(5, 5, 1.0, CloudletParams{}, 25.0, 10.0); }

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgeplace_mobility_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

RawTrace MakeRaw(int slots, int devices, std::vector<Point> positions) {
  RawTrace raw;
  raw.slot_count = slots;
  raw.device_count = devices;
  raw.positions = std::move(positions);
  for (int i = 0; i < devices; ++i) raw.device_labels.push_back(i);
  return raw;
}

TEST(MobilityTrace, AllInFirstCell) {
  const Topology t = Grid5();
  const RawTrace raw = MakeRaw(3, 2, std::vector<Point>(6, Point{0.2, 0.7}));
  const MobilityTrace trace(raw, t, 0.5);
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 2; ++i) EXPECT_EQ(trace.BaseStationOf(s, i), 0);
}

TEST(MobilityTrace, CellContainment) {
  const MobilityTrace trace(MakeRaw(1, 1, {{1.5, 0.5}}), Grid5(), 0.5);
  EXPECT_EQ(trace.BaseStationOf(0, 0), 1);
}

TEST(MobilityTrace, OutsidePositionIsRejected) {
  EXPECT_THROW(MobilityTrace(MakeRaw(1, 1, {{7.0, 0.5}}), Grid5(), 0.5), InvalidArgument);
}

TEST_F(TempDir, CsvRoundTripIsBitExact) {
  const Topology t = Grid5();
  const MobilityTrace trace = GenerateSynthetic(7, 20, 4, t);
  SaveTrace(dir_ / "a.csv", trace);
  const MobilityTrace back = LoadTrace(dir_ / "a.csv", t, 0.5);
  EXPECT_EQ(back, trace);
  SaveTrace(dir_ / "b.csv", back);
  EXPECT_EQ(ReadTextFile(dir_ / "a.csv"), ReadTextFile(dir_ / "b.csv"));
}

TEST_F(TempDir, FullScaleTraceDimensions) {
  const Topology t = Grid5();
  SaveTrace(dir_ / "full.csv", GenerateSynthetic(1, 632, 12, t));
  const MobilityTrace trace = LoadTrace(dir_ / "full.csv", t, 0.5);
  EXPECT_EQ(trace.slot_count(), 12);
  EXPECT_EQ(trace.device_count(), 632);
}

TEST_F(TempDir, SparseLabelsAreReindexed) {
  WriteFileAtomic(dir_ / "t.csv",
                  "slot,device_id,x_km,y_km\n0,90,0.5,0.5\n0,12,1.5,0.5\n1,12,1.5,1.5\n1,90,0.5,0.5\n");
  const RawTrace raw = ReadTraceCsv(dir_ / "t.csv");
  ASSERT_EQ(raw.device_count, 2);
  EXPECT_EQ(raw.device_labels, (std::vector<std::int64_t>{12, 90}));
  EXPECT_EQ(raw.position(1, 0), (Point{1.5, 1.5}));
}

TEST_F(TempDir, MalformedTracesAreRejected) {
  WriteFileAtomic(dir_ / "dup.csv", "slot,device_id,x_km,y_km\n0,1,0.5,0.5\n0,1,0.5,0.5\n");
  EXPECT_THROW(ReadTraceCsv(dir_ / "dup.csv"), InvalidArgument);
  WriteFileAtomic(dir_ / "gap.csv",
                  "slot,device_id,x_km,y_km\n0,1,0.5,0.5\n0,2,0.5,0.5\n1,1,0.5,0.5\n");
  EXPECT_THROW(ReadTraceCsv(dir_ / "gap.csv"), InvalidArgument);
  WriteFileAtomic(dir_ / "hdr.csv", "t,id,x,y\n0,1,0.5,0.5\n");
  EXPECT_THROW(ReadTraceCsv(dir_ / "hdr.csv"), InvalidArgument);
  WriteFileAtomic(dir_ / "num.csv", "slot,device_id,x_km,y_km\n0,1,abc,0.5\n");
  EXPECT_THROW(ReadTraceCsv(dir_ / "num.csv"), InvalidArgument);
  EXPECT_THROW(ReadTraceCsv(dir_ / "missing.csv"), IoError);
}

TEST(FilterQualified, IdentityWhenAllInside) {
  const Topology t = Grid5();
  const MobilityTrace trace = GenerateSynthetic(3, 30, 5, t);
  EXPECT_EQ(FilterQualified(trace, t.area()), trace);
}

TEST(FilterQualified, DropsDeviceThatLeaves) {
  const Area area{0, 0, 5, 5};
  std::vector<Point> pos;
  for (int s = 0; s < 5; ++s) {
    pos.push_back({0.5, 0.5});
    pos.push_back(s == 3 ? Point{6.0, 0.5} : Point{1.5, 0.5});
    pos.push_back({2.5, 2.5});
  }
  const RawTrace out = FilterQualified(MakeRaw(5, 3, pos), area);
  ASSERT_EQ(out.device_count, 2);
  EXPECT_EQ(out.device_labels, (std::vector<std::int64_t>{0, 2}));
  for (int s = 0; s < 5; ++s) EXPECT_EQ(out.position(s, 1), (Point{2.5, 2.5}));
}

TEST(FilterQualified, MatchesIndependentRecount) {
  // Positions wander over a 7 km square; qualification is against the inner 5 km.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 6.0);
  const int slots = 6, devices = 400;
  std::vector<Point> pos;
  for (int k = 0; k < slots * devices; ++k) pos.push_back({u(rng), u(rng)});
  const RawTrace raw = MakeRaw(slots, devices, pos);
  const Area area{0, 0, 5, 5};
  int expected = 0;
  for (int i = 0; i < devices; ++i) {
    bool inside = true;
    for (int s = 0; s < slots; ++s) {
      const Point p = pos[s * devices + i];
      inside = inside && p.x_km >= 0 && p.x_km <= 5 && p.y_km >= 0 && p.y_km <= 5;
    }
    expected += inside;
  }
  const RawTrace once = FilterQualified(raw, area);
  EXPECT_EQ(once.device_count, expected);
  const RawTrace twice = FilterQualified(once, area);
  EXPECT_EQ(twice.positions, once.positions);
  EXPECT_EQ(twice.device_labels, once.device_labels);
}

TEST(GenerateSynthetic, StationaryWhenSpeedZero) {
  const Topology t = Grid5();
  const MobilityTrace trace = GenerateSynthetic(5, 50, 6, t, {0.0, 0.0, 0.5});
  for (int s = 1; s < 6; ++s)
    for (int i = 0; i < 50; ++i) EXPECT_EQ(trace.BaseStationOf(s, i), trace.BaseStationOf(0, i));
  EXPECT_EQ(CountHandovers(trace), 0);
}

TEST(GenerateSynthetic, Deterministic) {
  const Topology t = Grid5();
  EXPECT_EQ(GenerateSynthetic(9, 100, 12, t), GenerateSynthetic(9, 100, 12, t));
  EXPECT_FALSE(GenerateSynthetic(9, 100, 12, t) == GenerateSynthetic(10, 100, 12, t));
}

TEST(GenerateSynthetic, StaysInsideAndMoves) {
  const Topology t = Grid5();
  const MobilityTrace trace = GenerateSynthetic(1, 632, 12, t);
  EXPECT_EQ(FilterQualified(trace, t.area()).device_count(), 632);
  EXPECT_GT(CountHandovers(trace), 0);
}

TEST(GenerateSynthetic, RejectsBadOptions) {
  const Topology t = Grid5();
  EXPECT_THROW(GenerateSynthetic(1, 0, 12, t), InvalidArgument);
  EXPECT_THROW(GenerateSynthetic(1, 10, 12, t, {30.0, 3.0, 0.5}), InvalidArgument);
}

TEST(AssignUtilizations, RangeDeterminismAndMean) {
  const auto a = AssignUtilizations(2, 100000);
  const auto b = AssignUtilizations(2, 100000);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_GE(a[i].utilization_pct, 20.0);
    ASSERT_LE(a[i].utilization_pct, 100.0);
    ASSERT_EQ(a[i].utilization_pct, b[i].utilization_pct);
    ASSERT_EQ(a[i].id, static_cast<int>(i));
    sum += a[i].utilization_pct;
  }
  EXPECT_NEAR(sum / a.size(), 60.0, 1.0);
}

TEST(CountHandovers, CountsChanges) {
  const Topology t = Grid5();
  const MobilityTrace trace = MobilityTrace::FromAssociations(3, 2, {0, 5, 1, 5, 1, 6}, t, 0.5);
  EXPECT_EQ(CountHandovers(trace), 2);
}

}  // namespace
}  // namespace edgeplace
