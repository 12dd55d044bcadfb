#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "edgeplace/common.hpp"
#include "edgeplace/io.hpp"

namespace edgeplace {
namespace {

TEST(FormatDouble, RoundTripsExactly) {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 17.333333333333332, 1e-300, 6.02e23, -2.5}) {
    const auto back = ParseDouble(FormatDouble(v));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, v);
  }
  EXPECT_EQ(FormatDouble(35.0), "35");
}

TEST(ParseDouble, RejectsGarbage) {
  EXPECT_FALSE(ParseDouble("").has_value());
  EXPECT_FALSE(ParseDouble("1.5x").has_value());
  EXPECT_FALSE(ParseDouble("abc").has_value());
}

TEST(ParseInt, RejectsFractions) {
  EXPECT_EQ(ParseInt("42"), 42);
  EXPECT_FALSE(ParseInt("4.2").has_value());
}

TEST(SplitCsvLine, TrimsFields) {
  const auto f = SplitCsvLine(" a, b ,c");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], "a");
  EXPECT_EQ(f[1], "b");
  EXPECT_EQ(f[2], "c");
}

TEST(WriteFileAtomic, WritesAndLeavesNoTemp) {
  const auto dir = std::filesystem::temp_directory_path() / "edgeplace_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "x.txt";
  WriteFileAtomic(path, "hello\n");
  EXPECT_EQ(ReadTextFile(path), "hello\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "x.txt.tmp"));
  std::filesystem::remove_all(dir);
}

TEST(ReadTextFile, MissingFileIsIoError) {
  EXPECT_THROW(ReadTextFile("/nonexistent/edgeplace/file.csv"), IoError);
}

}  // namespace
}  // namespace edgeplace
