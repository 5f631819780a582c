#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "trajaug/csv.hpp"
#include "trajaug/error.hpp"
#include "trajaug/modification.hpp"

namespace trajaug {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no trajaug::Error thrown";
  return ErrorCode::IoError;
}

TrajectoryDataset read(const std::string& text, std::optional<std::string> label = std::nullopt) {
  std::istringstream in(text);
  return read_trajectories_csv(in, label);
}

std::string write(const TrajectoryDataset& ds) {
  std::ostringstream out;
  write_trajectories_csv(ds, out);
  return out.str();
}

const std::string kSmall =
    "traj_id,DateTime,lat,lon,mode,RadNum\n"
    "b,2020-01-01 00:00:01,45.1,-118.2,car,7\n"
    "a,2020-01-01 00:00:00,45.0,-118.0,bike,1\n"
    "a,2020-01-01 00:00:02,45.0,-118.1,bike,2\n"
    "b,2020-01-01 00:00:00,45.1,-118.1,car,6\n"
    "a,2020-01-01 00:00:01,45.0,-118.05,bike,3\n";

TEST(CsvRecord, QuotingRules) {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\",\"two\nlines\"\r\nnext\n");
  std::vector<std::string> fields;
  ASSERT_TRUE(read_csv_record(in, fields));
  EXPECT_EQ(fields, (std::vector<std::string>{"a", "b,c", "say \"hi\"", "two\nlines"}));
  ASSERT_TRUE(read_csv_record(in, fields));
  EXPECT_EQ(fields, (std::vector<std::string>{"next"}));
  EXPECT_FALSE(read_csv_record(in, fields));
}

TEST(CsvRecord, EscapeRoundTrip) {
  for (std::string s : {"plain", "with,comma", "quote\"inside", "line\nbreak", ""}) {
    std::istringstream in(escape_csv_field(s) + "\n");
    std::vector<std::string> fields;
    ASSERT_TRUE(read_csv_record(in, fields));
    ASSERT_EQ(fields.size(), 1u);
    EXPECT_EQ(fields[0], s);
  }
  EXPECT_EQ(escape_csv_field("plain"), "plain");
}

TEST(CsvRead, GroupsNonContiguousRowsAndSortsByTime) {
  const auto ds = read(kSmall, "mode");
  ASSERT_EQ(ds.size(), 2u);
  const auto& a = ds.at("a");
  ASSERT_EQ(a.points.size(), 3u);
  EXPECT_EQ(a.label, "bike");
  EXPECT_EQ(a.points[1].position.lon, -118.05L);
  EXPECT_EQ(a.points[1].extras.at("RadNum"), "3");
  EXPECT_TRUE(a.points[0].time < a.points[1].time);
  EXPECT_EQ(ds.at("b").points.size(), 2u);
  EXPECT_EQ(ds.extra_columns(), (std::vector<std::string>{"RadNum"}));
}

TEST(CsvRead, UnlabeledKeepsAllExtras) {
  const auto ds = read(kSmall);
  EXPECT_FALSE(ds.label_column().has_value());
  EXPECT_EQ(ds.extra_columns(), (std::vector<std::string>{"mode", "RadNum"}));
  EXPECT_FALSE(ds.at("a").label.has_value());
}

TEST(CsvRead, ByteOrderMarkAndCrlf) {
  const auto ds = read("\xEF\xBB\xBFtraj_id,DateTime,lat,lon\r\nx,2020-01-01 00:00:00,1,2\r\nx,2020-01-01 00:00:05,1,2.001\r\n");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds.at("x").points.size(), 2u);
}

TEST(CsvRead, Errors) {
  EXPECT_EQ(code_of([] { read("traj_id,DateTime,lat\n"); }), ErrorCode::MissingColumn);
  EXPECT_EQ(code_of([] { read(kSmall, "vehicle"); }), ErrorCode::MissingColumn);
  EXPECT_EQ(code_of([] { read(""); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read("traj_id,DateTime,lat,lon\na,yesterday,1,2\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read("traj_id,DateTime,lat,lon\na,2020-01-01 00:00:00,north,2\n"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read("traj_id,DateTime,lat,lon\na,2020-01-01 00:00:00,1\n"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] {
              read("traj_id,DateTime,lat,lon,m\na,2020-01-01 00:00:00,1,2,x\na,2020-01-01 00:00:01,1,2,y\n",
                   "m");
            }),
            ErrorCode::InconsistentLabel);
  EXPECT_EQ(code_of([] { read("traj_id,DateTime,lat,lon\na,2020-01-01 00:00:00,1,2\n"); }),
            ErrorCode::TooFewPoints);
  EXPECT_EQ(code_of([] {
              read("traj_id,DateTime,lat,lon\na,2020-01-01 00:00:00,1,2\na,2020-01-01 00:00:00,1,3\n");
            }),
            ErrorCode::DuplicateTimestamp);
  EXPECT_EQ(code_of([] {
              read("traj_id,DateTime,lat,lon\na,2020-01-01 00:00:00,91,2\na,2020-01-01 00:00:01,1,3\n");
            }),
            ErrorCode::InvalidCoordinate);
  EXPECT_EQ(code_of([] { load_csv("/nonexistent/file.csv", std::nullopt); }), ErrorCode::IoError);
}

TEST(CsvWrite, FixedLayout) {
  const auto ds = read(kSmall, "mode");
  EXPECT_EQ(write(ds),
            "traj_id,DateTime,lat,lon,mode,RadNum\n"
            "a,2020-01-01 00:00:00,45.000000000,-118.000000000,bike,1\n"
            "a,2020-01-01 00:00:01,45.000000000,-118.050000000,bike,3\n"
            "a,2020-01-01 00:00:02,45.000000000,-118.100000000,bike,2\n"
            "b,2020-01-01 00:00:00,45.100000000,-118.100000000,car,6\n"
            "b,2020-01-01 00:00:01,45.100000000,-118.200000000,car,7\n");
}

TEST(CsvWrite, RoundTripIsStable) {
  std::mt19937_64 rng(11);
  const auto ds = testing::class_dataset(rng, {6, 4});
  const std::string first = write(ds);
  const auto reread = read(first, "vehicle_type");
  ASSERT_EQ(reread.size(), ds.size());
  for (const auto& [id, t] : ds) {
    const auto& r = reread.at(id);
    ASSERT_EQ(r.points.size(), t.points.size());
    EXPECT_EQ(r.label, t.label);
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      EXPECT_EQ(r.points[i].time, t.points[i].time);
      EXPECT_LE(std::fabs(static_cast<double>(r.points[i].position.lat - t.points[i].position.lat)), 5.1e-10);
      EXPECT_LE(std::fabs(static_cast<double>(r.points[i].position.lon - t.points[i].position.lon)), 5.1e-10);
      EXPECT_EQ(r.points[i].extras, t.points[i].extras);
    }
  }
  EXPECT_EQ(write(reread), first);
}

TEST(CsvWrite, SyntheticCopiesFollowOriginal) {
  TrajectoryDataset ds;
  for (std::string id : {"a", "a#aug10", "a#aug2", "a#aug1", "a0", "b", "a#aug2#aug1"}) {
    auto t = testing::straight_trajectory(id, 2, 5.0, 1.0);
    ds.insert(std::move(t));
  }
  EXPECT_EQ(output_order(ds),
            (std::vector<std::string>{"a", "a#aug1", "a#aug2", "a#aug2#aug1", "a#aug10", "a0", "b"}));
}

TEST(CsvWrite, QuotesSpecialFields) {
  TrajectoryDataset ds(std::string("kind"));
  auto t = testing::straight_trajectory("id,1", 2, 5.0, 1.0, {45.0L, -118.5L}, 90.0, "x\"y");
  ds.insert(std::move(t));
  const auto text = write(ds);
  EXPECT_NE(text.find("\"id,1\""), std::string::npos);
  EXPECT_NE(text.find("\"x\"\"y\""), std::string::npos);
  EXPECT_EQ(read(text, "kind").at("id,1").label, "x\"y");
}

TEST(FeaturesCsv, HeaderAndShape) {
  const auto ds = testing::speed_regime_dataset(2);
  const auto rows = dataset_features(ds);
  std::ostringstream out;
  write_features_csv(rows, true, out);
  std::istringstream in(out.str());
  std::vector<std::string> fields;
  ASSERT_TRUE(read_csv_record(in, fields));
  ASSERT_EQ(fields.size(), 47u);
  EXPECT_EQ(fields[0], "traj_id");
  EXPECT_EQ(fields[1], "label");
  EXPECT_EQ(fields[2], "10%_Distance");
  EXPECT_EQ(fields[46], "std_Jerk");
  std::size_t lines = 0;
  while (read_csv_record(in, fields)) {
    EXPECT_EQ(fields.size(), 47u);
    ++lines;
  }
  EXPECT_EQ(lines, 4u);
}

TEST(Candidates, RoundTrip) {
  CandidateSet set;
  set.traj_ids = {"a", "b", "c d"};
  std::ostringstream out;
  write_candidates(set, out);
  std::istringstream in(out.str());
  EXPECT_EQ(read_candidates(in), set.traj_ids);
}

}  // namespace
}  // namespace trajaug
