#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"
#include "trajaug/csv.hpp"
#include "trajaug/modification.hpp"

namespace trajaug {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trajaug_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_dataset(const std::string& name, const TrajectoryDataset& ds) const {
    write_csv(ds, path(name));
    return path(name);
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "trajaug");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, AugmentAddsCopiesPerCandidate) {
  std::mt19937_64 rng(1);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {17, 16}));
  ASSERT_EQ(run({"augment", input, "-o", path("out.csv"), "--seed", "42"}), cli::kExitOk) << err_.str();
  const auto ds = load_csv(path("out.csv"), std::nullopt);
  EXPECT_EQ(ds.size(), 33u + 3u * 6u);
  std::size_t synthetic = 0;
  for (const auto& [id, t] : ds) synthetic += parse_synthetic_id(id).has_value();
  EXPECT_EQ(synthetic, 18u);
}

TEST_F(CliTest, AugmentWritesToStdoutAndIsReproducible) {
  std::mt19937_64 rng(2);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {10}));
  const std::vector<std::string> args{"augment", input, "--select-strategy", "fewest", "--modify", "stretch",
                                      "--stretch-mode", "max", "--seed", "3"};
  ASSERT_EQ(run(args), cli::kExitOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(run(args), cli::kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_NE(first.find("#aug3"), std::string::npos);
}

TEST_F(CliTest, AugmentFromCandidateFile) {
  std::mt19937_64 rng(3);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {8}));
  ASSERT_EQ(run({"select", input, "--strategy", "representative", "-o", path("cands.txt")}), cli::kExitOk)
      << err_.str();
  std::ifstream cands(path("cands.txt"));
  const auto ids = read_candidates(cands);
  ASSERT_FALSE(ids.empty());
  ASSERT_EQ(run({"augment", input, "--candidates", path("cands.txt"), "--copies", "2", "--modify", "drop",
                 "-o", path("out.csv")}),
            cli::kExitOk)
      << err_.str();
  const auto ds = load_csv(path("out.csv"), std::nullopt);
  EXPECT_EQ(ds.size(), 8u + 2u * ids.size());
  for (const auto& id : ids) EXPECT_TRUE(ds.contains(id + "#aug2"));
}

TEST_F(CliTest, BalanceWorkedExample) {
  std::mt19937_64 rng(4);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {50, 100, 75}));
  ASSERT_EQ(run({"balance", input, "--label-column", "vehicle_type", "--multiplier", "1.1", "--modify", "in-circle",
                 "-o", path("out.csv")}),
            cli::kExitOk)
      << err_.str();
  const auto ds = load_csv(path("out.csv"), std::string("vehicle_type"));
  EXPECT_EQ(ds.size(), 330u);
  for (const auto& [label, ids] : ds.ids_by_label()) EXPECT_EQ(ids.size(), 110u) << label;
}

TEST_F(CliTest, FeaturesTable) {
  const auto input = write_dataset("in.csv", testing::speed_regime_dataset(3));
  ASSERT_EQ(run({"features", input, "--label-column", "vehicle_type"}), cli::kExitOk) << err_.str();
  std::istringstream in(out_.str());
  std::string header;
  std::getline(in, header);
  EXPECT_TRUE(header.starts_with("traj_id,label,10%_Distance,"));
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 6u);
}

TEST_F(CliTest, EvaluateTwentySeeds) {
  std::mt19937_64 rng(5);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {10, 10}, 5, 12));
  ASSERT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seeds", "20", "-o", path("r1.csv")}),
            cli::kExitOk)
      << err_.str();
  const std::string first = slurp(path("r1.csv"));
  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "seed,strategy,model,accuracy,f1_score");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 420u);
  ASSERT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seeds", "20", "--workers", "3", "-o",
                 path("r2.csv")}),
            cli::kExitOk);
  EXPECT_EQ(slurp(path("r2.csv")), first);
}

TEST_F(CliTest, EvaluateSeedList) {
  std::mt19937_64 rng(6);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {6, 6}, 5, 10));
  ASSERT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seed-list", "7,8"}), cli::kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("\n7,base,"), std::string::npos);
  EXPECT_NE(out_.str().find("\n8,balanced-drop,"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  std::mt19937_64 rng(7);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {5, 1}));
  EXPECT_EQ(run({}), cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  EXPECT_EQ(run({"--help"}), cli::kExitOk);
  EXPECT_EQ(run({"balance", input}), cli::kExitUsage);
  EXPECT_EQ(run({"augment", input, "--modify", "sideways"}), cli::kExitUsage);
  EXPECT_EQ(run({"evaluate", input, "--label-column", "vehicle_type"}), cli::kExitUsage);
  EXPECT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seeds", "2", "--seed-list", "1"}),
            cli::kExitUsage);
  EXPECT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seeds", "2"}), cli::kExitData);
  EXPECT_NE(err_.str().find("ClassTooSmall"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"evaluate", input, "--label-column", "vehicle_type", "--seeds", "1001"}), cli::kExitUsage);
  EXPECT_EQ(run({"balance", input, "--label-column", "vehicle_type", "--multiplier", "0.9"}), cli::kExitData);
  EXPECT_EQ(run({"features", path("missing.csv")}), cli::kExitData);
  EXPECT_EQ(run({"features", input, "--label-column", "nope"}), cli::kExitData);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsWin) {
  std::mt19937_64 rng(8);
  const auto input = write_dataset("in.csv", testing::class_dataset(rng, {20}));
  {
    std::ofstream cfg(path("cfg.ini"));
    cfg << "# defaults\ncopies = 5\nproportion=0.1\n\nseed=9\n";
  }
  ASSERT_EQ(run({"augment", input, "--config", path("cfg.ini"), "-o", path("a.csv")}), cli::kExitOk)
      << err_.str();
  EXPECT_EQ(load_csv(path("a.csv"), std::nullopt).size(), 20u + 5u * 2u);
  ASSERT_EQ(run({"--config", path("cfg.ini"), "augment", input, "--copies", "1", "-o", path("b.csv")}),
            cli::kExitOk)
      << err_.str();
  EXPECT_EQ(load_csv(path("b.csv"), std::nullopt).size(), 20u + 1u * 2u);
  {
    std::ofstream bad(path("bad.ini"));
    bad << "no equals sign\n";
  }
  EXPECT_EQ(run({"augment", input, "--config", path("bad.ini")}), cli::kExitUsage);
  EXPECT_EQ(run({"augment", input, "--config", path("absent.ini")}), cli::kExitUsage);
}

TEST(ParseConfig, SkipsCommentsAndTrims) {
  std::istringstream in("# c\n  a = 1 \n\nb=two words\n");
  const auto m = cli::parse_config(in);
  EXPECT_EQ(m.at("a"), "1");
  EXPECT_EQ(m.at("b"), "two words");
  EXPECT_EQ(m.size(), 2u);
}

}  // namespace
}  // namespace trajaug
