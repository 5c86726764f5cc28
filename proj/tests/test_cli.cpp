#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AUH_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("auh_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BoundsCsv) {
  const auto r = run("bounds --n-max 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,l_max_exact,l_max,h_max");
  EXPECT_NE(r.out.find("3,5/3,"), std::string::npos);
}

TEST_F(Cli, BoundsRejectsSmallNMax) { EXPECT_EQ(run("bounds --n-max 1").code, 2); }

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("bounds --n-max 3 --format xml").code, 2);
  EXPECT_EQ(run("family --kind zipf --n 4").code, 2);
  EXPECT_EQ(run("family --kind epsilon --n 4 --eps 0.9").code, 2);
  EXPECT_EQ(run("metrics --dist /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, FamilyThenMetrics) {
  ASSERT_EQ(run("family --kind fibonacci --n 4 --out " + path("f4.json")).code, 0);
  EXPECT_EQ(slurp(path("f4.json")), "{\"probs\":[\"2/5\",\"1/5\",\"1/5\",\"1/5\"]}\n");
  const auto r = run("metrics --dist " + path("f4.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["L_exact"], "2/1");
  EXPECT_NEAR(j["H"].get<double>(), 1.921928, 1e-6);
  EXPECT_NEAR(j["R"].get<double>(), 0.078072, 1e-6);
  EXPECT_EQ(j["auh"], true);
  const auto csv = run("metrics --format csv --dist " + path("f4.json"));
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,L_exact,L,H,R,auh");
}

TEST_F(Cli, FamilyParameters) {
  const auto r = run("family --kind epsilon --n 4 --eps 1/2");
  EXPECT_EQ(r.out, "{\"probs\":[\"1/2\",\"1/4\",\"1/8\",\"1/8\"]}\n");
  const auto p = run("family --kind poisson_tail --n 5 --lambda 2");
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(p.out)["probs"][0].is_number());
  EXPECT_EQ(run("family --kind geometric_tail --n 4 --q 0.5").out,
            "{\"probs\":[\"1/2\",\"1/4\",\"1/8\",\"1/8\"]}\n");
}

TEST_F(Cli, GridSearch) {
  const auto r = run("search --n 3 --grid 9 --objective length");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["best_value_exact"], "5/3");
  EXPECT_EQ(j["gap_exact"], "0/1");
}

TEST_F(Cli, EntropySearchAboveBoundExitsOne) {
  const auto r = run("search --n 4 --grid 20 --objective entropy");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["within_bound"], false);
}

TEST_F(Cli, AscentSearchIsDeterministic) {
  const auto a = run("search --n 5 --seed 3");
  const auto b = run("search --n 5 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["method"], "ascent");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_LT(std::abs(j["gap"].get<double>()), 1e-6);
}

TEST_F(Cli, EncodeDecodeRoundTrip) {
  std::mt19937 rng(1);
  std::string data(5000, '\0');
  for (auto& c : data) c = static_cast<char>(rng() % 16);
  {
    std::ofstream out(path("in.bin"), std::ios::binary);
    out << data;
  }
  ASSERT_EQ(run("encode --n 16 --in " + path("in.bin") + " --out " + path("enc.bin")).code, 0);
  ASSERT_EQ(run("decode --n 16 --in " + path("enc.bin") + " --out " + path("dec.bin")).code, 0);
  EXPECT_EQ(slurp(path("dec.bin")), data);
  ASSERT_EQ(run("encode --n 16 --in " + path("in.bin") + " --out " + path("enc2.bin")).code, 0);
  EXPECT_EQ(slurp(path("enc.bin")), slurp(path("enc2.bin")));
}

TEST_F(Cli, EncodeWithDistributionFile) {
  ASSERT_EQ(run("family --kind dyadic --n 3 --out " + path("d.json")).code, 0);
  {
    std::ofstream out(path("in.bin"), std::ios::binary);
    out << std::string("\x00\x01\x02\x00", 4);
  }
  ASSERT_EQ(run("encode --dist " + path("d.json") + " --in " + path("in.bin") + " --out " + path("e.bin")).code, 0);
  const auto enc = slurp(path("e.bin"));
  ASSERT_EQ(enc.size(), 9U);
  EXPECT_EQ(static_cast<unsigned char>(enc[8]), 0b01011000);  // 0 10 11 0
  {
    std::ofstream out(path("bad.bin"), std::ios::binary);
    out << std::string("\x03", 1);
  }
  EXPECT_EQ(run("encode --n 3 --in " + path("bad.bin")).code, 2);
}

TEST_F(Cli, VerifyPassesAtThreeSymbols) {
  const auto r = run("verify --n 3..3 --trials 50");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS length_bound.attainment"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
}

TEST_F(Cli, VerifyReportsEntropyFailureAtFourSymbols) {
  const auto r = run("verify --n 4 --trials 50");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL entropy_bound.extremality"), std::string::npos);
  EXPECT_NE(r.out.find("PASS length_bound.extremality"), std::string::npos);
  EXPECT_EQ(run("verify --n 5..3").code, 2);
}
