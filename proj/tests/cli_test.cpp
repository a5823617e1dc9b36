#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "geocover/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli() { return GEOCOVER_CLI; }
std::string sample(const std::string& name) { return std::string(GEOCOVER_SAMPLES) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "geocover_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = "\"" + cli() + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, LensWithGreedySolver) {
  const auto out = scratch("lens.json");
  ASSERT_EQ(run("discretize --points " + sample("lens_points.json") + " --shape " + sample("unit_disk.json") +
                " --solver greedy --out " + out.string()),
            0);
  const auto j = geocover::Json::parse(slurp(out));
  ASSERT_EQ(j["translates"].size(), 1u);
  EXPECT_EQ(j["translates"][0]["covered"], geocover::Json::parse("[0, 1]"));
  EXPECT_EQ(j["solution"]["cardinality"], 1);
}

TEST(Cli, ChainWithExactSolver) {
  const auto out = scratch("chain.json");
  ASSERT_EQ(run("discretize --points " + sample("chain_points.csv") + " --shape " + sample("unit_disk.json") +
                " --solver exact --out " + out.string()),
            0);
  const auto j = geocover::Json::parse(slurp(out));
  ASSERT_EQ(j["translates"].size(), 2u);
  EXPECT_EQ(j["translates"][0]["covered"], geocover::Json::parse("[0, 1]"));
  EXPECT_EQ(j["translates"][1]["covered"], geocover::Json::parse("[1, 2]"));
  EXPECT_EQ(j["solution"]["cardinality"], 2);
  EXPECT_EQ(j["solution"]["solver"], "exact");
}

TEST(Cli, MalformedShapeExitsTwoWithoutOutput) {
  const auto out = scratch("bad.json");
  EXPECT_EQ(run("discretize --points " + sample("lens_points.json") + " --shape " + sample("malformed_shape.json") +
                " --out " + out.string()),
            2);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("discretize --points x.json"), 2);
  EXPECT_EQ(run("discretize --points a --shape b --out c --algorithm fastest"), 2);
}

TEST(Cli, OracleCapExitsFour) {
  const auto pts = scratch("many.json");
  {
    std::ofstream f(pts);
    f << "{\"points\": [";
    for (int i = 0; i < 40; ++i) f << (i ? "," : "") << "[" << (i % 7) * 0.37 << "," << (i / 7) * 0.41 << "]";
    f << "]}";
  }
  const auto out = scratch("many_out.json");
  EXPECT_EQ(run("discretize --points " + pts.string() + " --shape " + sample("unit_disk.json") +
                " --algorithm oracle --out " + out.string()),
            4);
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, RerunsAreByteIdentical) {
  for (const char* shape : {"unit_disk.json", "ellipse.json", "unit_square.json", "l_shape.json"}) {
    const auto a = scratch("a.json"), b = scratch("b.json");
    const auto sa = scratch("a.svg"), sb = scratch("b.svg");
    const std::string common =
        "discretize --points " + sample("cluster_points.json") + " --shape " + sample(shape) + " --seed 9";
    ASSERT_EQ(run(common + " --out " + a.string() + " --svg " + sa.string()), 0) << shape;
    ASSERT_EQ(run(common + " --out " + b.string() + " --svg " + sb.string()), 0) << shape;
    EXPECT_EQ(slurp(a), slurp(b)) << shape;
    EXPECT_EQ(slurp(sa), slurp(sb)) << shape;
    EXPECT_FALSE(slurp(sa).empty());
  }
}

TEST(Cli, Selfcheck) { EXPECT_EQ(run("selfcheck"), 0); }
