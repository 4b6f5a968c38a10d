#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>
#include <sys/wait.h>

#include <rectihull/rectihull.hpp>

using namespace rectihull;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RECTIHULL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rectihull_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

PointSet parse(const std::string& text) {
  std::istringstream in(text);
  return read_points(in);
}

}  // namespace

TEST_F(Cli, GenEmptyBox) {
  auto r = run("gen uniform-box --n 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, GenRoundTripIsBitwise) {
  ASSERT_EQ(run("gen uniform-box --n 300 --seed 7 --out " + path("p.txt")).code, 0);
  std::ifstream in(path("p.txt"));
  auto P = read_points(in);
  auto Q = uniform_box(300, 7);
  ASSERT_EQ(P.size(), Q.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    EXPECT_EQ(P[i].x, Q[i].x);
    EXPECT_EQ(P[i].y, Q[i].y);
    EXPECT_EQ(P[i].z, Q[i].z);
  }
  auto json = run("gen uniform-box --n 300 --seed 7 --format json");
  auto R = parse(json.out);
  ASSERT_EQ(R.size(), 300u);
  EXPECT_EQ(R[299].z, Q[299].z);
}

TEST_F(Cli, VerticesOfTwoPoints) {
  const auto f = write("two.txt", "0 0 0\n1 1 1\n");
  auto r = run("vertices " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n1\n");
}

TEST_F(Cli, VerifyMaximaReportsNoMismatch) {
  auto r = run("verify --what maxima --n 200 --seeds 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 mismatches"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyOtherSubjects) {
  for (const char* what : {"vertices", "slice", "intervals", "rotation", "layers"}) {
    auto r = run(std::string("verify --what ") + what + " --n 60 --seeds 3");
    EXPECT_EQ(r.code, 0) << what;
    EXPECT_NE(r.out.find(" 0 mismatches"), std::string::npos) << r.out;
  }
}

TEST_F(Cli, SliceOfBoxCornersIsOneSquare) {
  ASSERT_EQ(run("gen box-corners --seed 3 --out " + path("box.txt")).code, 0);
  auto r = run("slice " + path("box.txt") + " --z 0.0 --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_NEAR(j[0]["area"].get<double>(), 4.0, 0.02);
}

TEST_F(Cli, TorusHullHasEulerZero) {
  ASSERT_EQ(run("gen torus-cubes --seed 2 --out " + path("t.txt")).code, 0);
  auto r = run("hull " + path("t.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("euler 0\n"), std::string::npos) << r.out;
  auto off = run("hull " + path("t.txt") + " --format off --triangulate");
  EXPECT_EQ(off.out.rfind("OFF\n", 0), 0u);
  auto ev = run("hull " + path("t.txt") + " --events-only --format json");
  EXPECT_TRUE(nlohmann::json::accept(ev.out));
}

TEST_F(Cli, CylinderPointsAreVerticesAndWindowIsReported) {
  auto r = run("gen cylinder-geodesic --n 32 --report-window --out " + path("c.txt"));
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path("c.txt"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("# window ", 0), 0u);
  auto v = run("vertices " + path("c.txt"));
  std::istringstream ids(v.out);
  std::vector<PointId> got;
  for (PointId id; ids >> id;) got.push_back(id);
  for (PointId id = 0; id < 32; ++id) EXPECT_TRUE(std::binary_search(got.begin(), got.end(), id)) << id;
  EXPECT_EQ(run("gen uniform-box --n 5 --report-window").code, 1);
}

TEST_F(Cli, ErrorsExitWithOne) {
  EXPECT_EQ(run("maxima --bogus").code, 1);
  EXPECT_EQ(run("vertices " + path("missing.txt")).code, 1);
  const auto bad = write("bad.txt", "0 0 0\n0 1 1\n");
  EXPECT_EQ(run("vertices " + bad).code, 1);
  EXPECT_EQ(run("vertices " + bad + " --perturb 1e-6").code, 0);
  EXPECT_EQ(run("vertices " + write("junk.txt", "1 2 x\n")).code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST_F(Cli, CommandsAreDeterministic) {
  ASSERT_EQ(run("gen sphere-surface --n 80 --seed 5 --out " + path("s.txt")).code, 0);
  for (const char* cmd : {"intervals", "layers", "maxima", "active --theta 0.3", "intervals --format csv"}) {
    auto a = run(std::string(cmd) + " " + path("s.txt"));
    auto b = run(std::string(cmd) + " " + path("s.txt"));
    EXPECT_EQ(a.code, 0) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_FALSE(a.out.empty()) << cmd;
  }
}

TEST_F(Cli, ActiveAtZeroEqualsVertices) {
  ASSERT_EQ(run("gen uniform-box --n 100 --seed 4 --out " + path("u.txt")).code, 0);
  EXPECT_EQ(run("active " + path("u.txt") + " --theta 1e-6").out, run("vertices " + path("u.txt")).out);
}

TEST_F(Cli, BenchSingleSize) {
  auto r = run("bench maxima --sizes 1024 --seeds 1");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "subject,n,median_seconds,ratio");
  EXPECT_EQ(row.rfind("maxima,1024,", 0), 0u);
  EXPECT_FALSE(std::getline(in, extra));
}

TEST_F(Cli, ExportFormats) {
  ASSERT_EQ(run("gen box-corners --out " + path("b.txt")).code, 0);
  EXPECT_EQ(run("export " + path("b.txt") + " --what mesh --format off").out.rfind("OFF", 0), 0u);
  for (const char* what : {"mesh", "events", "slice", "intervals"}) {
    auto r = run("export " + path("b.txt") + " --what " + what);
    EXPECT_EQ(r.code, 0) << what;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << what;
  }
  EXPECT_EQ(parse(run("export " + path("b.txt") + " --what points --format json").out).size(), 8u);
}
