#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + DUDELAB_CLI_PATH + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) r.output += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  static fs::path dir() {
    static const fs::path d = [] {
      fs::path p = fs::temp_directory_path() / "dudelab_cli_test";
      fs::remove_all(p);
      fs::create_directories(p);
      return p;
    }();
    return d;
  }

  static std::string write_config(const std::string& name, const std::string& body) {
    const fs::path p = dir() / name;
    std::ofstream out(p);
    out << body;
    out.close();
    return p.string();
  }

  static std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
};

TEST_F(CliTest, AnalyticPrintsTheClosedFormMetrics) {
  const std::string cfg = write_config("base.json", "{}");
  const RunResult r = run_cli("analytic --config " + cfg);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("association probabilities"), std::string::npos);
  EXPECT_NE(r.output.find("0.317014"), std::string::npos);
  EXPECT_NE(r.output.find("0.527021"), std::string::npos);
  EXPECT_NE(r.output.find("coupled baseline"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitWithCode2) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("analytic").exit_code, 2);                  // missing --config
  EXPECT_EQ(run_cli("analytic --config /does/not/exist.json").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);                // unknown subcommand
  EXPECT_EQ(run_cli("figures --id 7").exit_code, 2);            // id out of range
  const std::string bad = write_config("bad_key.json", R"({"lambda": 2})");
  const RunResult r = run_cli("analytic --config " + bad);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("unknown key"), std::string::npos);
  const std::string cond =
      write_config("cond.json", R"({"q_m_dbm": 20, "q_s_dbm": -20})");
  const RunResult rc = run_cli("analytic --config " + cond);
  EXPECT_EQ(rc.exit_code, 2);
  EXPECT_NE(rc.output.find("ConditionOne"), std::string::npos);
}

TEST_F(CliTest, SimulateWritesDeterministicCsv) {
  const std::string cfg = write_config("sim.json", "{}");
  const fs::path out_a = dir() / "sim_a";
  const fs::path out_b = dir() / "sim_b";
  const std::string base = "simulate --config " + cfg + " --drops 2000 --seed 99 --out ";
  EXPECT_EQ(run_cli(base + out_a.string(), "DUDE_LAB_THREADS=1").exit_code, 0);
  EXPECT_EQ(run_cli(base + out_b.string(), "DUDE_LAB_THREADS=3").exit_code, 0);
  const std::string a = read_file(out_a / "simulate.csv");
  const std::string b = read_file(out_b / "simulate.csv");
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  // Re-running into the same directory reproduces the same bytes.
  EXPECT_EQ(run_cli(base + out_a.string(), "DUDE_LAB_THREADS=2").exit_code, 0);
  EXPECT_EQ(read_file(out_a / "simulate.csv"), a);
  EXPECT_EQ(a.substr(0, a.find('\n')),
            "sweep_key,sweep_value,scenario,pr_case1,pr_case2,pr_case3,pr_case4,"
            "se_case1,se_case2,se_case4,se_avg,ee_case1,ee_case2,ee_case4,ee_avg,"
            "mc_se_avg,mc_se_stderr,mc_pr_case1,mc_pr_case2,mc_pr_case4,flags");
}

TEST_F(CliTest, SweepEmitsCsvAndCharts) {
  const std::string cfg = write_config("sweep.json", R"({
    "sweep": {"key": "q_ratio_db", "grid": [-10, -5, 0, 5, 10],
              "scenarios": ["coupled", "decoupled", "decoupled_pa"]}
  })");
  const fs::path out = dir() / "sweep_out";
  const RunResult r = run_cli("sweep --config " + cfg + " --svg --out " + out.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  const std::string csv = read_file(out / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 15);
  for (const char* name : {"sweep_probabilities.svg", "sweep_se.svg", "sweep_ee.svg"}) {
    const std::string svg = read_file(out / name);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u) << name;
    EXPECT_NE(svg.find("</svg>"), std::string::npos) << name;
  }
  const fs::path out2 = dir() / "sweep_out2";
  EXPECT_EQ(run_cli("sweep --config " + cfg + " --svg --out " + out2.string()).exit_code, 0);
  EXPECT_EQ(read_file(out2 / "sweep.csv"), csv);
  EXPECT_EQ(read_file(out2 / "sweep_se.svg"), read_file(out / "sweep_se.svg"));

  const std::string no_sweep = write_config("nosweep.json", "{}");
  EXPECT_EQ(run_cli("sweep --config " + no_sweep).exit_code, 2);
}

TEST_F(CliTest, FiguresRegenerateBundledDatasets) {
  const fs::path out = dir() / "figs";
  const RunResult r = run_cli("figures --id 3 --out " + out.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  const std::string csv = read_file(out / "figure3.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 32);
  EXPECT_NE(csv.find("q_ratio_db"), std::string::npos);
}

TEST_F(CliTest, ValidatePassesConsistentAndFailsLegacy) {
  const std::string cfg = write_config("val.json", "{}");
  const std::string base = "validate --config " + cfg + " --drops 10000 --seed 4 ";
  const RunResult ok = run_cli(base + "--variant consistent");
  EXPECT_EQ(ok.exit_code, 0) << ok.output;
  EXPECT_NE(ok.output.find("PASS pr_case1"), std::string::npos);
  EXPECT_EQ(ok.output.find("FAIL"), std::string::npos);
  const RunResult bad = run_cli(base + "--variant paper");
  EXPECT_EQ(bad.exit_code, 4) << bad.output;
  EXPECT_NE(bad.output.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, IoFailuresExitWithCode3) {
  const std::string cfg = write_config("io.json", "{}");
  const fs::path blocker = dir() / "blocker";
  std::ofstream(blocker) << "file";  // a file where a directory is needed
  const RunResult r =
      run_cli("analytic --config " + cfg + " --out " + (blocker / "sub").string());
  EXPECT_EQ(r.exit_code, 3);
}

}  // namespace
