// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string output;
};

Outcome run_cli(const std::string& args) {
  const std::string command = std::string(COSFDAF_CLI_PATH) + " " + args + " 2>&1";
  Outcome out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out.output += buf;
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "cosfdaf_cli_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, ComplexityPrintsBothCounts) {
  const Outcome r = run_cli("complexity --M 32");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.output.find("4292"), std::string::npos);
  EXPECT_NE(r.output.find("4961"), std::string::npos);
}

TEST(Cli, RunWritesCsvAndJson) {
  const fs::path cfg = write_config("ok.cfg",
                                    "M = 8\niterations = 800\ntrials = 2\n"
                                    "algorithms = fdaf_fast, cosfdaf\nmu_a = 100\n");
  const fs::path out = fs::temp_directory_path() / "cosfdaf_cli_test" / "ok";
  fs::remove_all(out);
  const Outcome r = run_cli("run --config " + cfg.string() + " --out " + out.string());
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_TRUE(fs::exists(out / "report.csv"));
  EXPECT_TRUE(fs::exists(out / "summary.json"));
}

TEST(Cli, ConfigErrorExitsTwo) {
  const fs::path cfg = write_config("bad.cfg", "M = 12\n");
  const Outcome r = run_cli("run --config " + cfg.string() + " --out /tmp/cosfdaf_cli_bad");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.output.find("M"), std::string::npos);
  EXPECT_EQ(run_cli("run --config /nonexistent.cfg --out /tmp/x").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
}

TEST(Cli, DivergenceExitsThree) {
  const fs::path cfg = write_config("div.cfg",
                                    "M = 32\niterations = 9600\ntrials = 1\n"
                                    "algorithms = cvslms\nmu1 = 0.1\nmu2 = 0.01\n");
  const Outcome r = run_cli("run --config " + cfg.string() + " --out /tmp/cosfdaf_cli_div");
  EXPECT_EQ(r.code, 3) << r.output;
  EXPECT_NE(r.output.find("cvslms"), std::string::npos);
}

TEST(Cli, ScalarKernelsSelectable) {
  const fs::path cfg = write_config("k.cfg",
                                    "M = 8\niterations = 800\ntrials = 1\n"
                                    "algorithms = cosfdaf\nmu_a = 100\n");
  const Outcome r = run_cli("--kernels scalar run --config " + cfg.string() +
                            " --out /tmp/cosfdaf_cli_k");
  EXPECT_EQ(r.code, 0) << r.output;
}

}  // namespace
