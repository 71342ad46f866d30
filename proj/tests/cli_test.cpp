// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gtest/gtest.h"

namespace picard::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Result spawn(const std::string& args) {
  const std::string cmd = std::string(PICARD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

TEST(CliTest, ComputeJson) {
  auto r = invoke({"compute", "--g", "3", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"g\":3,\"members\":[1,2,3,4,5,6,9]}\n");
  r = invoke({"compute", "--g", "4", "--format", "json"});
  EXPECT_EQ(r.out, "{\"g\":4,\"members\":[1,2,3,4,5,6,7,8,10,16]}\n");
}

TEST(CliTest, ComputeCsvAndText) {
  EXPECT_EQ(invoke({"compute", "--g", "1", "--format", "csv"}).out, "rho\n1\n");
  EXPECT_EQ(invoke({"compute", "--g", "3"}).out, "{1, ..., 6, 9}\n");
}

TEST(CliTest, Gaps) {
  const auto r = invoke({"gaps", "--g", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "9-9\n11-15\n");
}

TEST(CliTest, Certificate) {
  auto r = invoke({"cert", "--g", "3", "--rho", "9"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"g\":3,\"rho\":9,\"blocks\":[{\"m\":1,\"k\":3,\"kind\":\"IV\",\"param\":1,\"rho\":9}]}\n");
  r = invoke({"cert", "--g", "4", "--rho", "11"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "UNREALIZABLE\n");
  r = invoke({"cert", "--g", "7", "--rho", "28", "--all-shapes"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"shapes\""), std::string::npos);
  EXPECT_EQ(invoke({"cert", "--g", "3", "--rho", "10"}).code, kUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"compute"}).code, kUsage);
  EXPECT_EQ(invoke({"compute", "--g", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"compute", "--g", "x"}).code, kUsage);
  EXPECT_EQ(invoke({"compute", "--g", "3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"density", "--g-min", "5", "--g-max", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"distribution", "--g", "3", "--ell", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"distribution", "--g", "10", "--ell", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CliTest, ResourceCap) {
  ::setenv("PICARD_G_CAP", "5", 1);
  const auto r = invoke({"compute", "--g", "6"});
  const auto ok = invoke({"compute", "--g", "5"});
  ::unsetenv("PICARD_G_CAP");
  EXPECT_EQ(r.code, kResourceCap);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(ok.code, kOk);
}

TEST(CliTest, DensityToFile) {
  const auto path = std::filesystem::temp_directory_path() / "picard_cli_density.csv";
  const auto r = invoke({"density", "--g-min", "1", "--g-max", "4", "--out", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "wrote 4 row(s) to " + path.string() + "\n");
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(body.str(), "g,count,g_squared,density_num,density_den\n1,1,1,1,1\n2,4,4,1,1\n3,7,9,7,9\n4,10,16,5,8\n");
  std::filesystem::remove(path);
}

TEST(CliTest, DensityToStdout) {
  const auto csv = invoke({"density", "--g-min", "3", "--g-max", "3", "--format", "csv"});
  EXPECT_EQ(csv.out, "g,count,g_squared,density_num,density_den\n3,7,9,7,9\n");
  const auto text = invoke({"density", "--g-min", "3", "--g-max", "3"});
  EXPECT_NE(text.out.find("0.777778"), std::string::npos);
}

TEST(CliTest, Verify) {
  const auto r = invoke({"verify", "--g-max", "10"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_NE(r.out.find("g=3\tgap-1\tN/A"), std::string::npos);
  EXPECT_NE(r.out.find("g=10\tdistribution\tPASS"), std::string::npos);
  EXPECT_NE(r.out.find("g=7\ttwo-shapes\tFAIL"), std::string::npos);
  EXPECT_NE(r.out.find(" 3 failed\n"), std::string::npos);
  EXPECT_NE(r.out.find("summary\t"), std::string::npos);
  const auto trivial = invoke({"verify", "--g-max", "1"});
  EXPECT_EQ(trivial.code, kOk);
}

TEST(CliTest, Distribution) {
  const auto r = invoke({"distribution", "--g", "10", "--ell", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, 5), "true\n");
}

TEST(CliTest, ThreadCountDoesNotChangeOutput) {
  for (const std::string g : {"17", "64"}) {
    const auto one = invoke({"--threads", "1", "compute", "--g", g, "--format", "json"});
    const auto four = invoke({"--threads", "4", "compute", "--g", g, "--format", "json"});
    EXPECT_EQ(one.out, four.out);
  }
  EXPECT_EQ(invoke({"--threads", "0", "compute", "--g", "3"}).code, kUsage);
}

TEST(CliProcessTest, ExitCodesAndOutput) {
  auto r = spawn("compute --g 3 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"g\":3,\"members\":[1,2,3,4,5,6,9]}\n");
  EXPECT_EQ(spawn("cert --g 4 --rho 11").code, 1);
  EXPECT_EQ(spawn("compute --g -2").code, 2);
  EXPECT_EQ(spawn("gaps --g 4").out, "9-9\n11-15\n");
  EXPECT_EQ(spawn("compute --g 5000").code, 3);
}

}  // namespace
}  // namespace picard::cli
