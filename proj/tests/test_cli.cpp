#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  std::string out;
  int status = -1;
};

// Runs the CLI with plain output; stderr is discarded.
CliRun cli(const std::string& args) {
  const std::string cmd = "PLAIN_OUTPUT=1 '" + std::string(DEDEKIND_CLI) + "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_golden(const std::string& args, const std::string& name) {
  const CliRun r = cli(args);
  EXPECT_EQ(r.status, 0) << args;
  EXPECT_EQ(r.out, golden(name)) << args;
}

}  // namespace

TEST(Cli, GoldenReports) {
  expect_golden("factor-mod-p 't^3-t^2-2t-8' 2 --json", "factor_mod_p_cubic_2.json");
  expect_golden("factor-mod-p 't^2-2' 7 --json", "factor_mod_p_sqrt2_7.json");
  expect_golden("dedekind-criterion 't^3-t^2-2t-8' 2 --json", "criterion_cubic_2.json");
  expect_golden("split-prime 't^3-t^2-2t-8' 2 --json", "split_prime_cubic_2.json");
  expect_golden("split-prime 't^2-2' 7 --json", "split_prime_sqrt2_7.json");
  expect_golden("split-prime 't^2-50t-833' 7 --json", "split_prime_theta_7.json");
  expect_golden("maximal-order 't^4-t^3+t^2-2t+4' --json", "maximal_order_quartic.json");
  expect_golden("index-form --family 2,2,1,-1 --json", "index_form_family.json");
  expect_golden("common-index-divisor 2 2:1,2:1 --json", "common_index_divisor_quartic_2.json");
  expect_golden("paper-examples", "worked_examples.txt");
  expect_golden("paper-examples --json", "worked_examples.json");
}

TEST(Cli, ReportContents) {
  auto j = nlohmann::json::parse(cli("factor-mod-p 't^3-t^2-2t-8' 2 --json").out);
  EXPECT_EQ(j["results"]["M"], "t + 4");
  EXPECT_EQ(j["results"]["factors"][0]["poly"], "t");
  EXPECT_EQ(j["results"]["factors"][0]["e"], 2);

  j = nlohmann::json::parse(cli("split-prime 't^3-t^2-2t-8' 2 --json").out);
  EXPECT_EQ(j["results"]["method"], "maximal-order");
  EXPECT_EQ(j["results"]["primes"].size(), 3u);
  EXPECT_EQ(j["results"]["common_index_divisor"], true);

  j = nlohmann::json::parse(cli("split-prime 't^2-50t-833' 7 --json").out);
  EXPECT_EQ(j["results"]["common_index_divisor"], false);
  EXPECT_EQ(j["results"]["parts"].size(), 2u);

  j = nlohmann::json::parse(cli("discriminant 't^3-t^2-2t-8' --json").out);
  EXPECT_EQ(j["results"]["discriminant"], -2012);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("paper-examples").status, 0);
  EXPECT_EQ(cli("discriminant 't^2-2'").status, 0);
  EXPECT_EQ(cli("factor-mod-p t 4").status, 2);
  EXPECT_EQ(cli("discriminant 't^^2'").status, 2);
  EXPECT_EQ(cli("dedekind-criterion '2t^3+1' 2").status, 2);
  EXPECT_EQ(cli("no-such-command").status, 2);
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("maximal-order 't^2-1000036000099'").status, 2);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, InjectedFaultFails) {
  const CliRun r = cli("paper-examples --inject-fault");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL cubic."), std::string::npos);
  const auto j = nlohmann::json::parse(cli("paper-examples --inject-fault --json").out);
  EXPECT_EQ(j["exit_status"], 1);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  for (const char* args : {"paper-examples --json", "split-prime 't^4-t^3+t^2-2t+4' 2 --json",
                           "factor-mod-p 't^6+3t^4+t+1' 5 --seed 7"}) {
    const CliRun a = cli(args), b = cli(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, SeedDoesNotChangeFactorization) {
  const std::string a = cli("factor-mod-p 't^8+t^4+3t+2' 7 --seed 1").out;
  for (const char* s : {"2", "99", "123456"})
    EXPECT_EQ(cli(std::string("factor-mod-p 't^8+t^4+3t+2' 7 --seed ") + s).out, a);
}
