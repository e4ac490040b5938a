// Drives the bchseries executable as a subprocess.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(BCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, TermsText) {
  const CliRun r = run("terms --variant standard --order 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "z1 = X + Y\n"
            "z2 = 1/2*XY - 1/2*YX\n"
            "z3 = 1/12*X^2Y - 1/6*XYX + 1/12*XY^2 + 1/12*YX^2 - 1/6*YXY + 1/12*Y^2X\n");
}

TEST(Cli, GoldbergModes) {
  EXPECT_EQ(run("goldberg X^4Y^4").out, "23/120960\n");
  EXPECT_EQ(run("goldberg --word XYXYX --mode oracle").out, "1/30\n");
  const CliRun both = run("goldberg X^2Y --mode both");
  EXPECT_EQ(both.status, 0);
  EXPECT_EQ(both.out, "engine 1/12\noracle 1/12\n");
}

TEST(Cli, CensusCsv) {
  const CliRun r = run("census --max 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "n,count,bound,ratio_num,ratio_den,variant\n"
            "2,2,2,1,1,standard\n"
            "3,6,6,1,1,standard\n"
            "4,4,14,2,7,standard\n"
            "5,30,30,1,1,standard\n");
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const char* args : {"terms --order 5 --format json", "census --max 7 --format json",
                           "verify properties --max 4 --format json", "profile --order 5 --format json"}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.status, 0) << args;
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out) << args;
  }
}

TEST(Cli, OutputIndependentOfThreads) {
  const CliRun one = run("--threads 1 terms --order 8 --format json");
  const CliRun four = run("--threads 4 terms --order 8 --format json");
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(run("--threads 1 census --max 10").out, run("--threads 3 census --max 10").out);
}

TEST(Cli, VerifySuitesExitZero) {
  for (const char* suite : {"properties", "bounds", "dynkin", "oracle", "commutator-forms"}) {
    const CliRun r = run(std::string("verify ") + suite + " --max 6");
    EXPECT_EQ(r.status, 0) << suite;
    EXPECT_NE(r.out.find("PASS " + std::string(suite) + " (max 6)"), std::string::npos) << r.out;
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("terms --order 0").status, 2);
  EXPECT_EQ(run("census --max 1").status, 2);
  EXPECT_EQ(run("terms --order 3 --variant bogus").status, 2);
  EXPECT_EQ(run("goldberg XZ").status, 2);
  EXPECT_EQ(run("goldberg X^0").status, 2);
  EXPECT_EQ(run("verify nothing --max 3").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").status, 0); }
