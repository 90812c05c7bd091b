#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const char* cli = std::getenv("ECP_CLI");
  if (!cli) throw std::runtime_error("ECP_CLI is not set");
  const std::string command = std::string(cli) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string stderr_of(const std::string& args) {
  const std::string command = std::string(std::getenv("ECP_CLI")) + " " + args + " 2>&1 >/dev/null";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  pclose(pipe);
  return out;
}

std::string data(const std::string& name) { return std::string(std::getenv("ECP_DATA")) + "/" + name; }

nlohmann::json json_of(const Invocation& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, EhrhartChain) {
  const Invocation r = run("ehrhart --poset " + data("chain2.poset"));
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["L"], nlohmann::json::parse(R"([1,2,2])"));
  EXPECT_EQ(j["hstar"], nlohmann::json::parse(R"([1,2,1])"));
  EXPECT_EQ(j["gamma"], nlohmann::json::parse(R"([1])"));
  EXPECT_EQ(j["volume"], 4);
}

TEST(Cli, JsonAndTextAgree) {
  const Invocation js = run("hstar --poset " + data("v3.poset"));
  const Invocation text = run("hstar --format text --poset " + data("v3.poset"));
  ASSERT_EQ(js.status, 0);
  ASSERT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("1,7,7,1"), std::string::npos) << text.out;
  EXPECT_EQ(json_of(js)["hstar"], nlohmann::json::parse("[1,7,7,1]"));
}

TEST(Cli, ComplexAntichain) {
  const Invocation r = run("complex --poset " + data("antichain2.poset"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json_of(r)["f"], nlohmann::json::parse(R"([1,4])"));
}

TEST(Cli, EveryCommandRunsOnJsonInput) {
  for (const char* command : {"antichains", "extensions", "ehrhart", "hstar", "gamma", "partitions", "peaks", "grobner",
                              "triangulation", "complex"}) {
    const Invocation r = run(std::string(command) + " --poset " + data("n4.json"));
    EXPECT_EQ(r.status, 0) << command << "\n" << r.out;
    EXPECT_NO_THROW(json_of(r)) << command;
  }
}

TEST(Cli, UnnaturalInputIsRelabeled) {
  const Invocation r = run("ehrhart --poset " + data("unnatural3.poset"));
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_TRUE(j.contains("relabeling"));
  const auto natural = json_of(run("ehrhart --poset " + data("chain2_point.poset")));
  EXPECT_EQ(j["hstar"], natural["hstar"]);
  EXPECT_EQ(j["volume"], 24);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("ehrhart --poset " + data("malformed.poset")).status, 1);
  EXPECT_EQ(run("ehrhart --poset " + data("does-not-exist.poset")).status, 1);
  EXPECT_EQ(run("ehrhart").status, 1);
  EXPECT_EQ(run("frobnicate --poset " + data("chain2.poset")).status, 1);
  EXPECT_NE(stderr_of("ehrhart --poset " + data("malformed.poset")).find("ParseError"), std::string::npos);
}

TEST(Cli, GuardExceeded) {
  EXPECT_EQ(run("verify-all --max-n 12").status, 1);
  EXPECT_NE(stderr_of("verify-all --max-n 12").find("GuardExceeded"), std::string::npos);
  const Invocation r = run("ehrhart --guard-points 10 --poset " + data("antichain4.poset"));
  EXPECT_EQ(r.status, 1);
}

TEST(Cli, VerifyAllSinglePoset) {
  const Invocation r = run("verify-all --poset " + data("v3.poset"));
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = json_of(r);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["rows"][0]["n"], 3);
}

TEST(Cli, VerifyAllSweepTsv) {
  const Invocation r = run("verify-all --max-n 3 --format tsv");
  ASSERT_EQ(r.status, 0) << r.out;
  // 1 + 2 + 7 posets, one line each, plus the header
  std::size_t lines = 0, comments = 0;
  for (std::size_t pos = 0; (pos = r.out.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  for (std::size_t pos = 0; (pos = r.out.find("\n#", pos)) != std::string::npos; ++pos) ++comments;
  comments += r.out.rfind('#', 0) == 0;
  EXPECT_EQ(lines - comments, 11u) << r.out;
}

TEST(Cli, EnvironmentOverrides) {
  const std::string cli = std::getenv("ECP_CLI");
  const Invocation a = run("ehrhart --poset " + data("chain2.poset") + " --format text");
  const std::string command = "ECP_FORMAT=text ECP_POSET=" + data("chain2.poset") + " " + cli + " ehrhart";
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  std::array<char, 4096> buffer{};
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_EQ(out, a.out);
}

TEST(Cli, Deterministic) {
  const std::string args = "grobner --poset " + data("v3.poset");
  EXPECT_EQ(run(args).out, run(args).out);
}
