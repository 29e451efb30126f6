#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(JACOBI_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, FiberAtOrigin) {
  const auto r = run("fiber --a 0 --b 0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("count"), 0);
}

TEST(Cli, PinchukIh) {
  const auto r = run("ih --model pinchuk --perversity zero --support c");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("betti1"), 0);
}

TEST(Cli, CurveCsvHasAnchors) {
  const auto r = run("curve --samples 100 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("s,p,q,anchor", 0), 0u);
  for (const char* s : {"\n0,", "\n1,", "\n-1,"}) EXPECT_NE(r.out.find(s), std::string::npos) << s;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("fiber --a 0").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("ih --model klein").status, 1);
  EXPECT_EQ(run("eval --x 1/0 --y 1").status, 2);
}

TEST(Cli, ModelExportRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "jacobi_cli_test_model.json";
  ASSERT_EQ(run("models export pinched_torus --output " + path.string()).status, 0);
  const auto a = run("ih --model pinched_torus --support compact");
  const auto b = run("ih --model " + path.string() + " --support compact");
  std::filesystem::remove(path);
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out).at("betti"), nlohmann::json::parse(b.out).at("betti"));
}
