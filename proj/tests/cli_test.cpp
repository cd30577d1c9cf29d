#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

run_result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + FGT_CLI + " " + args + " 2>/dev/null";
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

const std::string data = FGT_DATA_DIR;

}  // namespace

TEST(Cli, ClassifyQ16) {
  const auto r = run("classify quaternion:16 --porcelain");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "blackburn=1")) << r.out;
  EXPECT_TRUE(has_line(r.out, "form=QGroup")) << r.out;
  EXPECT_TRUE(has_line(r.out, "r_order=2")) << r.out;
  const auto prose = run("classify quaternion:16");
  EXPECT_TRUE(has_line(prose.out, "Blackburn: yes")) << prose.out;
  EXPECT_TRUE(has_line(prose.out, "form: QGroup")) << prose.out;
  EXPECT_TRUE(has_line(prose.out, "R order: 2")) << prose.out;
}

TEST(Cli, ClassifyFiles) {
  auto r = run("classify --porcelain " + data + "/s3.cayley");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "class_sizes=1 3 2")) << r.out;
  EXPECT_TRUE(has_line(r.out, "r=Trivial")) << r.out;
  r = run("classify --porcelain " + data + "/q8.cayley");
  EXPECT_TRUE(has_line(r.out, "r=Undefined")) << r.out;
  EXPECT_TRUE(has_line(r.out, "dedekind=1")) << r.out;
  r = run("classify --porcelain " + data + "/d8.permgen");
  EXPECT_TRUE(has_line(r.out, "order=8")) << r.out;
}

TEST(Cli, Autc) {
  const auto r = run("autc symmetric:4 --porcelain");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "autc_order=24")) << r.out;
  EXPECT_TRUE(has_line(r.out, "inn_order=24")) << r.out;
  EXPECT_TRUE(has_line(r.out, "outc_trivial=1")) << r.out;
}

TEST(Cli, ExampleP3) {
  const auto r = run("example --p 3");
  EXPECT_EQ(r.code, 0);
  const std::string tail = "sigma: class-preserving, non-inner\n";
  ASSERT_GE(r.out.size(), tail.size());
  EXPECT_EQ(r.out.substr(r.out.size() - tail.size()), tail);
  const auto p = run("example --p 3 --porcelain");
  EXPECT_TRUE(has_line(p.out, "sigma_inner=0")) << p.out;
  EXPECT_TRUE(has_line(p.out, "order.G<alpha>=2187")) << p.out;
}

TEST(Cli, ExampleP5) { EXPECT_EQ(run("example --p 5").code, 0); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("example --p 7").code, 2);
  EXPECT_EQ(run("classify nosuchfile").code, 2);
  EXPECT_EQ(run("classify nosuch:4").code, 2);
  EXPECT_EQ(run("classify " + data + "/short.cayley").code, 2);
  EXPECT_EQ(run("suite --level medium").code, 2);
  EXPECT_EQ(run("suite --only nosuch").code, 2);
  EXPECT_EQ(run("autc symmetric:5 --budget 10").code, 2);
  EXPECT_EQ(run("classify cyclic:300 --max-order 100").code, 2);
}

TEST(Cli, Catalog) {
  const auto r = run("catalog --porcelain");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "manifest_version=1"));
  EXPECT_TRUE(has_line(r.out, "entry=quaternion:8*quaternion:8*cyclic:2 order=128")) << r.out;
}

TEST(Cli, SuiteSubset) {
  const auto r = run("suite --only r_oracle --porcelain");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has_line(r.out, "failed=0")) << r.out;
}

TEST(Cli, ByteStableAcrossWorkerCounts) {
  for (const std::string args : {"autc aq:3,3;8 --porcelain", "classify quaternion:8*quaternion:8", "example --p 3"}) {
    const auto a = run(args, "FGT_WORKERS=1"), b = run(args, "FGT_WORKERS=4"), c = run(args, "FGT_WORKERS=4");
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(b.out, c.out) << args;
  }
}
