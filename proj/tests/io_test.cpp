#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fgt/catalog.hpp"
#include "fgt/io.hpp"
#include "fgt/structure.hpp"

using namespace fgt;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fgt::error thrown";
  return errc::claim_failed;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.what();
  }
  return {};
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FGT_DATA_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::size_t> class_sizes(const Group& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Cayley, C2) {
  const auto g = io::parse_cayley("cayley 1\norder 2\n0 1\n1 0");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.mul(1, 1), 0u);
}

TEST(Cayley, MissingRowIsSyntaxError) {
  const auto msg = message_of([] { io::parse_cayley("cayley 1\norder 3\n0 1 2\n1 2 0\n"); });
  EXPECT_NE(msg.find("SyntaxError"), std::string::npos);
  EXPECT_NE(msg.find("line"), std::string::npos);
  EXPECT_EQ(code_of([] { io::parse_cayley(read_data("short.cayley")); }), errc::syntax_error);
}

TEST(Cayley, S3File) {
  const auto g = io::parse_cayley(read_data("s3.cayley"));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(class_sizes(g), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(g.name(0), "[0,1,2]");
}

TEST(Cayley, CommentsNamesAndBlankLines) {
  const auto g = io::parse_cayley(
      "# header comment\n\ncayley 1   # version\norder 3\nnames e a a2\n0 1 2\n1 2 0  # row\n\n2 0 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.name(2), "a2");
}

TEST(Cayley, Errors) {
  EXPECT_EQ(code_of([] { io::parse_cayley(""); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 2\norder 1\n0\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder x\n0\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder 2\n0 1\n1\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder 2\n0 1\n1 5\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder 2\nnames e\n0 1\n1 0\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder 2\n0 1\n1 1\n"); }), errc::not_latin_square);
  EXPECT_EQ(code_of([] { io::parse_cayley("cayley 1\norder 3\n0 1 2\n2 0 1\n1 2 0\n"); }), errc::no_identity);
}

TEST(Cayley, SyntaxErrorNamesTheLine) {
  const auto msg = message_of([] { io::parse_cayley("cayley 1\norder 2\n0 1\n1 q\n"); });
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(Cayley, RoundTripOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    const auto back = io::parse_cayley(io::serialize_cayley(g));
    EXPECT_EQ(back, g) << e.spec;
    for (elem x = 0; x < g.order(); ++x) ASSERT_EQ(back.name(x), g.name(x)) << e.spec;
  }
}

TEST(Cayley, OrderCap) {
  limits lim;
  lim.max_order = 4;
  EXPECT_EQ(code_of([&] { io::parse_cayley(read_data("s3.cayley"), lim); }), errc::order_cap);
}

TEST(Permgen, S3) {
  const auto g = io::parse_permgen("permgen 1\ndegree 3\ngen 1 2 0\ngen 1 0 2\n");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(io::parse_permgen(read_data("s3.permgen")), g);
}

TEST(Permgen, C4) {
  const auto g = io::parse_permgen(read_data("c4.permgen"));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(is_cyclic(Subgroup::whole(g)));
}

TEST(Permgen, D8) {
  const auto g = io::parse_permgen(read_data("d8.permgen"));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(center(g).order(), 2u);
}

TEST(Permgen, NoGeneratorsIsTrivial) { EXPECT_EQ(io::parse_permgen("permgen 1\ndegree 5\n").order(), 1u); }

TEST(Permgen, Errors) {
  EXPECT_EQ(code_of([] { io::parse_permgen("permgen 1\ndegree 3\ngen 0 0 1\n"); }), errc::not_permutation);
  EXPECT_EQ(code_of([] { io::parse_permgen("permgen 1\ndegree 3\ngen 0 1 3\n"); }), errc::not_permutation);
  EXPECT_EQ(code_of([] { io::parse_permgen("permgen 1\ndegree 3\ngen 0 1\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_permgen("permgen 1\ndegree 3\nperm 0 1 2\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { io::parse_permgen("permgen 1\n"); }), errc::syntax_error);
  limits lim;
  lim.max_order = 10;
  EXPECT_EQ(code_of([&] { io::parse_permgen("permgen 1\ndegree 4\ngen 1 2 3 0\ngen 1 0 2 3\n", lim); }),
            errc::order_cap);
}

TEST(Detect, ByHeader) {
  EXPECT_EQ(io::parse_any(read_data("q8.cayley")).order(), 8u);
  EXPECT_EQ(io::parse_any(read_data("d8.permgen")).order(), 8u);
  EXPECT_EQ(code_of([] { io::parse_any("group 1\n"); }), errc::syntax_error);
}
