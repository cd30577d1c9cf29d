// fgt: command-line front end.
//
// exit 0: every check passed; 1: a mathematical claim failed; 2: input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fgt/report.hpp"

namespace {

using namespace fgt;

constexpr int exit_ok = 0;
constexpr int exit_claim = 1;
constexpr int exit_usage = 2;

bool is_claim_error(errc c) {
  switch (c) {
    case errc::claim_failed:
    case errc::trichotomy_violated:
    case errc::counterexample_found:
    case errc::no_witness:
    case errc::no_form_matched:
    case errc::action_property_failed:
      return true;
    default:
      return false;
  }
}

/// A readable file (cayley or permgen, chosen by header) or a catalog spec.
Group load(const std::string& source, const limits& lim) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    if (!in) throw error(errc::bad_params, "cannot read " + source);
    std::ostringstream text;
    text << in.rdbuf();
    return io::parse_any(text.str(), lim);
  }
  if (source.find(':') != std::string::npos) return catalog::build(source, lim);
  throw error(errc::bad_params, "'" + source + "' is neither a file nor a catalog spec");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups: classification, class-preserving automorphisms and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the command

  bool porcelain = false;
  std::size_t max_order = limits{}.max_order;
  std::uint64_t budget = limits{}.search_budget;
  app.add_flag("--porcelain", porcelain, "key=value output");
  app.add_option("--max-order", max_order, "construction order cap")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "search node budget")->check(CLI::PositiveNumber);

  std::string source;
  auto* classify = app.add_subcommand("classify", "order, flags, R(G), Blackburn verdict and 2-group form");
  classify->add_option("source", source, "cayley/permgen file or catalog spec (e.g. quaternion:16)")->required();

  std::string autc_source;
  auto* autc = app.add_subcommand("autc", "class-preserving automorphisms and Out_c");
  autc->add_option("source", autc_source, "cayley/permgen file or catalog spec")->required();

  std::uint64_t p = 3;
  auto* example = app.add_subcommand("example", "verify the p-group counterexample construction");
  example->add_option("--p", p, "odd prime (3: full, 5: symbolic)");

  std::string level_name = "quick", only;
  auto* suite = app.add_subcommand("suite", "run the verification suites over the catalog");
  suite->add_option("--level", level_name, "quick (orders <= 64) or full (<= 128 and the example)")
      ->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--only", only, "run a single suite by name");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the pinned catalog manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  limits lim;
  lim.max_order = max_order;
  lim.search_budget = budget;
  report::writer w(std::cout, porcelain);

  try {
    if (*classify) {
      report::classify(w, load(source, lim), lim);
      return exit_ok;
    }
    if (*autc) {
      report::autc(w, outc_trivial(load(autc_source, lim), lim));
      return exit_ok;
    }
    if (*example) {
      const auto rep = kappa::verify_example(p, lim);
      report::example(w, rep);
      return rep.ok() ? exit_ok : exit_claim;
    }
    if (*suite) {
      suites::context ctx;
      ctx.lvl = suites::parse_level(level_name);
      ctx.lim = lim;
      const auto results = suites::run(ctx, only);
      report::suite(w, results);
      for (const auto& r : results)
        if (!r.ok()) return exit_claim;
      return exit_ok;
    }
    if (*catalog_cmd) {
      report::catalog_listing(w);
      return exit_ok;
    }
  } catch (const error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return is_claim_error(e.code()) ? exit_claim : exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
