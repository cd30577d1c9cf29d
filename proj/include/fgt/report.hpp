#pragma once

// Plain-text reports, and their "key=value" porcelain form.

#include <ostream>

#include "fgt/suites.hpp"

namespace fgt::report {

class writer {
 public:
  writer(std::ostream& os, bool porcelain) : os_(os), porcelain_(porcelain) {}

  /// key=value in porcelain mode, "Label: value" otherwise.
  void field(std::string_view key, std::string_view label, const std::string& value) {
    if (porcelain_)
      os_ << key << '=' << value << '\n';
    else
      os_ << label << ": " << value << '\n';
  }
  void flag(std::string_view key, std::string_view label, bool v) {
    field(key, label, porcelain_ ? (v ? "1" : "0") : (v ? "yes" : "no"));
  }
  void number(std::string_view key, std::string_view label, std::uint64_t v) { field(key, label, std::to_string(v)); }
  bool porcelain() const { return porcelain_; }
  std::ostream& out() { return os_; }

 private:
  std::ostream& os_;
  bool porcelain_;
};

inline std::string join_names(const Group& g, const std::vector<elem>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + g.name(xs[i]);
  return s;
}

inline std::string join_numbers(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

/// Throws when a structural claim about the input fails.
inline void classify(writer& w, const Group& g, const limits& lim) {
  w.number("order", "order", g.order());
  w.flag("abelian", "abelian", g.is_abelian());
  w.flag("nilpotent", "nilpotent", is_nilpotent(g));
  w.flag("dedekind", "Dedekind", is_dedekind(g));
  w.number("exponent", "exponent", exponent(g));
  std::vector<std::uint64_t> sizes;
  for (const auto& c : conjugacy_classes(g)) sizes.push_back(c.size());
  w.number("classes", "classes", sizes.size());
  w.field("class_sizes", "class sizes", join_numbers(sizes));
  w.number("center_order", "center order", center(g).order());
  const auto qw = q_group_witness(g);
  w.flag("q_group", "Q-group", qw.has_value());
  const auto r = r_of(g, lim);
  w.field("r", "R", std::string(to_string(r.tag)));
  if (r.subgroup) w.number("r_order", "R order", r.subgroup->order());
  const bool bb = is_blackburn(g, lim);
  w.flag("blackburn", "Blackburn", bb);
  if (bb) {
    w.number("r_prime", "R prime", r_prime(g, lim));
    if (prime_power_base(g.order()) == std::optional<std::uint64_t>(2))
      w.field("form", "form", std::string(to_string(blackburn_2group_form(g, lim))));
  }
}

inline void autc(writer& w, const AutcReport& rep) {
  const Group& g = rep.group;
  w.number("order", "order", g.order());
  w.field("generating_set", "generating set", join_names(g, rep.generating_set));
  w.number("autc_order", "|Aut_c|", rep.autc_order);
  w.number("inn_order", "|Inn|", rep.inn_order);
  w.flag("outc_trivial", "Out_c trivial", rep.outc_trivial);
  if (rep.witness) {
    std::vector<elem> images;
    for (elem s : rep.generating_set) images.push_back((*rep.witness)(s));
    w.field("witness", "witness (generator images)", join_names(g, images));
  }
  w.number("search_nodes", "search nodes", rep.search_nodes);
}

inline void example(writer& w, const kappa::ExampleReport& rep) {
  w.number("p", "p", rep.p);
  w.field("mode", "mode", rep.full ? "tables" : "symbolic");
  for (const auto& [name, v] : rep.orders) w.number("order." + name, "order " + name, v);
  w.number("kappa_matrix_order", "kappa matrix order", rep.kappa_matrix_order);
  w.field("kappa_det", "kappa det", std::to_string(rep.kappa_det));
  for (std::size_t i = 0; i < rep.claims.size(); ++i) {
    const auto& c = rep.claims[i];
    if (w.porcelain())
      w.out() << "claim." << i << '=' << (c.holds ? "pass" : "FAIL") << ' ' << c.name << '\n';
    else
      w.out() << (c.holds ? "[pass] " : "[FAIL] ") << c.name << '\n';
  }
  if (rep.full) {
    w.number("ga_classes", "classes of G<alpha>", rep.ga_classes);
    if (w.porcelain()) {
      w.out() << "sigma_class_preserving=" << rep.sigma_class_preserving << '\n';
      w.out() << "sigma_inner=" << rep.sigma_inner << '\n';
    } else {
      w.out() << "sigma: " << (rep.sigma_class_preserving ? "class-preserving" : "not class-preserving") << ", "
              << (rep.sigma_inner ? "inner" : "non-inner") << '\n';
    }
  } else if (!w.porcelain()) {
    w.out() << "sigma: not checked (symbolic model)\n";
  }
}

inline void suite(writer& w, const std::vector<suites::SuiteResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.ok()) ++failed;
    if (w.porcelain()) {
      w.out() << "suite=" << r.name << " run=" << r.run << " passed=" << r.passed << '\n';
      if (r.failure) w.out() << "failure." << r.name << '=' << *r.failure << '\n';
    } else {
      w.out() << (r.ok() ? "[pass] " : "[FAIL] ") << r.name << ": " << r.passed << '/' << r.run << '\n';
      if (r.failure) w.out() << "  first failure: " << *r.failure << '\n';
    }
  }
  w.number("suites", "suites", results.size());
  w.number("failed", "failed", failed);
}

inline void catalog_listing(writer& w) {
  w.number("manifest_version", "manifest version", catalog::manifest_version);
  for (const auto& e : catalog::manifest()) {
    if (w.porcelain())
      w.out() << "entry=" << e.spec << " order=" << e.order << '\n';
    else
      w.out() << e.spec << "  (order " << e.order << ")\n";
  }
}

}  // namespace fgt::report
