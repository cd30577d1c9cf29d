#pragma once

// Text formats.
//
// cayley 1          permgen 1
// order n           degree d
// names t0 .. tn-1  gen i0 .. i(d-1)   (one line per generator)
// n rows of n indices
//
// '#' starts a comment; blank lines are ignored.

#include <charconv>
#include <sstream>

#include "fgt/construct.hpp"

namespace fgt::io {

namespace detail {

struct line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> words;
};

inline std::vector<line> tokenize(std::string_view text) {
  std::vector<line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    line l{number, {}};
    for (std::string w; is >> w;) l.words.push_back(std::move(w));
    if (!l.words.empty()) out.push_back(std::move(l));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] inline void syntax(std::size_t number, const std::string& what) {
  throw error(errc::syntax_error, "line " + std::to_string(number) + ": " + what);
}

inline std::size_t number(const std::string& w, std::size_t lineno) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || ptr != w.data() + w.size()) syntax(lineno, "expected a non-negative integer, got '" + w + "'");
  return v;
}

inline void expect_header(const std::vector<line>& lines, std::size_t i, std::string_view key, std::size_t count,
                          std::size_t last_line) {
  if (i >= lines.size()) syntax(last_line, "missing '" + std::string(key) + "' line");
  const auto& l = lines[i];
  if (l.words[0] != key || l.words.size() != count + 1)
    syntax(l.number, "expected '" + std::string(key) + "' with " + std::to_string(count) + " value(s)");
}

}  // namespace detail

inline Group parse_cayley(std::string_view text, const limits& lim = {}) {
  const auto lines = detail::tokenize(text);
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  detail::expect_header(lines, 0, "cayley", 1, last);
  if (lines[0].words[1] != "1") detail::syntax(lines[0].number, "unsupported cayley version " + lines[0].words[1]);
  detail::expect_header(lines, 1, "order", 1, last);
  const auto n = detail::number(lines[1].words[1], lines[1].number);
  if (n == 0) detail::syntax(lines[1].number, "order must be positive");
  check_order_cap(n, lim, "cayley table");

  std::size_t i = 2;
  std::vector<std::string> names;
  if (i < lines.size() && lines[i].words[0] == "names") {
    if (lines[i].words.size() != n + 1)
      detail::syntax(lines[i].number, "names line has " + std::to_string(lines[i].words.size() - 1) + " entries, expected " +
                                          std::to_string(n));
    names.assign(lines[i].words.begin() + 1, lines[i].words.end());
    ++i;
  }
  if (lines.size() - i != n)
    detail::syntax(i < lines.size() ? lines[i].number : last,
                   "expected " + std::to_string(n) + " table rows, found " + std::to_string(lines.size() - i));
  std::vector<std::vector<elem>> rows;
  for (; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words.size() != n) detail::syntax(l.number, "row has " + std::to_string(l.words.size()) + " entries, expected " + std::to_string(n));
    std::vector<elem> row;
    for (const auto& w : l.words) {
      const auto v = detail::number(w, l.number);
      if (v >= n) detail::syntax(l.number, "entry " + w + " out of range");
      row.push_back(static_cast<elem>(v));
    }
    rows.push_back(std::move(row));
  }
  return validate_group(n, rows, std::move(names), lim);
}

inline std::string serialize_cayley(const Group& g) {
  std::ostringstream os;
  os << "cayley 1\norder " << g.order() << "\n";
  if (g.has_names()) {
    os << "names";
    for (elem x = 0; x < g.order(); ++x) os << ' ' << g.name(x);
    os << "\n";
  }
  for (elem a = 0; a < g.order(); ++a) {
    for (elem b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

inline Group parse_permgen(std::string_view text, const limits& lim = {}) {
  const auto lines = detail::tokenize(text);
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  detail::expect_header(lines, 0, "permgen", 1, last);
  if (lines[0].words[1] != "1") detail::syntax(lines[0].number, "unsupported permgen version " + lines[0].words[1]);
  detail::expect_header(lines, 1, "degree", 1, last);
  const auto d = detail::number(lines[1].words[1], lines[1].number);
  if (d == 0) detail::syntax(lines[1].number, "degree must be positive");
  std::vector<std::vector<elem>> gens;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words[0] != "gen") detail::syntax(l.number, "expected 'gen'");
    if (l.words.size() != d + 1) detail::syntax(l.number, "gen has " + std::to_string(l.words.size() - 1) + " images, expected " + std::to_string(d));
    std::vector<elem> p;
    std::vector<bool> hit(d, false);
    for (std::size_t j = 1; j < l.words.size(); ++j) {
      const auto v = detail::number(l.words[j], l.number);
      if (v >= d || hit[v]) throw error(errc::not_permutation, "line " + std::to_string(l.number) + ": image list is not a permutation of 0.." + std::to_string(d - 1));
      hit[v] = true;
      p.push_back(static_cast<elem>(v));
    }
    gens.push_back(std::move(p));
  }
  return permutation_group(d, gens, lim);
}

/// "cayley" or "permgen" by the first word of the first non-comment line.
inline Group parse_any(std::string_view text, const limits& lim = {}) {
  const auto lines = detail::tokenize(text);
  if (!lines.empty() && lines[0].words[0] == "permgen") return parse_permgen(text, lim);
  if (!lines.empty() && lines[0].words[0] == "cayley") return parse_cayley(text, lim);
  detail::syntax(lines.empty() ? 1 : lines[0].number, "unknown format (expected 'cayley' or 'permgen' header)");
}

}  // namespace fgt::io
