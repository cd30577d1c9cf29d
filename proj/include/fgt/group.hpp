#pragma once

// Finite groups stored as multiplication tables over indices 0..n-1,
// together with subgroups, maps between groups and group actions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgt {

using elem = std::uint32_t;

enum class errc {
  not_latin_square,
  no_identity,
  not_associative,
  no_inverse,
  bad_params,
  order_cap,
  not_normal,
  not_automorphism,
  search_budget_exceeded,
  precondition_failed,
  no_witness,
  trichotomy_violated,
  not_blackburn_2group,
  no_form_matched,
  counterexample_found,
  claim_failed,
  bad_prime,
  action_property_failed,
  syntax_error,
  not_permutation,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::not_latin_square: return "NotLatinSquare";
    case errc::no_identity: return "NoIdentity";
    case errc::not_associative: return "NotAssociative";
    case errc::no_inverse: return "NoInverse";
    case errc::bad_params: return "BadParams";
    case errc::order_cap: return "OrderCap";
    case errc::not_normal: return "NotNormal";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::no_witness: return "NoWitness";
    case errc::trichotomy_violated: return "TrichotomyViolated";
    case errc::not_blackburn_2group: return "NotBlackburn2Group";
    case errc::no_form_matched: return "NoFormMatched";
    case errc::counterexample_found: return "CounterexampleFound";
    case errc::claim_failed: return "ClaimFailed";
    case errc::bad_prime: return "BadPrime";
    case errc::action_property_failed: return "ActionPropertyFailed";
    case errc::syntax_error: return "SyntaxError";
    case errc::not_permutation: return "NotPermutation";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Size caps shared by constructors and searches. Every entry is configurable
/// from the command line.
struct limits {
  std::size_t max_order = 65536;
  std::size_t max_subgroup_enum = 128;
  std::size_t max_autc_order = 4096;
  std::uint64_t search_budget = 100'000'000;
  std::size_t max_iso_order = 256;
};

inline void check_order_cap(std::size_t n, const limits& lim, std::string_view what) {
  if (n > lim.max_order) {
    throw error(errc::order_cap, std::string(what) + " would have order " + std::to_string(n) +
                                     " > cap " + std::to_string(lim.max_order));
  }
}

/// Dynamic bitset over group element indices.
class element_set {
 public:
  element_set() = default;
  explicit element_set(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  bool test(elem i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(elem i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(elem i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void fill() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    if (size_ % 64) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  element_set& operator&=(const element_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  element_set& operator|=(const element_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  bool subset_of(const element_set& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<elem> to_vector() const {
    std::vector<elem> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<elem>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return h;
  }

  friend bool operator==(const element_set&, const element_set&) = default;
  friend auto operator<=>(const element_set& a, const element_set& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct element_set_hash {
  std::size_t operator()(const element_set& s) const { return s.hash(); }
};

namespace detail {

struct group_data {
  std::size_t n = 0;
  std::vector<elem> table;  // row-major, identity at index 0
  std::vector<elem> inverse;
  std::vector<std::uint32_t> order;
  std::vector<std::string> names;
};

inline std::shared_ptr<const group_data> finish(std::size_t n, std::vector<elem> table,
                                                std::vector<std::string> names) {
  auto d = std::make_shared<group_data>();
  d->n = n;
  d->table = std::move(table);
  d->names = std::move(names);
  d->inverse.assign(n, 0);
  for (elem a = 0; a < n; ++a) {
    const elem* row = d->table.data() + static_cast<std::size_t>(a) * n;
    for (elem b = 0; b < n; ++b) {
      if (row[b] == 0) {
        d->inverse[a] = b;
        break;
      }
    }
  }
  d->order.assign(n, 0);
  for (elem a = 0; a < n; ++a) {
    if (d->order[a]) continue;
    std::uint32_t k = 1;
    elem x = a;
    while (x != 0) {
      x = d->table[static_cast<std::size_t>(x) * n + a];
      ++k;
    }
    d->order[a] = k;
  }
  return d;
}

}  // namespace detail

/// A finite group given by its multiplication table. Identity is always index 0.
/// Copies share the immutable table.
class Group {
 public:
  Group() : data_(detail::finish(1, {0}, {})) {}

  /// Wraps a table that is known to be a group with identity 0 (constructor output).
  static Group from_trusted_table(std::size_t n, std::vector<elem> table,
                                  std::vector<std::string> names = {}) {
    Group g;
    g.data_ = detail::finish(n, std::move(table), std::move(names));
    return g;
  }

  std::size_t order() const { return data_->n; }
  elem identity() const { return 0; }

  elem mul(elem a, elem b) const { return data_->table[static_cast<std::size_t>(a) * data_->n + b]; }
  elem inv(elem a) const { return data_->inverse[a]; }
  /// g^-1 x g
  elem conj(elem x, elem g) const { return mul(mul(inv(g), x), g); }
  elem commutator(elem a, elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  elem pow(elem x, long long k) const {
    const long long ord = element_order(x);
    k %= ord;
    if (k < 0) k += ord;
    elem r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }

  std::uint32_t element_order(elem x) const { return data_->order[x]; }
  std::span<const std::uint32_t> element_orders() const { return data_->order; }
  std::span<const elem> table() const { return data_->table; }
  std::span<const elem> row(elem a) const {
    return std::span<const elem>(data_->table).subspan(static_cast<std::size_t>(a) * data_->n, data_->n);
  }

  bool has_names() const { return !data_->names.empty(); }
  std::string name(elem x) const { return has_names() ? data_->names[x] : std::to_string(x); }
  const std::vector<std::string>& names() const { return data_->names; }

  bool is_abelian() const {
    const auto n = order();
    for (elem a = 0; a < n; ++a)
      for (elem b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Same object or identical table.
  friend bool operator==(const Group& a, const Group& b) {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }
  bool same_object(const Group& o) const { return data_ == o.data_; }

 private:
  std::shared_ptr<const detail::group_data> data_;
};

/// Left-nested word closure: all products s1 s2 ... sk (left to right) of seeds,
/// including the identity. For a group this is the generated subgroup.
inline element_set right_closure(const Group& g, std::span<const elem> seeds) {
  element_set in(g.order());
  std::vector<elem> queue{0};
  in.set(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (elem s : seeds) {
      elem y = g.mul(queue[i], s);
      if (!in.test(y)) {
        in.set(y);
        queue.push_back(y);
      }
    }
  }
  return in;
}

/// Greedy generating sequence: repeatedly take the lowest index not yet generated.
inline std::vector<elem> generating_sequence(const Group& g) {
  std::vector<elem> gens;
  element_set in(g.order());
  in.set(0);
  std::vector<elem> members{0};
  for (elem c = 1; c < g.order(); ++c) {
    if (in.test(c)) continue;
    gens.push_back(c);
    // extend closure by the new generator
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (elem s : gens) {
        elem y = g.mul(members[i], s);
        if (!in.test(y)) {
          in.set(y);
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace detail {

inline std::string triple(elem a, elem b, elem c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace detail

/// Validates a loaded table and relabels the identity to index 0.
/// Associativity: full check for n <= 512, Light's test on a generating set above.
inline Group validate_group(std::size_t n, const std::vector<std::vector<elem>>& rows,
                            std::vector<std::string> names = {}, const limits& lim = {}) {
  if (n == 0) throw error(errc::bad_params, "order must be positive");
  check_order_cap(n, lim, "loaded table");
  if (rows.size() != n) throw error(errc::bad_params, "expected " + std::to_string(n) + " rows");
  if (!names.empty() && names.size() != n) throw error(errc::bad_params, "names list has wrong length");
  std::vector<elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw error(errc::bad_params, "row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) throw error(errc::bad_params, "entry out of range at row " + std::to_string(i));
      t[i * n + j] = rows[i][j];
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };

  std::vector<std::size_t> seen(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[at(i, j)] == i)
        throw error(errc::not_latin_square, "row " + std::to_string(i) + " repeats value " + std::to_string(at(i, j)));
      seen[at(i, j)] = i;
    }
  }
  std::fill(seen.begin(), seen.end(), SIZE_MAX);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[at(i, j)] == j)
        throw error(errc::not_latin_square, "column " + std::to_string(j) + " repeats value " + std::to_string(at(i, j)));
      seen[at(i, j)] = j;
    }
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e == n) throw error(errc::no_identity, "no element acts as a two-sided identity");

  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (at(a, b) != e) ++b;
    if (at(b, a) != e) throw error(errc::no_inverse, "element " + std::to_string(a) + " has no two-sided inverse");
  }

  // relabel e <-> 0
  std::vector<elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);
  std::vector<elem> relabeled(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) relabeled[perm[a] * n + perm[b]] = perm[at(a, b)];
  if (!names.empty()) std::swap(names[0], names[e]);
  t = std::move(relabeled);

  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw error(errc::not_associative, "triple " + detail::triple(perm[a], perm[b], perm[c]));
      }
  } else {
    // Light's test: the associative elements form a closed set, so checking a set whose
    // left-nested words reach everything suffices.
    auto probe = Group::from_trusted_table(n, t);
    for (elem g : generating_sequence(probe)) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t xg = at(x, g);
        for (std::size_t y = 0; y < n; ++y)
          if (at(xg, y) != at(x, at(g, y)))
            throw error(errc::not_associative, "triple " + detail::triple(perm[x], perm[g], perm[y]));
      }
    }
  }
  return Group::from_trusted_table(n, std::move(t), std::move(names));
}

/// A subset of a parent group closed under product and inverse. Members are sorted.
class Subgroup {
 public:
  Subgroup() = default;

  /// Caller guarantees closure (output of closure routines).
  Subgroup(Group parent, const element_set& members)
      : parent_(std::move(parent)), set_(members), members_(members.to_vector()) {}

  static Subgroup whole(const Group& g) {
    element_set s(g.order());
    s.fill();
    return Subgroup(g, s);
  }
  static Subgroup trivial(const Group& g) {
    element_set s(g.order());
    s.set(0);
    return Subgroup(g, s);
  }

  const Group& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<elem>& members() const& { return members_; }
  std::vector<elem> members() && { return std::move(members_); }  // safe on temporaries
  const element_set& mask() const { return set_; }
  bool contains(elem x) const { return set_.test(x); }
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.set_ == b.set_; }

 private:
  Group parent_;
  element_set set_;
  std::vector<elem> members_;
};

/// Intersection of subgroups of the same parent.
inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  auto m = a.mask();
  m &= b.mask();
  return Subgroup(a.parent(), m);
}

/// A map between groups given by its image list.
class GroupMap {
 public:
  GroupMap() = default;
  GroupMap(Group source, Group target, std::vector<elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.order()) throw error(errc::bad_params, "image list length differs from source order");
    for (elem y : images_)
      if (y >= target_.order()) throw error(errc::bad_params, "image index out of range");
  }

  static GroupMap identity(const Group& g) {
    std::vector<elem> im(g.order());
    std::iota(im.begin(), im.end(), 0);
    return GroupMap(g, g, std::move(im));
  }

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const std::vector<elem>& images() const { return images_; }
  elem operator()(elem x) const { return images_[x]; }

  bool is_homomorphism() const {
    const auto n = source_.order();
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b])) return false;
    return true;
  }

  bool is_bijective() const {
    if (source_.order() != target_.order()) return false;
    element_set hit(target_.order());
    for (elem y : images_) {
      if (hit.test(y)) return false;
      hit.set(y);
    }
    return true;
  }

  bool is_automorphism() const { return source_ == target_ && is_bijective() && is_homomorphism(); }
  bool is_identity() const {
    for (elem x = 0; x < images_.size(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  /// (this then next): x -> next(this(x)), matching right-action notation x(ab).
  GroupMap then(const GroupMap& next) const {
    std::vector<elem> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = next.images_[images_[x]];
    return GroupMap(source_, next.target_, std::move(im));
  }

  GroupMap inverse() const {
    std::vector<elem> im(images_.size());
    for (elem x = 0; x < images_.size(); ++x) im[images_[x]] = x;
    return GroupMap(target_, source_, std::move(im));
  }

  friend bool operator==(const GroupMap& a, const GroupMap& b) { return a.images_ == b.images_; }

 private:
  Group source_;
  Group target_;
  std::vector<elem> images_;
};

/// Endomorphism power; negative exponents require a bijection.
inline GroupMap power(const GroupMap& f, long long k) {
  GroupMap base = k < 0 ? f.inverse() : f;
  if (k < 0) k = -k;
  GroupMap r = GroupMap::identity(f.source());
  for (long long i = 0; i < k; ++i) r = r.then(base);
  return r;
}

/// Order of a bijective self-map, or 0 if it exceeds `cap` iterations.
inline std::uint64_t map_order(const GroupMap& f, std::uint64_t cap = 1'000'000) {
  std::vector<elem> cur = f.images();
  const auto& im = f.images();
  for (std::uint64_t k = 1; k <= cap; ++k) {
    bool id = true;
    for (elem x = 0; x < cur.size() && id; ++x) id = cur[x] == x;
    if (id) return k;
    for (auto& y : cur) y = im[y];
  }
  return 0;
}

/// A left action of `actor` on `acted` by automorphisms: act(h1 h2) = act(h1) o act(h2).
class Action {
 public:
  Action() = default;
  Action(Group actor, Group acted, std::vector<std::vector<elem>> maps)
      : actor_(std::move(actor)), acted_(std::move(acted)), maps_(std::move(maps)) {
    if (maps_.size() != actor_.order()) throw error(errc::bad_params, "action needs one map per actor element");
    for (const auto& m : maps_)
      if (m.size() != acted_.order()) throw error(errc::bad_params, "action map has wrong length");
  }

  static Action trivial(const Group& actor, const Group& acted) {
    std::vector<elem> id(acted.order());
    std::iota(id.begin(), id.end(), 0);
    return Action(actor, acted, std::vector<std::vector<elem>>(actor.order(), id));
  }

  /// Builds an action of a cyclic group given by its generator's automorphism.
  /// `actor` must be cyclic with generator `gen`.
  static Action from_generator(const Group& actor, elem gen, const Group& acted, const std::vector<elem>& gen_map) {
    std::vector<std::vector<elem>> maps(actor.order());
    std::vector<elem> cur(acted.order());
    std::iota(cur.begin(), cur.end(), 0);
    elem h = 0;
    for (std::size_t k = 0; k < actor.order(); ++k) {
      maps[h] = cur;
      std::vector<elem> next(cur.size());
      for (std::size_t x = 0; x < cur.size(); ++x) next[x] = cur[gen_map[x]];
      cur = std::move(next);
      h = actor.mul(h, gen);
    }
    return Action(actor, acted, std::move(maps));
  }

  const Group& actor() const { return actor_; }
  const Group& acted() const { return acted_; }
  elem apply(elem h, elem n) const { return maps_[h][n]; }
  const std::vector<elem>& map_of(elem h) const { return maps_[h]; }

  GroupMap automorphism(elem h) const { return GroupMap(acted_, acted_, maps_[h]); }

  /// Every map is an automorphism and the assignment is a homomorphism.
  bool is_valid() const {
    for (elem h = 0; h < actor_.order(); ++h)
      if (!automorphism(h).is_automorphism()) return false;
    for (elem n = 0; n < acted_.order(); ++n)
      if (maps_[0][n] != n) return false;
    for (elem a = 0; a < actor_.order(); ++a)
      for (elem b = 0; b < actor_.order(); ++b) {
        const auto& ab = maps_[actor_.mul(a, b)];
        for (elem n = 0; n < acted_.order(); ++n)
          if (ab[n] != maps_[a][maps_[b][n]]) return false;
      }
    return true;
  }

  /// Elements of the actor acting trivially.
  std::vector<elem> kernel() const {
    std::vector<elem> out;
    for (elem h = 0; h < actor_.order(); ++h)
      if (stabilizes(h, all())) out.push_back(h);
    return out;
  }

  /// Elements of the actor fixing n.
  std::vector<elem> stabilizer(elem n) const {
    std::vector<elem> out;
    for (elem h = 0; h < actor_.order(); ++h)
      if (maps_[h][n] == n) out.push_back(h);
    return out;
  }

 private:
  std::vector<elem> all() const {
    std::vector<elem> v(acted_.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
  bool stabilizes(elem h, const std::vector<elem>& xs) const {
    for (elem x : xs)
      if (maps_[h][x] != x) return false;
    return true;
  }

  Group actor_;
  Group acted_;
  std::vector<std::vector<elem>> maps_;
};

}  // namespace fgt
