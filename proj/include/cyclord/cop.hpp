// Cycles and order-preserving maps between finite circular orders:
// verification with minimal witnesses, composition, enumeration, and
// automorphism groups.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "orders.hpp"

namespace cyclord {

/// Cycle test per the two-condition definition: index triples in cyclic
/// ascending order with pairwise-distinct values must land on oriented host
/// triples, and every repeated value must occupy one cyclic block of indices.
template <class L>
bool is_cycle(const circ_order<L>& host, const std::vector<L>& v) {
  const std::size_t n = v.size();
  for (const L& x : v) host.position(x);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if ((j + n - i) % n >= (k + n - i) % n) continue;  // not an index triple
        if (v[i] == v[j] || v[j] == v[k] || v[i] == v[k]) continue;
        if (!host.triple(v[i], v[j], v[k])) return false;
      }

  std::map<L, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i < n; ++i) occurrences[v[i]].push_back(i);
  for (const auto& [value, idx] : occurrences) {
    if (idx.size() == n) continue;  // constant tuple: one block
    std::size_t breaks = 0;
    for (std::size_t i : idx) {
      bool next_in = false;
      for (std::size_t j : idx)
        if (j == (i + 1) % n) next_in = true;
      if (!next_in) ++breaks;
    }
    if (breaks > 1) return false;
  }
  return true;
}

template <class L>
bool is_injective_cycle(const circ_order<L>& host, const std::vector<L>& v) {
  std::set<L> seen(v.begin(), v.end());
  return seen.size() == v.size() && is_cycle(host, v);
}

enum class cop_verdict_kind { cop, fails1, fails2 };

template <class L>
struct cop_verdict {
  cop_verdict_kind kind = cop_verdict_kind::cop;
  std::vector<L> witness;  // oriented triple for fails1, label pair for fails2
  bool is_cop() const { return kind == cop_verdict_kind::cop; }
};

namespace detail {

template <class L1, class L2>
const L2& image_of(const std::map<L1, L2>& f, const L1& x) {
  auto it = f.find(x);
  if (it == f.end()) throw std::invalid_argument("cop_check: mapping is not total on the domain");
  return it->second;
}

}  // namespace detail

/// Condition (1): an oriented domain triple with pairwise-distinct images must
/// map to an oriented codomain triple.  Returns the lexicographically least
/// witness in canonical positions, if any.
template <class L1, class L2>
std::optional<std::vector<L1>> cop_condition1(const std::map<L1, L2>& f, const circ_order<L1>& x1,
                                              const circ_order<L2>& x2) {
  const auto& s = x1.cycle();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if ((j + n - i) % n >= (k + n - i) % n) continue;
        const L2& fa = detail::image_of(f, s[i]);
        const L2& fb = detail::image_of(f, s[j]);
        const L2& fc = detail::image_of(f, s[k]);
        if (fa == fb || fb == fc || fa == fc) continue;
        if (!x2.triple(fa, fb, fc)) return std::vector<L1>{s[i], s[j], s[k]};
      }
  return std::nullopt;
}

/// Condition (2): whenever two points share an image, the map must be
/// constant on one of the two closed intervals joining them.
template <class L1, class L2>
std::optional<std::vector<L1>> cop_condition2(const std::map<L1, L2>& f, const circ_order<L1>& x1) {
  const auto& s = x1.cycle();
  const std::size_t n = s.size();
  auto constant_on = [&](const std::vector<L1>& arc, const L2& value) {
    for (const L1& x : arc)
      if (detail::image_of(f, x) != value) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const L2& v = detail::image_of(f, s[i]);
      if (v != detail::image_of(f, s[j])) continue;
      if (!constant_on(interval(x1, s[i], s[j], interval_kind::closed), v) &&
          !constant_on(interval(x1, s[j], s[i], interval_kind::closed), v))
        return std::vector<L1>{s[i], s[j]};
    }
  return std::nullopt;
}

template <class L1, class L2>
cop_verdict<L1> cop_check(const std::map<L1, L2>& f, const circ_order<L1>& x1,
                          const circ_order<L2>& x2) {
  if (f.size() != x1.size())
    throw std::invalid_argument("cop_check: mapping is not total on the domain");
  for (const auto& [x, y] : f) {
    x1.position(x);
    x2.position(y);
  }
  if (auto w = cop_condition1(f, x1, x2)) return {cop_verdict_kind::fails1, std::move(*w)};
  if (auto w = cop_condition2(f, x1)) return {cop_verdict_kind::fails2, std::move(*w)};
  return {};
}

/// All fibers convex: the equivalent reading of condition (2), kept as an
/// independent route for cross-checking.
template <class L1, class L2>
bool fibers_convex(const std::map<L1, L2>& f, const circ_order<L1>& x1) {
  std::map<L2, std::vector<L1>> fibers;
  for (const auto& [x, y] : f) fibers[y].push_back(x);
  for (const auto& [value, fiber] : fibers)
    if (!is_convex(x1, fiber)) return false;
  return true;
}

/// A verified map between circular orders; the verdict is recomputed on
/// construction, never trusted from the caller.
template <std::totally_ordered L1, std::totally_ordered L2 = L1>
struct cop_map {
  circ_order<L1> domain;
  circ_order<L2> codomain;
  std::map<L1, L2> table;
  cop_verdict<L1> verdict;

  static cop_map make(circ_order<L1> dom, circ_order<L2> cod, std::map<L1, L2> tab) {
    auto v = cop_check(tab, dom, cod);
    return cop_map{std::move(dom), std::move(cod), std::move(tab), std::move(v)};
  }

  const L2& operator()(const L1& x) const { return detail::image_of(table, x); }

  bool is_bijection() const {
    std::set<L2> image;
    for (const auto& [x, y] : table) image.insert(y);
    return image.size() == codomain.size() && table.size() == codomain.size();
  }

  bool operator==(const cop_map& o) const {
    return domain == o.domain && codomain == o.codomain && table == o.table;
  }
};

/// Pair order preservation for maps between chains.
template <class L1, class L2>
bool lop_check(const std::map<L1, L2>& f, const lin_order<L1>& l1, const lin_order<L2>& l2) {
  if (f.size() != l1.size())
    throw std::invalid_argument("lop_check: mapping is not total on the domain");
  for (const auto& [x, y] : f) {
    l1.position(x);
    l2.position(y);
  }
  const auto& s = l1.chain();
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!l2.leq(detail::image_of(f, s[i]), detail::image_of(f, s[i + 1]))) return false;
  return true;
}

/// A verified map between chains; preservation is recomputed on construction,
/// never trusted from the caller.
template <std::totally_ordered L1, std::totally_ordered L2 = L1>
struct lop_map {
  lin_order<L1> domain;
  lin_order<L2> codomain;
  std::map<L1, L2> table;
  bool preserves = false;

  static lop_map make(lin_order<L1> dom, lin_order<L2> cod, std::map<L1, L2> tab) {
    bool ok = lop_check(tab, dom, cod);
    return lop_map{std::move(dom), std::move(cod), std::move(tab), ok};
  }

  const L2& operator()(const L1& x) const { return detail::image_of(table, x); }

  bool is_bijection() const {
    std::set<L2> image;
    for (const auto& [x, y] : table) image.insert(y);
    return image.size() == codomain.size() && table.size() == codomain.size();
  }

  bool operator==(const lop_map& o) const {
    return domain == o.domain && codomain == o.codomain && table == o.table;
  }
};

/// Composition f after g; the composite verdict is re-verified.
template <class L1, class L2, class L3>
cop_map<L1, L3> compose(const cop_map<L2, L3>& f, const cop_map<L1, L2>& g) {
  if (!(g.codomain == f.domain)) throw std::invalid_argument("compose: domain mismatch");
  std::map<L1, L3> h;
  for (const auto& [x, y] : g.table) h.emplace(x, f(y));
  return cop_map<L1, L3>::make(g.domain, f.codomain, std::move(h));
}

template <class L1, class L2, class L3>
lop_map<L1, L3> compose(const lop_map<L2, L3>& f, const lop_map<L1, L2>& g) {
  if (!(g.codomain == f.domain)) throw std::invalid_argument("compose: domain mismatch");
  std::map<L1, L3> h;
  for (const auto& [x, y] : g.table) h.emplace(x, f(y));
  return lop_map<L1, L3>::make(g.domain, f.codomain, std::move(h));
}

/// A set of permutations of a fixed ground set, closed under composition and
/// inverse (verified on construction).  Permutations are position-image rows.
template <std::totally_ordered L>
class perm_group {
public:
  perm_group(std::vector<L> ground, std::vector<std::vector<std::size_t>> elements)
      : ground_(std::move(ground)), elems_(std::move(elements)) {
    const std::size_t n = ground_.size();
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<std::size_t>> have(elems_.begin(), elems_.end());
    if (!have.count(id)) throw std::invalid_argument("perm_group: identity missing");
    for (const auto& p : elems_) {
      std::set<std::size_t> img(p.begin(), p.end());
      if (p.size() != n || img.size() != n)
        throw std::invalid_argument("perm_group: element is not a permutation");
      std::vector<std::size_t> pinv(n);
      for (std::size_t i = 0; i < n; ++i) pinv[p[i]] = i;
      if (!have.count(pinv)) throw std::invalid_argument("perm_group: not closed under inverse");
      for (const auto& q : elems_) {
        std::vector<std::size_t> pq(n);
        for (std::size_t i = 0; i < n; ++i) pq[i] = p[q[i]];
        if (!have.count(pq)) throw std::invalid_argument("perm_group: not closed under composition");
      }
    }
  }

  const std::vector<L>& ground() const { return ground_; }
  const std::vector<std::vector<std::size_t>>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  std::map<L, L> as_map(std::size_t index) const {
    std::map<L, L> out;
    for (std::size_t i = 0; i < ground_.size(); ++i) out.emplace(ground_[i], ground_[elems_[index][i]]);
    return out;
  }

  /// True when some element's power sequence exhausts the group.
  bool is_cyclic() const {
    const std::size_t n = ground_.size();
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : elems_) {
      std::set<std::vector<std::size_t>> seen;
      std::vector<std::size_t> cur = id;
      do {
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = g[cur[i]];
        cur = std::move(next);
        seen.insert(cur);
      } while (cur != id);
      if (seen.size() == elems_.size()) return true;
    }
    return false;
  }

private:
  std::vector<L> ground_;
  std::vector<std::vector<std::size_t>> elems_;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> all_position_perms(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

inline constexpr std::size_t default_aut_bound = 8;

/// All COP bijections of a circular order.  For a canonical n-circle this is
/// the n rotations.
template <class L>
perm_group<L> automorphism_group(const circ_order<L>& c,
                                 std::size_t bound = default_aut_bound) {
  if (c.size() > bound)
    throw std::length_error("automorphism_group: size exceeds the configured bound");
  const auto& s = c.cycle();
  std::vector<std::vector<std::size_t>> keep;
  for (auto& p : detail::all_position_perms(c.size())) {
    std::map<L, L> f;
    for (std::size_t i = 0; i < s.size(); ++i) f.emplace(s[i], s[p[i]]);
    if (cop_check(f, c, c).is_cop()) keep.push_back(p);
  }
  return perm_group<L>(s, std::move(keep));
}

/// All LOP bijections of a chain (always just the identity on finite chains;
/// computed honestly rather than asserted).
template <class L>
perm_group<L> automorphism_group(const lin_order<L>& l,
                                 std::size_t bound = default_aut_bound) {
  if (l.size() > bound)
    throw std::length_error("automorphism_group: size exceeds the configured bound");
  const auto& s = l.chain();
  std::vector<std::vector<std::size_t>> keep;
  for (auto& p : detail::all_position_perms(l.size())) {
    std::map<L, L> f;
    for (std::size_t i = 0; i < s.size(); ++i) f.emplace(s[i], s[p[i]]);
    if (lop_check(f, l, l)) keep.push_back(p);
  }
  return perm_group<L>(s, std::move(keep));
}

inline constexpr std::size_t default_enum_budget = 10'000'000;

/// Every COP map from x1 to x2, in lexicographic table order.  Refuses (rather
/// than samples) when the raw candidate count exceeds the budget.
template <class L1, class L2>
std::vector<cop_map<L1, L2>> enumerate_cop_maps(const circ_order<L1>& x1,
                                                const circ_order<L2>& x2,
                                                std::size_t budget = default_enum_budget) {
  std::vector<cop_map<L1, L2>> out;
  const std::size_t n = x1.size(), m = x2.size();
  if (n == 0) {
    out.push_back(cop_map<L1, L2>::make(x1, x2, {}));
    return out;
  }
  if (m == 0) return out;  // no maps into the empty order

  double raw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    raw *= static_cast<double>(m);
    if (raw > static_cast<double>(budget))
      throw std::length_error("enumerate_cop_maps: candidate count exceeds the budget");
  }

  std::vector<std::size_t> pick(n, 0);
  const auto& dom = x1.cycle();
  const auto& cod = x2.cycle();
  for (;;) {
    std::map<L1, L2> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace(dom[i], cod[pick[i]]);
    auto v = cop_check(f, x1, x2);
    if (v.is_cop()) out.push_back(cop_map<L1, L2>{x1, x2, std::move(f), std::move(v)});

    std::size_t i = n;
    while (i > 0) {
      if (++pick[i - 1] < m) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace cyclord
