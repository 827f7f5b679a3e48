// Finite linear and circular orders: ternary-relation axioms, canonical
// cyclic representations, cuts, intervals and convexity.

#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclord {

/// Hard ceiling for the cubic/quartic axiom scans unless the caller raises it.
inline constexpr std::size_t default_max_points = 64;

/// A finite strict linear order, stored as its ascending chain.
template <std::totally_ordered L>
class lin_order {
public:
  lin_order() = default;

  explicit lin_order(std::vector<L> chain) : seq_(std::move(chain)) {
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (!pos_.emplace(seq_[i], i).second)
        throw std::invalid_argument("lin_order: duplicate label in chain");
    }
  }

  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  const std::vector<L>& chain() const { return seq_; }
  bool contains(const L& x) const { return pos_.count(x) != 0; }

  std::size_t position(const L& x) const {
    auto it = pos_.find(x);
    if (it == pos_.end()) throw std::invalid_argument("lin_order: unknown label");
    return it->second;
  }

  bool less(const L& a, const L& b) const { return position(a) < position(b); }
  bool leq(const L& a, const L& b) const { return position(a) <= position(b); }

  std::optional<L> least() const {
    return seq_.empty() ? std::nullopt : std::optional<L>(seq_.front());
  }
  std::optional<L> greatest() const {
    return seq_.empty() ? std::nullopt : std::optional<L>(seq_.back());
  }

  /// Induced order on a subset of the labels, kept in the ambient order.
  lin_order restriction(const std::vector<L>& subset) const {
    std::set<L> keep(subset.begin(), subset.end());
    if (keep.size() != subset.size())
      throw std::invalid_argument("lin_order: duplicate label in subset");
    std::vector<L> out;
    for (const L& x : subset) position(x);
    for (const L& x : seq_)
      if (keep.count(x)) out.push_back(x);
    return lin_order(std::move(out));
  }

  bool operator==(const lin_order& o) const { return seq_ == o.seq_; }

private:
  std::vector<L> seq_;
  std::map<L, std::size_t> pos_;
};

/// A finite circular order.  Stored as the canonical rotation of its cyclic
/// sequence (least label first), so equal orders compare equal structurally.
template <std::totally_ordered L>
class circ_order {
public:
  circ_order() = default;

  explicit circ_order(std::vector<L> cycle) : seq_(std::move(cycle)) {
    if (!seq_.empty()) {
      auto mn = std::min_element(seq_.begin(), seq_.end());
      std::rotate(seq_.begin(), mn, seq_.end());
    }
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (!pos_.emplace(seq_[i], i).second)
        throw std::invalid_argument("circ_order: duplicate label in cycle");
    }
  }

  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }

  /// Canonical cyclic sequence (least label first).
  const std::vector<L>& cycle() const { return seq_; }

  bool contains(const L& x) const { return pos_.count(x) != 0; }

  std::size_t position(const L& x) const {
    auto it = pos_.find(x);
    if (it == pos_.end()) throw std::invalid_argument("circ_order: unknown label");
    return it->second;
  }

  /// [a,b,c]: walking forward from a meets b strictly before c.
  /// False whenever the three labels are not pairwise distinct.
  bool triple(const L& a, const L& b, const L& c) const {
    std::size_t i = position(a), j = position(b), k = position(c);
    if (i == j || j == k || i == k) return false;
    std::size_t n = seq_.size();
    return (j + n - i) % n < (k + n - i) % n;
  }

  /// The standard cut at z: z becomes least, the rest keep their cyclic order.
  lin_order<L> cut_at(const L& z) const {
    std::size_t i = position(z);
    std::vector<L> out;
    out.reserve(seq_.size());
    for (std::size_t t = 0; t < seq_.size(); ++t) out.push_back(seq_[(i + t) % seq_.size()]);
    return lin_order<L>(std::move(out));
  }

  /// Induced circular order on a subset of the labels.
  circ_order restriction(const std::vector<L>& subset) const {
    std::set<L> keep(subset.begin(), subset.end());
    if (keep.size() != subset.size())
      throw std::invalid_argument("circ_order: duplicate label in subset");
    for (const L& x : subset) position(x);
    std::vector<L> out;
    for (const L& x : seq_)
      if (keep.count(x)) out.push_back(x);
    return circ_order(std::move(out));
  }

  bool operator==(const circ_order& o) const { return seq_ == o.seq_; }

private:
  std::vector<L> seq_;
  std::map<L, std::size_t> pos_;
};

/// An arbitrary ternary relation on a finite label set; dense membership cube
/// so the quartic transitivity scan stays cheap.
template <std::totally_ordered L>
class ternary_relation {
public:
  ternary_relation() = default;

  ternary_relation(std::vector<L> points, const std::vector<std::array<L, 3>>& triples)
      : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
      throw std::invalid_argument("ternary_relation: duplicate point");
    n_ = points_.size();
    cube_.assign(n_ * n_ * n_, false);
    for (const auto& t : triples)
      cube_[slot(index(t[0]), index(t[1]), index(t[2]))] = true;
  }

  const std::vector<L>& points() const { return points_; }
  std::size_t size() const { return n_; }

  bool holds(const L& a, const L& b, const L& c) const {
    return cube_[slot(index(a), index(b), index(c))];
  }
  bool holds_at(std::size_t i, std::size_t j, std::size_t k) const {
    return cube_[slot(i, j, k)];
  }

  std::size_t triple_count() const {
    return static_cast<std::size_t>(std::count(cube_.begin(), cube_.end(), true));
  }

  /// All member triples, lexicographic in point positions.
  std::vector<std::array<L, 3>> triples() const {
    std::vector<std::array<L, 3>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (cube_[slot(i, j, k)]) out.push_back({points_[i], points_[j], points_[k]});
    return out;
  }

  bool operator==(const ternary_relation& o) const {
    return points_ == o.points_ && cube_ == o.cube_;
  }

private:
  std::size_t index(const L& x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x);
    if (it == points_.end() || *it != x)
      throw std::invalid_argument("ternary_relation: triple uses unknown point");
    return static_cast<std::size_t>(it - points_.begin());
  }
  std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * n_ + j) * n_ + k;
  }

  std::vector<L> points_;
  std::vector<bool> cube_;
  std::size_t n_ = 0;
};

enum class circ_axiom { cyclicity, asymmetry, transitivity, totality };

inline const char* axiom_name(circ_axiom a) {
  switch (a) {
    case circ_axiom::cyclicity: return "cyclicity";
    case circ_axiom::asymmetry: return "asymmetry";
    case circ_axiom::transitivity: return "transitivity";
    case circ_axiom::totality: return "totality";
  }
  return "?";
}

template <class L>
struct axiom_report {
  bool valid = false;
  std::optional<circ_axiom> failed_axiom;
  std::vector<L> witness;  // 3 labels, 4 for a transitivity failure
};

/// Checks the four circular-order axioms in the fixed order cyclicity,
/// asymmetry, transitivity, totality and reports the first failure.
/// Triples with repeated entries are rejected by the first two axioms
/// (swapping the equal pair maps such a triple onto itself), so they need
/// no separate rule.
template <class L>
axiom_report<L> verify_circular_axioms(const ternary_relation<L>& rel,
                                       std::size_t max_points = default_max_points) {
  const std::size_t n = rel.size();
  if (n > max_points)
    throw std::length_error("verify_circular_axioms: point count exceeds the configured bound");
  const auto& pts = rel.points();
  axiom_report<L> rep;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!rel.holds_at(i, j, k)) continue;
        if (!rel.holds_at(j, k, i)) {
          rep.failed_axiom = circ_axiom::cyclicity;
          rep.witness = {pts[i], pts[j], pts[k]};
          return rep;
        }
        if (rel.holds_at(j, i, k)) {
          rep.failed_axiom = circ_axiom::asymmetry;
          rep.witness = {pts[i], pts[j], pts[k]};
          return rep;
        }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!rel.holds_at(i, j, k)) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (rel.holds_at(i, k, l) && !rel.holds_at(i, j, l)) {
            rep.failed_axiom = circ_axiom::transitivity;
            rep.witness = {pts[i], pts[j], pts[k], pts[l]};
            return rep;
          }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!rel.holds_at(i, j, k) && !rel.holds_at(i, k, j)) {
          rep.failed_axiom = circ_axiom::totality;
          rep.witness = {pts[i], pts[j], pts[k]};
          return rep;
        }

  rep.valid = true;
  return rep;
}

/// The canonical circular order realizing an axiom-valid relation: cut at the
/// least point, sort the rest under [z,a,b].  Throws if the relation fails the
/// axioms.  The derived relation is checked against the input afterwards.
template <class L>
circ_order<L> canonical_circ_order(const ternary_relation<L>& rel,
                                   std::size_t max_points = default_max_points) {
  auto rep = verify_circular_axioms(rel, max_points);
  if (!rep.valid)
    throw std::invalid_argument(std::string("canonical_circ_order: relation fails ") +
                                axiom_name(*rep.failed_axiom));
  std::vector<L> seq = rel.points();
  if (seq.size() >= 3) {
    const L z = seq.front();
    std::sort(seq.begin() + 1, seq.end(),
              [&](const L& a, const L& b) { return rel.holds(z, a, b); });
  }
  circ_order<L> out(std::move(seq));
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      for (std::size_t k = 0; k < rel.size(); ++k) {
        const auto& p = rel.points();
        if (rel.holds_at(i, j, k) != out.triple(p[i], p[j], p[k]))
          throw std::logic_error("canonical_circ_order: relation is not realizable");
      }
  return out;
}

/// Derived ternary relation of a circular order (every oriented triple).
template <class L>
ternary_relation<L> derived_relation(const circ_order<L>& c) {
  std::vector<std::array<L, 3>> tr;
  const auto& s = c.cycle();
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c.triple(s[i], s[j], s[k])) tr.push_back({s[i], s[j], s[k]});
  return ternary_relation<L>(s, tr);
}

/// Standard circular order of a chain: wrap the ascending sequence around.
template <class L>
circ_order<L> circularize(const lin_order<L>& lo) {
  return circ_order<L>(lo.chain());
}

/// The standard cut of a circular order at z (z least, forward order after).
template <class L>
lin_order<L> cut_order(const circ_order<L>& c, const L& z) {
  return c.cut_at(z);
}

template <class L>
struct cut_report {
  bool valid = false;
  std::string reason;
  std::vector<L> witness;  // ascending chain triple whose oriented triple fails
};

/// A chain is a cut of a circular order when a < b < c always implies [a,b,c].
template <class L>
cut_report<L> verify_cut(const circ_order<L>& base, const lin_order<L>& chain) {
  cut_report<L> rep;
  if (base.size() != chain.size()) {
    rep.reason = "label sets differ";
    return rep;
  }
  for (const L& x : chain.chain())
    if (!base.contains(x)) {
      rep.reason = "label sets differ";
      rep.witness = {x};
      return rep;
    }
  const auto& s = chain.chain();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (!base.triple(s[i], s[j], s[k])) {
          rep.reason = "oriented triple fails";
          rep.witness = {s[i], s[j], s[k]};
          return rep;
        }
  rep.valid = true;
  return rep;
}

/// A verified cut: the pair (base circular order, compatible chain).
template <std::totally_ordered L>
struct cut {
  circ_order<L> base;
  lin_order<L> chain;

  static cut make(circ_order<L> b, lin_order<L> c) {
    auto rep = verify_cut(b, c);
    if (!rep.valid) throw std::invalid_argument("cut: chain is not a cut of the base (" + rep.reason + ")");
    return cut{std::move(b), std::move(c)};
  }
};

enum class interval_kind { open, closed, left_closed, right_closed };

/// Interval from a to b in forward traversal order.  Open means strictly
/// between; the closed variants append the endpoints they own.  For a single
/// endpoint (a == b) the open interval is empty and every closed variant is
/// the singleton {a}.
template <class L>
std::vector<L> interval(const circ_order<L>& c, const L& a, const L& b,
                        interval_kind kind = interval_kind::open) {
  std::size_t i = c.position(a), j = c.position(b);
  const std::size_t n = c.size();
  std::vector<L> strict;
  if (i != j) {
    for (std::size_t t = (i + 1) % n; t != j; t = (t + 1) % n) strict.push_back(c.cycle()[t]);
  }
  std::vector<L> out;
  if (kind == interval_kind::closed || kind == interval_kind::left_closed) out.push_back(a);
  out.insert(out.end(), strict.begin(), strict.end());
  if (i != j && (kind == interval_kind::closed || kind == interval_kind::right_closed))
    out.push_back(b);
  if (i == j && kind == interval_kind::right_closed) out.push_back(b);
  return out;
}

/// Convexity: every pair of members can see each other through one closed
/// interval staying inside the subset.
template <class L>
bool is_convex(const circ_order<L>& c, const std::vector<L>& subset) {
  std::set<std::size_t> in;
  for (const L& x : subset)
    if (!in.insert(c.position(x)).second)
      throw std::invalid_argument("is_convex: duplicate label in subset");
  const std::size_t n = c.size();
  if (in.size() <= 1 || in.size() == n) return true;
  auto walk_inside = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = (i + 1) % n; t != j; t = (t + 1) % n)
      if (!in.count(t)) return false;
    return true;
  };
  for (std::size_t i : in)
    for (std::size_t j : in)
      if (i != j && !walk_inside(i, j) && !walk_inside(j, i)) return false;
  return true;
}

/// Re-cuts a chain below a subset A: the labels strictly above all of A move
/// to the front (keeping their order), the rest follow unchanged.  The result
/// is again a cut of the same base.
template <class L>
cut<L> cut_from_subset(const circ_order<L>& base, const lin_order<L>& chain,
                       const std::vector<L>& a_subset) {
  auto pre = verify_cut(base, chain);
  if (!pre.valid)
    throw std::invalid_argument("cut_from_subset: chain is not a cut of the base (" + pre.reason + ")");
  std::set<L> a_set(a_subset.begin(), a_subset.end());
  if (a_set.size() != a_subset.size())
    throw std::invalid_argument("cut_from_subset: duplicate label in subset");
  for (const L& a : a_subset) chain.position(a);

  std::vector<L> upper, rest;
  for (const L& x : chain.chain()) {
    bool above_all = true;
    for (const L& a : a_set)
      if (!chain.less(a, x)) {
        above_all = false;
        break;
      }
    (above_all ? upper : rest).push_back(x);
  }
  upper.insert(upper.end(), rest.begin(), rest.end());
  return cut<L>::make(base, lin_order<L>(std::move(upper)));
}

/// Relabel a chain through an injective map.
template <class L, class F>
auto map_labels(const lin_order<L>& lo, F&& f) {
  using M = std::decay_t<decltype(f(std::declval<const L&>()))>;
  std::vector<M> out;
  out.reserve(lo.size());
  for (const L& x : lo.chain()) out.push_back(f(x));
  return lin_order<M>(std::move(out));
}

/// Relabel a circular order through an injective map.
template <class L, class F>
auto map_labels(const circ_order<L>& c, F&& f) {
  using M = std::decay_t<decltype(f(std::declval<const L&>()))>;
  std::vector<M> out;
  out.reserve(c.size());
  for (const L& x : c.cycle()) out.push_back(f(x));
  return circ_order<M>(std::move(out));
}

/// The standard n-point circle with labels 0..n-1.
inline circ_order<int> make_cn(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return circ_order<int>(std::move(v));
}

/// The standard n-point chain 0 < 1 < ... < n-1.
inline lin_order<int> make_chain(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return lin_order<int>(std::move(v));
}

}  // namespace cyclord
