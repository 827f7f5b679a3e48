// Lexicographic products of orders, the fibered circular-order lift over a
// quotient map, equivariance checking for lifted group actions, and the
// ordered disjoint sum of linearly ordered actions.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "orders.hpp"

namespace cyclord {

/// Cyclic-ascent predicate for three distinct values of a strict order given
/// only by a `less` callable: true when the values ascend up to rotation.
template <class T, class Less>
bool cyclic_ascent(const T& x, const T& y, const T& z, Less&& less) {
  return (less(x, y) && less(y, z)) || (less(y, z) && less(z, x)) ||
         (less(z, x) && less(x, y));
}

/// The five-case triple predicate of a lifted circular order, evaluated
/// lazily: base triples when the three points project apart, a fiber
/// comparison when exactly two share a fiber, and the circularized fiber
/// order when all three coincide.  The three points must be pairwise
/// distinct; `fiber_less` compares points known to share a fiber.
template <class LX, class Q, class BaseTriple, class FiberLess>
bool lifted_triple(const LX& u, const LX& v, const LX& w, Q&& q, BaseTriple&& base_triple,
                   FiberLess&& fiber_less) {
  const auto a = q(u);
  const auto b = q(v);
  const auto c = q(w);
  const bool ab = (a == b), bc = (b == c), ca = (c == a);
  if (!ab && !bc && !ca) return base_triple(a, b, c);
  if (ab && !bc) return fiber_less(u, v);
  if (bc && !ca) return fiber_less(v, w);
  if (ca && !ab) return fiber_less(w, u);
  return cyclic_ascent(u, v, w, fiber_less);
}

/// The same five cases specialized to product pairs: first coordinates form
/// the base, second coordinates compare within fibers.
template <class A, class B, class BaseTriple, class FiberLess>
bool lex_product_triple(const std::pair<A, B>& u, const std::pair<A, B>& v,
                        const std::pair<A, B>& w, BaseTriple&& base_triple,
                        FiberLess&& fiber_less) {
  using P = std::pair<A, B>;
  return lifted_triple(
      u, v, w, [](const P& p) { return p.first; },
      base_triple,
      [&](const P& s, const P& t) { return fiber_less(s.second, t.second); });
}

/// Lexicographic product of two chains: ordered first by the left factor.
template <class A, class B>
lin_order<std::pair<A, B>> lex_lin_lin(const lin_order<A>& l1, const lin_order<B>& l2) {
  std::vector<std::pair<A, B>> chain;
  chain.reserve(l1.size() * l2.size());
  for (const A& a : l1.chain())
    for (const B& b : l2.chain()) chain.emplace_back(a, b);
  return lin_order<std::pair<A, B>>(std::move(chain));
}

/// Lexicographic product of a circular base with a linear fiber, built the
/// long way round: materialize the five-case predicate as a ternary relation,
/// then verify the circular-order axioms and canonicalize.
template <class A, class B>
circ_order<std::pair<A, B>> lex_circ_lin(const circ_order<A>& base, const lin_order<B>& fiber) {
  using P = std::pair<A, B>;
  std::vector<P> points;
  points.reserve(base.size() * fiber.size());
  for (const A& a : base.cycle())
    for (const B& b : fiber.chain()) points.emplace_back(a, b);

  auto base_triple = [&](const A& a, const A& b, const A& c) { return base.triple(a, b, c); };
  auto fiber_less = [&](const B& x, const B& y) { return fiber.less(x, y); };

  std::vector<std::array<P, 3>> triples;
  for (const P& u : points)
    for (const P& v : points)
      for (const P& w : points) {
        if (u == v || v == w || u == w) continue;
        if (lex_product_triple(u, v, w, base_triple, fiber_less)) triples.push_back({u, v, w});
      }
  return canonical_circ_order(ternary_relation<P>(points, triples));
}

namespace detail {

template <class LX, class LY>
void validate_fibration(const std::map<LX, LY>& q, const circ_order<LY>& base,
                        const std::map<LY, lin_order<LX>>& fibers) {
  std::set<LY> hit;
  for (const auto& [x, y] : q) {
    base.position(y);  // throws on unknown base label
    hit.insert(y);
  }
  if (hit.size() != base.size())
    throw std::invalid_argument("fibered_lift: quotient map is not surjective");

  std::set<LX> covered;
  for (const auto& [y, order] : fibers) {
    base.position(y);
    for (const LX& x : order.chain()) {
      auto it = q.find(x);
      if (it == q.end() || !(it->second == y))
        throw std::invalid_argument("fibered_lift: fiber order label outside its fiber");
      if (!covered.insert(x).second)
        throw std::invalid_argument("fibered_lift: overlapping fibers");
    }
  }
  if (covered.size() != q.size())
    throw std::invalid_argument("fibered_lift: fiber orders do not cover the domain");
  for (const LY& y : base.cycle())
    if (fibers.find(y) == fibers.end())
      throw std::invalid_argument("fibered_lift: missing fiber order for a base point");
}

}  // namespace detail

/// The lifted ternary relation on the total space of a fibration: base triples
/// when the three points separate, fiber comparisons when exactly two share a
/// fiber, and the circularized fiber order when all three coincide.
template <class LX, class LY>
ternary_relation<LX> lifted_relation(const std::map<LX, LY>& q, const circ_order<LY>& base,
                                     const std::map<LY, lin_order<LX>>& fibers) {
  detail::validate_fibration(q, base, fibers);
  std::vector<LX> points;
  points.reserve(q.size());
  for (const auto& [x, y] : q) points.push_back(x);

  auto pred = [&](const LX& u, const LX& v, const LX& w) {
    return lifted_triple(
        u, v, w, [&](const LX& x) { return q.at(x); },
        [&](const LY& a, const LY& b, const LY& c) { return base.triple(a, b, c); },
        [&](const LX& s, const LX& t) { return fibers.at(q.at(s)).less(s, t); });
  };

  std::vector<std::array<LX, 3>> triples;
  for (const LX& u : points)
    for (const LX& v : points)
      for (const LX& w : points) {
        if (u == v || v == w || u == w) continue;
        if (pred(u, v, w)) triples.push_back({u, v, w});
      }
  return ternary_relation<LX>(std::move(points), triples);
}

/// Canonical circular order lifted along q from a circular base and one linear
/// order per fiber.  Verifies the axioms of the lifted relation en route.
template <class LX, class LY>
circ_order<LX> fibered_lift(const std::map<LX, LY>& q, const circ_order<LY>& base,
                            const std::map<LY, lin_order<LX>>& fibers) {
  return canonical_circ_order(lifted_relation(q, base, fibers));
}

/// A family of maps indexed by group-element labels (no group laws assumed
/// here; callers wanting verified groups use the group machinery).
template <class G, class L>
using action_table = std::map<G, std::map<L, L>>;

enum class equivariance_failure { none, not_equivariant, order_violation };

template <class G, class LX>
struct equivariance_report {
  equivariance_failure kind = equivariance_failure::none;
  std::optional<G> element;
  std::vector<LX> witness;  // point where q fails to commute, or the violated triple
  bool ok() const { return kind == equivariance_failure::none; }
};

namespace detail {

template <class G, class LX, class LY>
equivariance_report<G, LX> equivariance_impl(
    const action_table<G, LX>& act_total, const action_table<G, LY>& act_base,
    const std::map<LX, LY>& q, const circ_order<LX>& lifted,
    const std::vector<std::array<LX, 3>>* samples) {
  if (act_total.size() != act_base.size())
    throw std::invalid_argument("lift_equivariance_check: element lists differ");
  for (const auto& [g, gx] : act_total)
    if (act_base.find(g) == act_base.end())
      throw std::invalid_argument("lift_equivariance_check: element lists differ");

  equivariance_report<G, LX> rep;
  const auto& s = lifted.cycle();
  const std::size_t n = s.size();

  for (const auto& [g, gx] : act_total) {
    const auto& gy = act_base.at(g);
    if (gx.size() != n)
      throw std::invalid_argument("lift_equivariance_check: action not total on the space");
    for (const LX& x : s) {
      auto moved = gx.find(x);
      if (moved == gx.end())
        throw std::invalid_argument("lift_equivariance_check: action not total on the space");
      auto qx = q.find(x);
      auto qgx = q.find(moved->second);
      if (qx == q.end() || qgx == q.end())
        throw std::invalid_argument("lift_equivariance_check: quotient map not total");
      auto base_moved = gy.find(qx->second);
      if (base_moved == gy.end())
        throw std::invalid_argument("lift_equivariance_check: base action not total");
      if (!(qgx->second == base_moved->second)) {
        rep.kind = equivariance_failure::not_equivariant;
        rep.element = g;
        rep.witness = {x};
        return rep;
      }
    }
  }

  auto violates = [&](const G& g, const LX& u, const LX& v, const LX& w) {
    const auto& gx = act_total.at(g);
    return lifted.triple(u, v, w) &&
           !lifted.triple(gx.at(u), gx.at(v), gx.at(w));
  };

  for (const auto& [g, gx] : act_total) {
    if (samples) {
      for (const auto& t : *samples)
        if (violates(g, t[0], t[1], t[2])) {
          rep.kind = equivariance_failure::order_violation;
          rep.element = g;
          rep.witness = {t[0], t[1], t[2]};
          return rep;
        }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            if (i == j || j == k || i == k) continue;
            if (violates(g, s[i], s[j], s[k])) {
              rep.kind = equivariance_failure::order_violation;
              rep.element = g;
              rep.witness = {s[i], s[j], s[k]};
              return rep;
            }
          }
    }
  }
  return rep;
}

}  // namespace detail

/// Checks that q commutes with the two actions and that every listed element
/// preserves the lifted circular order, exhaustively over all oriented
/// triples.  Failures carry the first witness in scan order (elements in key
/// order, triples lexicographic in canonical positions).
template <class G, class LX, class LY>
equivariance_report<G, LX> lift_equivariance_check(const action_table<G, LX>& act_total,
                                                   const action_table<G, LY>& act_base,
                                                   const std::map<LX, LY>& q,
                                                   const circ_order<LX>& lifted) {
  return detail::equivariance_impl(
      act_total, act_base, q, lifted,
      static_cast<const std::vector<std::array<LX, 3>>*>(nullptr));
}

/// Same check restricted to the supplied sample triples.
template <class G, class LX, class LY>
equivariance_report<G, LX> lift_equivariance_check(
    const action_table<G, LX>& act_total, const action_table<G, LY>& act_base,
    const std::map<LX, LY>& q, const circ_order<LX>& lifted,
    const std::vector<std::array<LX, 3>>& samples) {
  return detail::equivariance_impl(act_total, act_base, q, lifted, &samples);
}

/// A chain together with a family of order-preserving bijections indexed by
/// group-element labels.
template <class G, class L>
struct ordered_system {
  std::vector<G> elements;
  action_table<G, L> act;
  lin_order<L> space;
};

template <class G, class L>
bool system_is_lop(const ordered_system<G, L>& sys) {
  for (const G& g : sys.elements) {
    auto it = sys.act.find(g);
    if (it == sys.act.end() || it->second.size() != sys.space.size()) return false;
    std::set<L> image;
    for (const auto& [x, y] : it->second) {
      if (!sys.space.contains(x) || !sys.space.contains(y)) return false;
      image.insert(y);
    }
    if (image.size() != sys.space.size()) return false;
    const auto& chain = sys.space.chain();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!sys.space.less(it->second.at(chain[i]), it->second.at(chain[i + 1]))) return false;
  }
  return true;
}

template <class G, class L>
bool system_is_effective(const ordered_system<G, L>& sys) {
  std::set<std::map<L, L>> seen;
  for (const G& g : sys.elements)
    if (!seen.insert(sys.act.at(g)).second) return false;
  return true;
}

/// Ordered disjoint sum of two linearly ordered systems: every point of the
/// first space precedes every point of the second, and element pairs act
/// componentwise.  Label collisions are impossible by construction: the sum
/// labels are tagged alternatives ordered by tag first.
template <class G1, class L1, class G2, class L2>
ordered_system<std::pair<G1, G2>, std::variant<L1, L2>> ordered_sum_action(
    const ordered_system<G1, L1>& s1, const ordered_system<G2, L2>& s2) {
  if (!system_is_lop(s1) || !system_is_lop(s2))
    throw std::invalid_argument("ordered_sum_action: inputs must act by order-preserving bijections");
  if (!system_is_effective(s1) || !system_is_effective(s2))
    throw std::invalid_argument("ordered_sum_action: inputs must act effectively");

  using V = std::variant<L1, L2>;
  auto left = [](const L1& x) { return V(std::in_place_index<0>, x); };
  auto right = [](const L2& x) { return V(std::in_place_index<1>, x); };

  std::vector<V> chain;
  chain.reserve(s1.space.size() + s2.space.size());
  for (const L1& x : s1.space.chain()) chain.push_back(left(x));
  for (const L2& x : s2.space.chain()) chain.push_back(right(x));

  ordered_system<std::pair<G1, G2>, V> out;
  out.space = lin_order<V>(std::move(chain));
  for (const G1& g1 : s1.elements)
    for (const G2& g2 : s2.elements) {
      out.elements.emplace_back(g1, g2);
      std::map<V, V> table;
      for (const auto& [x, y] : s1.act.at(g1)) table.emplace(left(x), left(y));
      for (const auto& [x, y] : s2.act.at(g2)) table.emplace(right(x), right(y));
      out.act.emplace(std::make_pair(g1, g2), std::move(table));
    }

  if (!system_is_lop(out) || !system_is_effective(out))
    throw std::logic_error("ordered_sum_action: sum failed its own verification");
  return out;
}

}  // namespace cyclord
