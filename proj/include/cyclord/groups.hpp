// Finite group tables with verified laws, invariance checking for orders on
// groups, the cyclic-group decision for left-invariant circular orders,
// torsion witnesses, the dynamically lexicographic comparison of order
// automorphisms, and the stabilizer lift of a circular order from an orbit.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cop.hpp"
#include "lex.hpp"
#include "orders.hpp"

namespace cyclord {

/// A finite group given by its multiplication table.  The identity, inverse,
/// and associativity laws are verified on construction.
template <std::totally_ordered G>
class group_table {
public:
  group_table(std::vector<G> elements, const std::vector<std::vector<G>>& table)
      : elems_(std::move(elements)) {
    const std::size_t n = elems_.size();
    if (n == 0) throw std::invalid_argument("group_table: a group needs at least the identity");
    for (std::size_t i = 0; i < n; ++i)
      if (!pos_.emplace(elems_[i], i).second)
        throw std::invalid_argument("group_table: duplicate element label");

    if (table.size() != n) throw std::invalid_argument("group_table: table is not n by n");
    mul_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw std::invalid_argument("group_table: table is not n by n");
      for (std::size_t j = 0; j < n; ++j) mul_[i * n + j] = index(table[i][j]);
    }

    bool found_identity = false;
    for (std::size_t e = 0; e < n && !found_identity; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        ok = mul_[e * n + x] == x && mul_[x * n + e] == x;
      if (ok) {
        id_ = e;
        found_identity = true;
      }
    }
    if (!found_identity) throw std::invalid_argument("group_table: no identity element");

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul_[mul_[a * n + b] * n + c] != mul_[a * n + mul_[b * n + c]])
            throw std::invalid_argument("group_table: operation is not associative");

    inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (mul_[a * n + b] == id_ && mul_[b * n + a] == id_) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] == n) throw std::invalid_argument("group_table: an element has no inverse");
    }
  }

  /// Builds the table by evaluating a binary operation on the labels.
  template <class Op>
  static group_table from_op(std::vector<G> elements, Op&& op) {
    std::vector<std::vector<G>> table;
    table.reserve(elements.size());
    for (const G& a : elements) {
      std::vector<G> row;
      row.reserve(elements.size());
      for (const G& b : elements) row.push_back(op(a, b));
      table.push_back(std::move(row));
    }
    return group_table(std::move(elements), table);
  }

  const std::vector<G>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  std::size_t index(const G& x) const {
    auto it = pos_.find(x);
    if (it == pos_.end()) throw std::invalid_argument("group_table: unknown element label");
    return it->second;
  }
  const G& at(std::size_t i) const { return elems_.at(i); }

  std::size_t op_at(std::size_t i, std::size_t j) const { return mul_[i * size() + j]; }
  const G& op(const G& a, const G& b) const { return elems_[op_at(index(a), index(b))]; }

  const G& identity() const { return elems_[id_]; }
  const G& inverse(const G& a) const { return elems_[inv_[index(a)]]; }

  std::size_t element_order(const G& a) const {
    std::size_t i = index(a), cur = i, k = 1;
    while (cur != id_) {
      cur = op_at(cur, i);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (op_at(i, j) != op_at(j, i)) return false;
    return true;
  }

  /// First element (in listed order) whose powers exhaust the group, if any.
  std::optional<G> cyclic_generator() const {
    for (const G& a : elems_)
      if (element_order(a) == size()) return a;
    return std::nullopt;
  }
  bool is_cyclic() const { return cyclic_generator().has_value(); }

  /// Every element with the order of the cyclic subgroup it generates.
  std::vector<std::pair<G, std::size_t>> order_transcript() const {
    std::vector<std::pair<G, std::size_t>> out;
    out.reserve(size());
    for (const G& a : elems_) out.emplace_back(a, element_order(a));
    return out;
  }

  std::map<G, G> left_translation(const G& g) const {
    std::map<G, G> out;
    for (const G& x : elems_) out.emplace(x, op(g, x));
    return out;
  }
  std::map<G, G> right_translation(const G& g) const {
    std::map<G, G> out;
    for (const G& x : elems_) out.emplace(x, op(x, g));
    return out;
  }

private:
  std::vector<G> elems_;
  std::map<G, std::size_t> pos_;
  std::vector<std::size_t> mul_;
  std::size_t id_ = 0;
  std::vector<std::size_t> inv_;
};

inline group_table<int> cyclic_group(int n) {
  std::vector<int> elems(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i;
  return group_table<int>::from_op(std::move(elems), [n](int a, int b) { return (a + b) % n; });
}

template <class A, class B>
group_table<std::pair<A, B>> direct_product(const group_table<A>& g1, const group_table<B>& g2) {
  std::vector<std::pair<A, B>> elems;
  elems.reserve(g1.size() * g2.size());
  for (const A& a : g1.elements())
    for (const B& b : g2.elements()) elems.emplace_back(a, b);
  return group_table<std::pair<A, B>>::from_op(
      std::move(elems), [&](const std::pair<A, B>& x, const std::pair<A, B>& y) {
        return std::make_pair(g1.op(x.first, y.first), g2.op(x.second, y.second));
      });
}

// ---------------------------------------------------------------------------
// Invariance of orders on a group under translation.

template <class G>
struct invariance_report {
  bool invariant = true;
  std::optional<G> element;  // translating element witnessing the failure
  std::vector<G> witness;    // violated triple (circular) or adjacent pair (linear)
};

namespace detail {

template <class G, class O>
void require_same_labels(const group_table<G>& grp, const O& order, const char* what) {
  if (order.size() != grp.size())
    throw std::invalid_argument(std::string(what) + ": order labels differ from group elements");
  for (const G& g : grp.elements())
    if (!order.contains(g))
      throw std::invalid_argument(std::string(what) + ": order labels differ from group elements");
}

}  // namespace detail

/// [x,y,z] iff [gx,gy,gz] for every g: each left translation must preserve
/// the circular order (translations are bijections, so one direction counts).
template <class G>
invariance_report<G> left_invariance_report(const group_table<G>& grp, const circ_order<G>& c) {
  detail::require_same_labels(grp, c, "left_invariance_check");
  for (const G& g : grp.elements()) {
    auto v = cop_check(grp.left_translation(g), c, c);
    if (!v.is_cop()) return {false, g, std::move(v.witness)};
  }
  return {};
}

template <class G>
invariance_report<G> right_invariance_report(const group_table<G>& grp, const circ_order<G>& c) {
  detail::require_same_labels(grp, c, "right_invariance_check");
  for (const G& g : grp.elements()) {
    auto v = cop_check(grp.right_translation(g), c, c);
    if (!v.is_cop()) return {false, g, std::move(v.witness)};
  }
  return {};
}

/// a <= b iff ga <= gb for every g.
template <class G>
invariance_report<G> left_invariance_report(const group_table<G>& grp, const lin_order<G>& l) {
  detail::require_same_labels(grp, l, "left_invariance_check");
  for (const G& g : grp.elements()) {
    auto t = grp.left_translation(g);
    const auto& chain = l.chain();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!l.less(t.at(chain[i]), t.at(chain[i + 1])))
        return {false, g, {chain[i], chain[i + 1]}};
  }
  return {};
}

template <class G>
invariance_report<G> right_invariance_report(const group_table<G>& grp, const lin_order<G>& l) {
  detail::require_same_labels(grp, l, "right_invariance_check");
  for (const G& g : grp.elements()) {
    auto t = grp.right_translation(g);
    const auto& chain = l.chain();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!l.less(t.at(chain[i]), t.at(chain[i + 1])))
        return {false, g, {chain[i], chain[i + 1]}};
  }
  return {};
}

template <class G, class O>
bool left_invariance_check(const group_table<G>& grp, const O& order) {
  return left_invariance_report(grp, order).invariant;
}
template <class G, class O>
bool right_invariance_check(const group_table<G>& grp, const O& order) {
  return right_invariance_report(grp, order).invariant;
}
template <class G, class O>
bool bi_invariance_check(const group_table<G>& grp, const O& order) {
  return left_invariance_check(grp, order) && right_invariance_check(grp, order);
}

// ---------------------------------------------------------------------------
// Decision: which finite groups carry a left-invariant circular order.

template <class G>
struct lcord_decision {
  bool orderable = false;
  std::optional<G> generator;
  std::optional<circ_order<G>> certificate;
  std::vector<std::pair<G, std::size_t>> transcript;  // element orders, on refusal
};

/// A finite group admits a left-invariant circular order exactly when it is
/// cyclic; the certificate is the power sequence of the first generator, and
/// it is re-verified before being returned.
template <class G>
lcord_decision<G> finite_lcord_decide(const group_table<G>& grp) {
  lcord_decision<G> out;
  auto gen = grp.cyclic_generator();
  if (!gen) {
    out.transcript = grp.order_transcript();
    return out;
  }
  std::vector<G> powers;
  powers.reserve(grp.size());
  G cur = grp.identity();
  for (std::size_t k = 0; k < grp.size(); ++k) {
    powers.push_back(cur);
    cur = grp.op(cur, *gen);
  }
  circ_order<G> cert(std::move(powers));
  if (!left_invariance_report(grp, cert).invariant)
    throw std::logic_error("finite_lcord_decide: certificate failed its own verification");
  out.orderable = true;
  out.generator = *gen;
  out.certificate = std::move(cert);
  return out;
}

// ---------------------------------------------------------------------------
// Torsion witnesses.

enum class torsion_outcome { witness, none, inconclusive };

template <class G>
struct torsion_report {
  torsion_outcome outcome = torsion_outcome::none;
  std::optional<G> element;
  std::size_t order = 0;  // order of the witness
};

/// In a finite group every non-identity element is torsion, so the first one
/// in listed order is the witness; only the trivial group yields none.
template <class G>
torsion_report<G> torsion_obstruction(const group_table<G>& grp) {
  for (const G& a : grp.elements())
    if (!(a == grp.identity()))
      return {torsion_outcome::witness, a, grp.element_order(a)};
  return {};
}

struct torsion_probe_report {
  torsion_outcome outcome = torsion_outcome::inconclusive;
  std::vector<std::size_t> word;  // generator indices of the witness
  std::size_t order = 0;
};

/// Bounded torsion search over a generator set acting on sample points:
/// probes every generator and every two-generator product w, looking for the
/// least k in [2, depth] at which w^k fixes all samples while w itself moves
/// one.  Evidence is sample-level: a witness certifies torsion only when the
/// action separates group elements on the samples.  No witness within the
/// depth is inconclusive, never a proof of torsion-freeness.
template <class T>
torsion_probe_report torsion_obstruction(const std::vector<std::function<T(T)>>& gens,
                                         const std::vector<T>& samples, std::size_t depth) {
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t i = 0; i < gens.size(); ++i) words.push_back({i});
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) words.push_back({i, j});

  for (const auto& word : words) {
    auto apply = [&](T x) {
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = gens[*it](x);
      return x;
    };
    std::vector<T> cur = samples;
    bool moved_once = false;
    for (std::size_t k = 1; k <= depth; ++k) {
      bool all_fixed = true;
      for (std::size_t s = 0; s < samples.size(); ++s) {
        cur[s] = apply(cur[s]);
        if (!(cur[s] == samples[s])) all_fixed = false;
      }
      if (k == 1 && !all_fixed) moved_once = true;
      if (k >= 2 && all_fixed && moved_once) return {torsion_outcome::witness, word, k};
      if (k == 1 && all_fixed) break;  // word acts as identity on samples: not a witness
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Dynamically lexicographic comparison of order automorphisms.

enum class dynlex_outcome { less, greater, equal, unresolved };

inline constexpr std::size_t default_dynlex_budget = 1 << 20;

/// Compares two order-preserving self-maps of a finite chain by their first
/// difference along the enumeration.  Equal only when the enumeration covers
/// the whole space within budget; an incomplete scan is unresolved.
template <class L>
dynlex_outcome dynlex_compare(const std::map<L, L>& g1, const std::map<L, L>& g2,
                              const lin_order<L>& space, const std::vector<L>& enumeration,
                              std::size_t budget = default_dynlex_budget) {
  if (!lop_check(g1, space, space) || !lop_check(g2, space, space))
    throw std::invalid_argument("dynlex_compare: inputs must preserve the order");
  std::set<L> seen;
  std::size_t scanned = 0;
  for (const L& x : enumeration) {
    if (scanned == budget) return dynlex_outcome::unresolved;
    ++scanned;
    space.position(x);
    const L& y1 = g1.at(x);
    const L& y2 = g2.at(x);
    if (!(y1 == y2)) return space.less(y1, y2) ? dynlex_outcome::less : dynlex_outcome::greater;
    seen.insert(x);
  }
  return seen.size() == space.size() ? dynlex_outcome::equal : dynlex_outcome::unresolved;
}

/// Default enumeration: the canonical chain order.
template <class L>
dynlex_outcome dynlex_compare(const std::map<L, L>& g1, const std::map<L, L>& g2,
                              const lin_order<L>& space,
                              std::size_t budget = default_dynlex_budget) {
  return dynlex_compare(g1, g2, space, space.chain(), budget);
}

/// Oracle flavor for infinite chains: maps and the order arrive as callables.
/// Exhausting the enumeration without a difference is unresolved unless the
/// caller vouches that the enumeration covers the whole space.
template <class T, class G1, class G2, class Less>
dynlex_outcome dynlex_compare_probe(G1&& g1, G2&& g2, Less&& less,
                                    const std::vector<T>& enumeration, std::size_t budget,
                                    bool enumeration_exhaustive = false) {
  std::size_t scanned = 0;
  for (const T& x : enumeration) {
    if (scanned == budget) return dynlex_outcome::unresolved;
    ++scanned;
    const T y1 = g1(x);
    const T y2 = g2(x);
    if (!(y1 == y2)) return less(y1, y2) ? dynlex_outcome::less : dynlex_outcome::greater;
  }
  return enumeration_exhaustive ? dynlex_outcome::equal : dynlex_outcome::unresolved;
}

// ---------------------------------------------------------------------------
// Group actions on finite orders.

template <class G, class L>
void validate_action(const group_table<G>& grp, const action_table<G, L>& act,
                     const std::vector<L>& labels) {
  if (act.size() != grp.size())
    throw std::invalid_argument("action: one map per group element required");
  std::set<L> domain(labels.begin(), labels.end());
  for (const G& g : grp.elements()) {
    auto it = act.find(g);
    if (it == act.end()) throw std::invalid_argument("action: missing map for a group element");
    if (it->second.size() != labels.size())
      throw std::invalid_argument("action: map is not total on the space");
    for (const L& x : labels) {
      auto moved = it->second.find(x);
      if (moved == it->second.end() || !domain.count(moved->second))
        throw std::invalid_argument("action: map leaves the space");
    }
  }
  const auto& e = act.at(grp.identity());
  for (const L& x : labels)
    if (!(e.at(x) == x)) throw std::invalid_argument("action: identity must act trivially");
  for (const G& g : grp.elements())
    for (const G& h : grp.elements()) {
      const auto& gh = act.at(grp.op(g, h));
      const auto& gm = act.at(g);
      const auto& hm = act.at(h);
      for (const L& x : labels)
        if (!(gm.at(hm.at(x)) == gh.at(x)))
          throw std::invalid_argument("action: composition law violated");
    }
}

/// Elements acting as the identity map.  The action is effective when only
/// the group identity is in the kernel.
template <class G, class L>
std::vector<G> action_kernel(const group_table<G>& grp, const action_table<G, L>& act) {
  std::vector<G> kernel;
  for (const G& g : grp.elements()) {
    bool trivial = true;
    for (const auto& [x, y] : act.at(g))
      if (!(x == y)) {
        trivial = false;
        break;
      }
    if (trivial) kernel.push_back(g);
  }
  return kernel;
}

template <class G, class L>
bool action_effective(const group_table<G>& grp, const action_table<G, L>& act) {
  return action_kernel(grp, act).size() == 1;
}

/// Left-regular action of a group on itself.
template <class G>
action_table<G, G> regular_action(const group_table<G>& grp) {
  action_table<G, G> act;
  for (const G& g : grp.elements()) act.emplace(g, grp.left_translation(g));
  return act;
}

// ---------------------------------------------------------------------------
// Stabilizer lift: circular order on G from an orbit order and a linear
// order on the stabilizer.

template <class G, class L>
struct stabilizer_lift_result {
  circ_order<G> order;
  std::vector<G> stabilizer;     // in the supplied linear order
  std::vector<L> orbit;          // in first-reached order
  std::map<L, G> representative; // orbit point -> first element carrying the basepoint there
  bool effective = false;        // diagnostic: kernel triviality of the action
};

/// Lifts the orbit's circular order to the whole group along g -> g·a, using
/// a left-invariant linear order on the stabilizer H to order each coset
/// fiber (gh1 before gh2 iff h1 precedes h2).  Representatives are the first
/// elements, in listed order, reaching each orbit point.  The action must
/// preserve the circular order; it need not be effective (the construction
/// only uses cosets of H), and the effectiveness flag is reported as a
/// diagnostic.
template <class G, class L>
stabilizer_lift_result<G, L> stabilizer_lift(const group_table<G>& grp,
                                             const action_table<G, L>& act,
                                             const circ_order<L>& space, const L& basepoint,
                                             const lin_order<G>& h_order) {
  validate_action(grp, act, space.cycle());
  space.position(basepoint);
  for (const G& g : grp.elements())
    if (!cop_check(act.at(g), space, space).is_cop())
      throw std::invalid_argument("stabilizer_lift: action does not preserve the circular order");

  std::vector<G> stabilizer;
  for (const G& g : grp.elements())
    if (act.at(g).at(basepoint) == basepoint) stabilizer.push_back(g);
  if (h_order.size() != stabilizer.size())
    throw std::invalid_argument("stabilizer_lift: stabilizer order has the wrong labels");
  for (const G& h : stabilizer)
    if (!h_order.contains(h))
      throw std::invalid_argument("stabilizer_lift: stabilizer order has the wrong labels");
  for (const G& h : stabilizer)
    for (const G& h1 : stabilizer)
      for (const G& h2 : stabilizer)
        if (h_order.less(h1, h2) != h_order.less(grp.op(h, h1), grp.op(h, h2)))
          throw std::invalid_argument(
              "stabilizer_lift: stabilizer order is not left-invariant on the stabilizer");

  stabilizer_lift_result<G, L> out;
  out.effective = action_effective(grp, act);
  for (const G& h : h_order.chain()) out.stabilizer.push_back(h);

  std::map<G, L> q;
  for (const G& g : grp.elements()) q.emplace(g, act.at(g).at(basepoint));
  for (const G& g : grp.elements()) {
    const L& y = q.at(g);
    if (!out.representative.count(y)) {
      out.representative.emplace(y, g);
      out.orbit.push_back(y);
    }
  }

  auto base = space.restriction(out.orbit);
  std::map<L, lin_order<G>> fibers;
  for (const L& y : out.orbit) {
    std::vector<G> chain;
    chain.reserve(h_order.size());
    for (const G& h : h_order.chain()) chain.push_back(grp.op(out.representative.at(y), h));
    fibers.emplace(y, lin_order<G>(std::move(chain)));
  }
  out.order = fibered_lift(q, base, fibers);
  return out;
}

/// Lazy flavor of the same lift for infinite groups: a triple oracle built
/// from a quotient callable, an orbit triple callable, and a within-fiber
/// comparison callable.
template <class Gel, class Q, class BaseTriple, class FiberLess>
auto stabilizer_lift_oracle(Q q, BaseTriple base_triple, FiberLess fiber_less) {
  return [q = std::move(q), base_triple = std::move(base_triple),
          fiber_less = std::move(fiber_less)](const Gel& u, const Gel& v, const Gel& w) {
    return lifted_triple(u, v, w, q, base_triple, fiber_less);
  };
}

// ---------------------------------------------------------------------------
// Stabilizer-hypothesis report.

template <class G>
struct bs_report {
  bool action_preserves_order = false;
  std::optional<G> offending_element;
  bool effective = false;
  std::vector<G> stabilizer;
  bool stabilizer_trivial = false;
  bool applies = false;
  std::string note;
};

/// Reports whether the stabilizer route to a left-invariant circular order on
/// the acting group applies at the given basepoint: the action must preserve
/// the order, and the stabilizer must carry a left-invariant linear order
/// (automatic when trivial, externally supplied otherwise).
template <class G, class L>
bs_report<G> bs_condition_check(const group_table<G>& grp, const action_table<G, L>& act,
                                const circ_order<L>& space, const L& basepoint) {
  validate_action(grp, act, space.cycle());
  space.position(basepoint);
  bs_report<G> out;
  for (const G& g : grp.elements()) {
    if (!cop_check(act.at(g), space, space).is_cop()) {
      out.offending_element = g;
      out.note = "hypothesis failure: the action does not preserve the circular order";
      return out;
    }
  }
  out.action_preserves_order = true;
  out.effective = action_effective(grp, act);
  for (const G& g : grp.elements())
    if (act.at(g).at(basepoint) == basepoint) out.stabilizer.push_back(g);
  out.stabilizer_trivial = out.stabilizer.size() == 1;
  out.applies = true;
  out.note = out.stabilizer_trivial
                 ? "stabilizer trivial: the lift is the pullback of the orbit order along g -> g*basepoint"
                 : "stabilizer nontrivial: supply a left-invariant linear order on it to finish the lift";
  return out;
}

}  // namespace cyclord
