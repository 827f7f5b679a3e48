// Finite quotients of a circular or linear order along marked cycles/chains:
// disjoint block covers, the projections onto the glued quotients, joins of
// marker sets, bonding maps between quotients, induced quotient maps of order
// automorphisms, join-closed towers with verified coherence and composition
// laws, coherent threads (the finite truncation of the inverse limit), and
// DOT export of a tower's poset.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cop.hpp"
#include "orders.hpp"

namespace cyclord {

// ---------------------------------------------------------------------------
// Block identifiers.

enum class block_kind { point, interval, ray_below, ray_above };

/// Canonical name of one block of a cover: a point block carries its label,
/// an interval block carries its ordered endpoint pair (the open stretch from
/// a to b), and chain covers add the two rays.
template <std::totally_ordered L>
struct block_id {
  block_kind kind = block_kind::point;
  L a{};
  L b{};

  static block_id point(L x) { return {block_kind::point, x, x}; }
  static block_id interval(L from, L to) { return {block_kind::interval, std::move(from), std::move(to)}; }
  static block_id ray_below(L x) { return {block_kind::ray_below, x, x}; }
  static block_id ray_above(L x) { return {block_kind::ray_above, x, x}; }

  friend bool operator==(const block_id& x, const block_id& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const block_id& x, const block_id& y) { return !(x == y); }
  friend bool operator<(const block_id& x, const block_id& y) {
    if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    if (!(x.a == y.a)) return x.a < y.a;
    return x.b < y.b;
  }
  friend bool operator>(const block_id& x, const block_id& y) { return y < x; }
  friend bool operator<=(const block_id& x, const block_id& y) { return !(y < x); }
  friend bool operator>=(const block_id& x, const block_id& y) { return !(x < y); }
};

/// Human-readable block name (needs streamable labels).
template <class L>
std::string block_label(const block_id<L>& b) {
  std::ostringstream os;
  switch (b.kind) {
    case block_kind::point: os << b.a; break;
    case block_kind::interval: os << "(" << b.a << "," << b.b << ")"; break;
    case block_kind::ray_below: os << "(-inf," << b.a << ")"; break;
    case block_kind::ray_above: os << "(" << b.a << ",+inf)"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cycle covers of a circular order.

/// The disjoint cover of a circular order by the points of a marked cycle and
/// the nonempty open intervals between consecutive markers, together with the
/// glued finite quotient and the verified projection onto it.
template <std::totally_ordered L>
struct cycle_cover {
  using label_type = L;
  using bonding_type = cop_map<block_id<L>, block_id<L>>;

  circ_order<L> host;
  std::vector<L> support;                         // markers, least label first
  std::vector<block_id<L>> blocks;                // in cyclic order from support.front()
  std::map<block_id<L>, std::vector<L>> members;  // host labels inside each block
  circ_order<block_id<L>> quotient;
  cop_map<L, block_id<L>> projection;
};

namespace detail {

/// Validates a marker tuple and rotates it so its least label comes first
/// (the canonical representative of its cyclic equivalence class).
template <class L>
std::vector<L> normalize_support(const circ_order<L>& host, std::vector<L> f) {
  if (f.empty()) throw std::invalid_argument("cycle cover: the marker cycle must be nonempty");
  for (const L& t : f) host.position(t);
  if (!is_injective_cycle(host, f))
    throw std::invalid_argument("cycle cover: markers must form an injective cycle of the host");
  auto mn = std::min_element(f.begin(), f.end());
  std::rotate(f.begin(), mn, f.end());
  return f;
}

/// Validates a marker tuple for a chain host: strictly ascending, no rotation
/// freedom to normalize away.
template <class L>
std::vector<L> normalize_support(const lin_order<L>& host, std::vector<L> f) {
  if (f.empty()) throw std::invalid_argument("chain cover: the marker chain must be nonempty");
  for (const L& t : f) host.position(t);
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!host.less(f[i], f[i + 1]))
      throw std::invalid_argument("chain cover: markers must form an ascending chain of the host");
  return f;
}

}  // namespace detail

template <std::totally_ordered L>
cycle_cover<L> build_cycle_cover(const circ_order<L>& host, std::vector<L> markers) {
  cycle_cover<L> out;
  out.host = host;
  out.support = detail::normalize_support(host, std::move(markers));
  const std::size_t m = out.support.size();
  const std::size_t n = host.size();

  std::map<L, block_id<L>> table;
  for (std::size_t i = 0; i < m; ++i) {
    const L& cur = out.support[i];
    const L& nxt = out.support[(i + 1) % m];
    auto pt = block_id<L>::point(cur);
    out.blocks.push_back(pt);
    out.members[pt] = {cur};
    table.emplace(cur, pt);

    std::size_t pcur = host.position(cur);
    std::size_t gap = (host.position(nxt) + n - pcur - 1) % n;  // m=1 wraps to n-1
    if (gap > 0) {
      auto iv = block_id<L>::interval(cur, nxt);
      out.blocks.push_back(iv);
      auto& inside = out.members[iv];
      for (std::size_t t = 1; t <= gap; ++t) {
        const L& x = host.cycle()[(pcur + t) % n];
        inside.push_back(x);
        table.emplace(x, iv);
      }
    }
  }

  out.quotient = circ_order<block_id<L>>(out.blocks);
  out.projection = cop_map<L, block_id<L>>::make(host, out.quotient, std::move(table));
  if (!out.projection.verdict.is_cop())
    throw std::logic_error("build_cycle_cover: projection failed its own verification");
  if (out.blocks.size() > 2 * m)
    throw std::logic_error("build_cycle_cover: more than 2m blocks");
  return out;
}

/// Support inclusion: is c1's marker set contained in c2's?  (The marker count
/// inequality follows.)
template <class L>
bool sub_cycle(const cycle_cover<L>& c1, const cycle_cover<L>& c2) {
  std::set<L> s2(c2.support.begin(), c2.support.end());
  for (const L& t : c1.support)
    if (!s2.count(t)) return false;
  return true;
}

/// The smallest common refinement marker cycle: the union of the supports in
/// the host's cyclic order, least label first.
template <std::totally_ordered L>
std::vector<L> join_cycles(const std::vector<L>& f1, const std::vector<L>& f2,
                           const circ_order<L>& host) {
  (void)detail::normalize_support(host, f1);
  (void)detail::normalize_support(host, f2);
  std::set<L> support(f1.begin(), f1.end());
  support.insert(f2.begin(), f2.end());
  std::vector<L> out(support.begin(), support.end());
  std::sort(out.begin(), out.end(),
            [&](const L& x, const L& y) { return host.position(x) < host.position(y); });
  auto mn = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), mn, out.end());
  return out;
}

namespace detail {

template <class L1, class L2>
bool map_preserves(const cop_map<L1, L2>& m) {
  return m.verdict.is_cop();
}
template <class L1, class L2>
bool map_preserves(const lop_map<L1, L2>& m) {
  return m.preserves;
}

// Recheck from the raw table, never trusting the stored verdict.
template <class L1, class L2>
bool map_recheck(const cop_map<L1, L2>& m) {
  return cop_check(m.table, m.domain, m.codomain).is_cop();
}
template <class L1, class L2>
bool map_recheck(const lop_map<L1, L2>& m) {
  return lop_check(m.table, m.domain, m.codomain);
}

template <class M>
bool map_onto(const M& m) {
  std::set<std::decay_t<decltype(m.table.begin()->second)>> image;
  for (const auto& [x, y] : m.table) image.insert(y);
  return image.size() == m.codomain.size();
}

template <class L>
const std::vector<L>& host_labels(const circ_order<L>& host) {
  return host.cycle();
}
template <class L>
const std::vector<L>& host_labels(const lin_order<L>& host) {
  return host.chain();
}

/// Shared core of the two bonding constructors: send each fine block to the
/// coarse block containing it, checking that the whole block lands in one
/// place, and verify order preservation, surjectivity, and coherence with the
/// projections.
template <class Cover>
typename Cover::bonding_type make_bonding(const Cover& c2, const Cover& c1) {
  using B = block_id<typename Cover::label_type>;
  std::map<B, B> table;
  for (const B& b : c2.blocks) {
    const auto& inside = c2.members.at(b);
    const B& target = c1.projection(inside.front());
    for (const auto& x : inside)
      if (!(c1.projection(x) == target))
        throw std::logic_error("bonding_map: a fine block straddles two coarse blocks");
    table.emplace(b, target);
  }
  using bond_type = typename Cover::bonding_type;
  auto bond = bond_type::make(c2.quotient, c1.quotient, std::move(table));
  if (!map_preserves(bond) || !map_onto(bond))
    throw std::logic_error("bonding_map: bonding failed its own verification");
  for (const auto& x : host_labels(c1.host))
    if (!(bond(c2.projection(x)) == c1.projection(x)))
      throw std::logic_error("bonding_map: bonding does not commute with the projections");
  return bond;
}

}  // namespace detail

/// The quotient map X_{F2} -> X_{F1} induced by refining the marker set:
/// each fine block is sent to the coarse block containing it.
template <class L>
typename cycle_cover<L>::bonding_type bonding_map(const cycle_cover<L>& c2,
                                                  const cycle_cover<L>& c1) {
  if (!(c1.host == c2.host)) throw std::invalid_argument("bonding_map: covers of different hosts");
  if (!sub_cycle(c1, c2))
    throw std::invalid_argument("bonding_map: the coarse markers are not a sub-cycle of the fine ones");
  return detail::make_bonding(c2, c1);
}

// ---------------------------------------------------------------------------
// Induced quotient maps of host automorphisms.

template <std::totally_ordered L>
struct induced_action {
  cycle_cover<L> image;                       // the cover of the translated marker cycle
  cop_map<block_id<L>, block_id<L>> map;      // X_F -> X_{gF}, an order isomorphism
};

/// An order automorphism g of the host sends the cover of F to the cover of
/// gF blockwise: marker points to marker points, gaps to gaps.
template <std::totally_ordered L>
induced_action<L> induced_quotient_action(const std::map<L, L>& g, const cycle_cover<L>& cover) {
  auto v = cop_check(g, cover.host, cover.host);
  std::set<L> image_set;
  for (const auto& [x, y] : g) image_set.insert(y);
  if (!v.is_cop() || image_set.size() != cover.host.size())
    throw std::invalid_argument("induced_quotient_action: not an order automorphism of the host");

  std::vector<L> gf;
  gf.reserve(cover.support.size());
  for (const L& t : cover.support) gf.push_back(g.at(t));

  induced_action<L> out;
  out.image = build_cycle_cover(cover.host, std::move(gf));
  std::map<block_id<L>, block_id<L>> table;
  for (const block_id<L>& b : cover.blocks) {
    block_id<L> target = b.kind == block_kind::point
                             ? block_id<L>::point(g.at(b.a))
                             : block_id<L>::interval(g.at(b.a), g.at(b.b));
    if (!out.image.quotient.contains(target))
      throw std::logic_error("induced_quotient_action: translated block missing from the image cover");
    table.emplace(b, target);
  }
  out.map = cop_map<block_id<L>, block_id<L>>::make(cover.quotient, out.image.quotient,
                                                    std::move(table));
  if (!out.map.verdict.is_cop() || !out.map.is_bijection())
    throw std::logic_error("induced_quotient_action: induced map failed its own verification");
  return out;
}

// ---------------------------------------------------------------------------
// Chain covers of a linear order.

/// Chain analog of the cycle cover: marker points, the open intervals between
/// them, and up to two unbounded rays, glued into a finite chain.
template <std::totally_ordered L>
struct chain_cover {
  using label_type = L;
  using bonding_type = lop_map<block_id<L>, block_id<L>>;

  lin_order<L> host;
  std::vector<L> support;                         // markers, ascending
  std::vector<block_id<L>> blocks;                // in chain order
  std::map<block_id<L>, std::vector<L>> members;  // host labels inside each block
  lin_order<block_id<L>> quotient;
  lop_map<L, block_id<L>> projection;
};

template <std::totally_ordered L>
chain_cover<L> build_chain_cover(const lin_order<L>& host, std::vector<L> markers) {
  chain_cover<L> out;
  out.host = host;
  out.support = detail::normalize_support(host, std::move(markers));
  const std::size_t m = out.support.size();
  const auto& chain = host.chain();

  std::map<L, block_id<L>> table;
  auto add_block = [&](block_id<L> b, std::size_t from, std::size_t to) {  // host positions [from, to)
    if (from >= to) return;
    out.blocks.push_back(b);
    auto& inside = out.members[b];
    for (std::size_t p = from; p < to; ++p) {
      inside.push_back(chain[p]);
      table.emplace(chain[p], b);
    }
  };

  add_block(block_id<L>::ray_below(out.support.front()), 0, host.position(out.support.front()));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t pcur = host.position(out.support[i]);
    add_block(block_id<L>::point(out.support[i]), pcur, pcur + 1);
    if (i + 1 < m)
      add_block(block_id<L>::interval(out.support[i], out.support[i + 1]), pcur + 1,
                host.position(out.support[i + 1]));
  }
  add_block(block_id<L>::ray_above(out.support.back()),
            host.position(out.support.back()) + 1, chain.size());

  out.quotient = lin_order<block_id<L>>(out.blocks);
  out.projection = lop_map<L, block_id<L>>::make(host, out.quotient, std::move(table));
  if (!out.projection.preserves)
    throw std::logic_error("build_chain_cover: projection failed its own verification");
  if (out.blocks.size() > 2 * m + 1)
    throw std::logic_error("build_chain_cover: more than 2m+1 blocks");
  return out;
}

template <class L>
bool sub_chain(const chain_cover<L>& c1, const chain_cover<L>& c2) {
  std::set<L> s2(c2.support.begin(), c2.support.end());
  for (const L& t : c1.support)
    if (!s2.count(t)) return false;
  return true;
}

template <std::totally_ordered L>
std::vector<L> join_chains(const std::vector<L>& f1, const std::vector<L>& f2,
                           const lin_order<L>& host) {
  (void)detail::normalize_support(host, f1);
  (void)detail::normalize_support(host, f2);
  std::set<L> support(f1.begin(), f1.end());
  support.insert(f2.begin(), f2.end());
  std::vector<L> out(support.begin(), support.end());
  std::sort(out.begin(), out.end(),
            [&](const L& x, const L& y) { return host.position(x) < host.position(y); });
  return out;
}

template <class L>
typename chain_cover<L>::bonding_type bonding_map(const chain_cover<L>& c2,
                                                  const chain_cover<L>& c1) {
  if (!(c1.host == c2.host)) throw std::invalid_argument("bonding_map: covers of different hosts");
  if (!sub_chain(c1, c2))
    throw std::invalid_argument("bonding_map: the coarse markers are not a sub-chain of the fine ones");
  return detail::make_bonding(c2, c1);
}

// ---------------------------------------------------------------------------
// Towers: join-closed families of covers with all bonding maps.

inline constexpr std::size_t default_tower_budget = 64;

/// A join-closed family of covers of one host, sorted by (marker count,
/// marker sequence), with the bonding map of every comparable pair keyed as
/// (fine level, coarse level).  Immutable after build; verify_tower re-checks
/// every law from the raw tables.
template <class Cover>
struct basic_tower {
  using cover_type = Cover;
  std::vector<Cover> levels;
  std::map<std::pair<std::size_t, std::size_t>, typename Cover::bonding_type> bondings;
};

template <std::totally_ordered L>
using tower = basic_tower<cycle_cover<L>>;
template <std::totally_ordered L>
using chain_tower = basic_tower<chain_cover<L>>;

namespace detail {

template <class L>
cycle_cover<L> build_cover(const circ_order<L>& host, std::vector<L> markers) {
  return build_cycle_cover(host, std::move(markers));
}
template <class L>
chain_cover<L> build_cover(const lin_order<L>& host, std::vector<L> markers) {
  return build_chain_cover(host, std::move(markers));
}

template <class L>
std::vector<L> join_supports(const circ_order<L>& host, const std::vector<L>& f1,
                             const std::vector<L>& f2) {
  return join_cycles(f1, f2, host);
}
template <class L>
std::vector<L> join_supports(const lin_order<L>& host, const std::vector<L>& f1,
                             const std::vector<L>& f2) {
  return join_chains(f1, f2, host);
}

template <class L>
bool sub_support(const std::vector<L>& s1, const std::vector<L>& s2) {
  std::set<L> set2(s2.begin(), s2.end());
  for (const L& t : s1)
    if (!set2.count(t)) return false;
  return true;
}

template <class L>
bool support_before(const std::vector<L>& a, const std::vector<L>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

template <class Cover, class Host, class L>
basic_tower<Cover> build_tower_impl(const Host& host, const std::vector<std::vector<L>>& seeds,
                                    std::size_t budget) {
  if (seeds.empty()) throw std::invalid_argument("build_tower: at least one marker set required");
  std::set<std::vector<L>> supports;
  for (const auto& f : seeds) supports.insert(normalize_support(host, f));

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<L>> snapshot(supports.begin(), supports.end());
    for (std::size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (std::size_t j = i + 1; j < snapshot.size() && !grew; ++j) {
        auto joined = join_supports(host, snapshot[i], snapshot[j]);
        if (supports.insert(std::move(joined)).second) {
          grew = true;
          if (supports.size() > budget)
            throw std::length_error("build_tower: join closure exceeds the level budget");
        }
      }
  }

  std::vector<std::vector<L>> ordered(supports.begin(), supports.end());
  std::sort(ordered.begin(), ordered.end(), support_before<L>);

  basic_tower<Cover> out;
  out.levels.reserve(ordered.size());
  for (auto& s : ordered) out.levels.push_back(build_cover(host, std::move(s)));
  for (std::size_t i = 0; i < out.levels.size(); ++i)
    for (std::size_t j = i + 1; j < out.levels.size(); ++j)
      if (sub_support(out.levels[i].support, out.levels[j].support))
        out.bondings.emplace(std::make_pair(j, i),
                             make_bonding(out.levels[j], out.levels[i]));
  return out;
}

}  // namespace detail

struct tower_report {
  bool ok = true;
  std::string note;  // names the first violated law
};

/// Independent verifier: re-derives every tower law from the raw tables —
/// level ordering and join closure, block partitions, projection and bonding
/// preservation/surjectivity, coherence with the projections, and the
/// composition law along comparable triples.
template <class Cover>
tower_report verify_tower(const basic_tower<Cover>& tw) {
  using L = typename Cover::label_type;
  auto fail = [](std::string note) { return tower_report{false, std::move(note)}; };
  try {
    if (tw.levels.empty()) return fail("tower has no levels");
    const auto& host = tw.levels.front().host;

    for (std::size_t i = 0; i + 1 < tw.levels.size(); ++i)
      if (!detail::support_before(tw.levels[i].support, tw.levels[i + 1].support))
        return fail("levels are not sorted by (size, support)");
    for (const auto& lv : tw.levels) {
      if (!(lv.host == host)) return fail("levels cover different hosts");
      if (!(lv.support == detail::normalize_support(host, lv.support)))
        return fail("a level's markers are not a normalized marker set of the host");
    }
    for (const auto& a : tw.levels)
      for (const auto& b : tw.levels) {
        auto joined = detail::join_supports(host, a.support, b.support);
        bool present = false;
        for (const auto& lv : tw.levels) present = present || lv.support == joined;
        if (!present) return fail("levels are not closed under joins");
      }

    for (const auto& lv : tw.levels) {
      const auto& labels = detail::host_labels(host);
      std::map<L, std::size_t> seen;
      if (lv.blocks.size() != lv.members.size() || lv.blocks.size() != lv.quotient.size())
        return fail("block list, member table, and quotient disagree");
      std::size_t total = 0;
      for (const auto& b : lv.blocks) {
        auto it = lv.members.find(b);
        if (it == lv.members.end()) return fail("a block has no member list");
        if (it->second.empty()) return fail("an empty block survived");
        if (!lv.quotient.contains(b)) return fail("a block is missing from the quotient");
        for (const auto& x : it->second) {
          if (++seen[x] > 1) return fail("a host label lies in two blocks");
          if (!(lv.projection(x) == b)) return fail("projection disagrees with the member lists");
          ++total;
        }
      }
      if (total != labels.size()) return fail("blocks do not cover the host");
      std::size_t cap = 2 * lv.support.size() + (std::is_same_v<Cover, chain_cover<L>> ? 1 : 0);
      if (lv.blocks.size() > cap) return fail("too many blocks for the marker count");
      if (!detail::map_recheck(lv.projection)) return fail("projection does not preserve the order");
      if (!detail::map_onto(lv.projection)) return fail("projection is not onto");
    }

    for (std::size_t i = 0; i < tw.levels.size(); ++i)
      for (std::size_t j = i + 1; j < tw.levels.size(); ++j) {
        bool comparable = detail::sub_support(tw.levels[i].support, tw.levels[j].support);
        auto it = tw.bondings.find({j, i});
        if (!comparable) {
          if (it != tw.bondings.end()) return fail("a bonding joins incomparable levels");
          continue;
        }
        if (it == tw.bondings.end()) return fail("a comparable pair has no bonding");
        const auto& bond = it->second;
        if (!(bond.domain == tw.levels[j].quotient) || !(bond.codomain == tw.levels[i].quotient))
          return fail("a bonding's endpoints do not match its levels");
        if (!detail::map_recheck(bond)) return fail("a bonding does not preserve the order");
        if (!detail::map_onto(bond)) return fail("a bonding is not onto");
        for (const auto& x : detail::host_labels(host))
          if (!(bond(tw.levels[j].projection(x)) == tw.levels[i].projection(x)))
            return fail("a bonding does not commute with the projections");
      }

    for (std::size_t i = 0; i < tw.levels.size(); ++i)
      for (std::size_t j = i + 1; j < tw.levels.size(); ++j)
        for (std::size_t k = j + 1; k < tw.levels.size(); ++k) {
          auto ji = tw.bondings.find({j, i});
          auto kj = tw.bondings.find({k, j});
          if (ji == tw.bondings.end() || kj == tw.bondings.end()) continue;
          auto ki = tw.bondings.find({k, i});
          if (ki == tw.bondings.end()) return fail("comparability is not transitive in the bondings");
          if (!(compose(ji->second, kj->second) == ki->second))
            return fail("the composition law fails along a comparable triple");
        }
  } catch (const std::exception& e) {
    return fail(std::string("verification raised: ") + e.what());
  }
  return {};
}

template <std::totally_ordered L>
tower<L> build_tower(const circ_order<L>& host, const std::vector<std::vector<L>>& cycles,
                     std::size_t budget = default_tower_budget) {
  auto out = detail::build_tower_impl<cycle_cover<L>>(host, cycles, budget);
  auto rep = verify_tower(out);
  if (!rep.ok) throw std::logic_error("build_tower: " + rep.note);
  return out;
}

template <std::totally_ordered L>
chain_tower<L> build_chain_tower(const lin_order<L>& host,
                                 const std::vector<std::vector<L>>& chains,
                                 std::size_t budget = default_tower_budget) {
  auto out = detail::build_tower_impl<chain_cover<L>>(host, chains, budget);
  auto rep = verify_tower(out);
  if (!rep.ok) throw std::logic_error("build_chain_tower: " + rep.note);
  return out;
}

// ---------------------------------------------------------------------------
// Threads: coherent block tuples, the finite truncation of the limit points.

template <std::totally_ordered L>
using thread = std::vector<block_id<L>>;

/// The projection tuple of one host point: always a coherent thread.
template <class Cover>
thread<typename Cover::label_type> thread_of(const basic_tower<Cover>& tw,
                                             const typename Cover::label_type& x) {
  thread<typename Cover::label_type> out;
  out.reserve(tw.levels.size());
  for (const auto& lv : tw.levels) out.push_back(lv.projection(x));
  return out;
}

/// True exactly when the tuple is coherent under every bonding map.
template <class Cover>
bool thread_check(const basic_tower<Cover>& tw, const thread<typename Cover::label_type>& th) {
  if (th.size() != tw.levels.size())
    throw std::invalid_argument("thread_check: one block per tower level required");
  for (std::size_t i = 0; i < th.size(); ++i)
    if (!tw.levels[i].quotient.contains(th[i]))
      throw std::invalid_argument("thread_check: a block does not belong to its level");
  for (const auto& [pair, bond] : tw.bondings)
    if (!(bond(th[pair.first]) == th[pair.second])) return false;
  return true;
}

inline constexpr std::size_t default_thread_budget = 1'000'000;

/// All coherent threads, by depth-first assignment level by level with
/// immediate pruning against every bonding into already-assigned levels.
template <class Cover>
std::vector<thread<typename Cover::label_type>> all_threads(
    const basic_tower<Cover>& tw, std::size_t budget = default_thread_budget) {
  using B = block_id<typename Cover::label_type>;
  std::vector<thread<typename Cover::label_type>> out;
  std::vector<B> partial;
  std::size_t explored = 0;

  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (level == tw.levels.size()) {
      out.push_back(partial);
      return;
    }
    for (const B& b : tw.levels[level].blocks) {
      if (++explored > budget)
        throw std::length_error("all_threads: enumeration budget exceeded");
      bool coherent = true;
      for (std::size_t i = 0; i < level && coherent; ++i) {
        auto it = tw.bondings.find({level, i});
        if (it != tw.bondings.end()) coherent = it->second(b) == partial[i];
      }
      if (!coherent) continue;
      partial.push_back(b);
      self(self, level + 1);
      partial.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

// ---------------------------------------------------------------------------
// DOT export.

namespace detail {

/// Pairs (j, i) where level i is an immediate predecessor of level j: the
/// remaining bondings are compositions of these.
template <class Cover>
std::vector<std::pair<std::size_t, std::size_t>> hasse_pairs(const basic_tower<Cover>& tw) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [pair, bond] : tw.bondings) {
    auto [j, i] = pair;
    bool covering = true;
    for (std::size_t k = i + 1; k < j && covering; ++k)
      if (tw.bondings.count({j, k}) && tw.bondings.count({k, i})) covering = false;
    if (covering) out.emplace_back(j, i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// GraphViz rendering: one cluster per level (its blocks as nodes), one edge
/// per covering bonding map, drawn fine-to-coarse (needs streamable labels).
template <class Cover>
std::string tower_dot(const basic_tower<Cover>& tw) {
  std::ostringstream os;
  os << "digraph tower {\n  compound=true;\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < tw.levels.size(); ++i) {
    const auto& lv = tw.levels[i];
    os << "  subgraph cluster_" << i << " {\n    label=\"markers (";
    for (std::size_t t = 0; t < lv.support.size(); ++t)
      os << (t ? "," : "") << lv.support[t];
    os << ")\";\n";
    for (std::size_t b = 0; b < lv.blocks.size(); ++b)
      os << "    b" << i << "_" << b << " [label=\"" << block_label(lv.blocks[b]) << "\"];\n";
    os << "  }\n";
  }
  for (const auto& [j, i] : detail::hasse_pairs(tw))
    os << "  b" << j << "_0 -> b" << i << "_0 [ltail=cluster_" << j << ", lhead=cluster_" << i
       << "];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Window policy for infinite hosts, and the strong monotonicity transfer.

/// Raised when an operation on an explicit finite window of an infinite order
/// touches a point outside the window.
struct window_exceeded : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Total restriction of a self-map to the window; refuses to silently clip.
template <std::totally_ordered L, class Fn>
std::map<L, L> window_restrict(const lin_order<L>& window, Fn&& g) {
  std::map<L, L> out;
  for (const L& x : window.chain()) {
    L y = g(x);
    if (!window.contains(y)) throw window_exceeded("window_restrict: image leaves the window");
    out.emplace(x, std::move(y));
  }
  return out;
}

/// Partial restriction: keeps only the points whose image stays inside.
template <std::totally_ordered L, class Fn>
std::map<L, L> window_partial(const lin_order<L>& window, Fn&& g) {
  std::map<L, L> out;
  for (const L& x : window.chain()) {
    L y = g(x);
    if (window.contains(y)) out.emplace(x, std::move(y));
  }
  return out;
}

template <class L>
struct monotone_report {
  bool hypothesis = true;   // every orbit map is monotone on the host, where defined
  bool conclusion = true;   // every projected orbit map is monotone on the quotient
  std::optional<L> witness; // first point whose orbit breaks either side
};

/// Monotonicity transfer to the quotient: list the group elements ascending
/// in a candidate group order, as (possibly partial) self-map tables of the
/// cover's host.  If every orbit x -> (g1 x, g2 x, ...) ascends in the host,
/// the projected orbits ascend in the quotient; both sides are measured and
/// reported, so a failing hypothesis is visible rather than assumed away.
template <std::totally_ordered L>
monotone_report<L> strongly_monotone_check(const chain_cover<L>& cover,
                                           const std::vector<std::map<L, L>>& group_chain) {
  monotone_report<L> out;
  for (const L& x : cover.host.chain()) {
    std::vector<L> orbit;
    for (const auto& g : group_chain) {
      auto it = g.find(x);
      if (it != g.end()) {
        cover.host.position(it->second);
        orbit.push_back(it->second);
      }
    }
    for (std::size_t i = 0; i + 1 < orbit.size(); ++i) {
      if (!cover.host.leq(orbit[i], orbit[i + 1])) {
        out.hypothesis = false;
        if (!out.witness) out.witness = x;
      }
      if (!cover.quotient.leq(cover.projection(orbit[i]), cover.projection(orbit[i + 1]))) {
        out.conclusion = false;
        if (!out.witness) out.witness = x;
      }
    }
  }
  return out;
}

}  // namespace cyclord
