// Built-in verification suites.  Each suite is a self-contained desk-scale
// sweep over one area of the library — exhaustive where the space is small,
// seeded-random where it is not — and reports the first failure it finds
// together with the number of checks it ran.  The command-line front end runs
// them via `selftest`, and the acceptance harness runs each one under its
// stated wall-clock budget.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclord/cascade.hpp"
#include "cyclord/cop.hpp"
#include "cyclord/ellis.hpp"
#include "cyclord/groups.hpp"
#include "cyclord/lex.hpp"
#include "cyclord/limits.hpp"
#include "cyclord/orders.hpp"
#include "cyclord/quadirr.hpp"
#include "cyclord/sturmian.hpp"

namespace cyclord {

struct suite_result {
  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, or empty
  double millis = 0.0;
};

namespace selftest_detail {

struct checker {
  suite_result& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what;
    }
  }
};

/// All circular orders on labels 0..n-1: the canonical rotations are exactly
/// the sequences starting at 0, so there are (n-1)! of them.
inline std::vector<circ_order<int>> all_circ_orders(int n) {
  std::vector<circ_order<int>> out;
  if (n <= 0) return out;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> cyc;
    cyc.reserve(static_cast<std::size_t>(n));
    cyc.push_back(0);
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// -------------------------------------------------------------------------
// Suite 1: circular-order axioms versus canonical cyclic sequences, n <= 5.

inline void suite_axioms(suite_result& r, std::uint64_t) {
  checker ck{r};
  for (int n = 1; n <= 5; ++n) {
    auto orders = all_circ_orders(n);
    std::set<std::vector<std::array<int, 3>>> distinct;
    for (const auto& c : orders) {
      auto rel = derived_relation(c);
      ck(verify_circular_axioms(rel).valid,
         "derived relation fails the axioms at n=" + std::to_string(n));
      try {
        ck(canonical_circ_order(rel) == c,
           "canonical realization differs from the source at n=" + std::to_string(n));
      } catch (const std::exception& e) {
        ck(false, std::string("realization threw: ") + e.what());
      }
      distinct.insert(rel.triples());
    }
    ck(distinct.size() == orders.size(),
       "two distinct orders share a derived relation at n=" + std::to_string(n));

    if (n < 3) continue;

    // Cross brute-force.  Totality, asymmetry, and cyclicity together say a
    // candidate relation picks exactly one orientation per unordered triple
    // and closes it under rotation; enumerate every such candidate and let
    // transitivity filter.  The valid ones must be exactly the (n-1)!
    // derived relations, each realized by its unique canonical sequence.
    std::vector<std::array<int, 3>> base;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) base.push_back({i, j, k});
    std::vector<int> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 0);
    std::size_t valid = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << base.size()); ++bits) {
      std::vector<std::array<int, 3>> triples;
      for (std::size_t t = 0; t < base.size(); ++t) {
        auto [i, j, k] = base[t];
        std::array<int, 3> o = (bits >> t) & 1 ? std::array<int, 3>{i, j, k}
                                                : std::array<int, 3>{i, k, j};
        triples.push_back(o);
        triples.push_back({o[1], o[2], o[0]});
        triples.push_back({o[2], o[0], o[1]});
      }
      ternary_relation<int> rel(pts, triples);
      if (!verify_circular_axioms(rel).valid) continue;
      ++valid;
      try {
        auto c = canonical_circ_order(rel);
        ck(derived_relation(c) == rel, "realized order disagrees with its relation");
      } catch (const std::exception& e) {
        ck(false, std::string("a valid relation failed to realize: ") + e.what());
      }
    }
    ck(valid == orders.size(), "axiom-valid relation count differs from (n-1)! at n=" +
                                   std::to_string(n));

    // Dropping a single triple from a derived relation must break an axiom.
    for (const auto& c : orders) {
      auto all = derived_relation(c).triples();
      std::vector<std::array<int, 3>> cut(all.begin() + 1, all.end());
      ck(!verify_circular_axioms(ternary_relation<int>(pts, cut)).valid,
         "a perturbed relation still passes the axioms at n=" + std::to_string(n));
    }
  }
}

// -------------------------------------------------------------------------
// Suite 2: cut round-trip, |C| <= 6.

inline void suite_cut(suite_result& r, std::uint64_t) {
  checker ck{r};
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : all_circ_orders(n))
      for (int z : c.cycle())
        ck(circularize(cut_order(c, z)) == c,
           "circularize(cut) is not the identity at n=" + std::to_string(n) + ", z=" +
               std::to_string(z));
}

// -------------------------------------------------------------------------
// Suite 3: condition (1) implies condition (2) for maps between standard
// cycles, m,n <= 5, image size >= 3.

inline void suite_cop(suite_result& r, std::uint64_t) {
  checker ck{r};
  std::size_t implications = 0;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      auto cm = make_cn(m);
      auto cn = make_cn(n);
      std::vector<int> img(static_cast<std::size_t>(m), 0);
      while (true) {
        std::map<int, int> f;
        std::set<int> image;
        for (int x = 0; x < m; ++x) {
          f.emplace(x, img[static_cast<std::size_t>(x)]);
          image.insert(img[static_cast<std::size_t>(x)]);
        }
        // Independent route for condition (2): fibers are convex.
        ck((cop_condition2(f, cm) == std::nullopt) == fibers_convex(f, cm),
           "condition (2) disagrees with fiber convexity");
        if (image.size() >= 3 && !cop_condition1(f, cm, cn)) {
          ++implications;
          ck(cop_condition2(f, cm) == std::nullopt,
             "condition (1) held but condition (2) failed, m=" + std::to_string(m) + ", n=" +
                 std::to_string(n));
        }
        int pos = m - 1;
        while (pos >= 0 && ++img[static_cast<std::size_t>(pos)] == n) {
          img[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  ck(implications > 0, "no maps with image size >= 3 satisfied condition (1)");
}

// -------------------------------------------------------------------------
// Suite 4: fibered lifts over all surjections |X| <= 5, |Y| <= 3, all fiber
// linear orders and all base circular orders.

inline void suite_lift(suite_result& r, std::uint64_t) {
  checker ck{r};
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= std::min(x, 3); ++y) {
      auto bases = all_circ_orders(y);
      std::vector<int> img(static_cast<std::size_t>(x), 0);
      while (true) {
        std::set<int> image(img.begin(), img.end());
        if (static_cast<int>(image.size()) == y) {
          std::map<int, int> q;
          std::map<int, std::vector<int>> fiber_of;
          for (int p = 0; p < x; ++p) {
            q.emplace(p, img[static_cast<std::size_t>(p)]);
            fiber_of[img[static_cast<std::size_t>(p)]].push_back(p);
          }
          // Every linear order of every fiber.
          std::vector<int> ys;
          std::vector<std::vector<std::vector<int>>> perms;
          for (auto& [yy, fib] : fiber_of) {
            ys.push_back(yy);
            std::vector<std::vector<int>> ps;
            std::sort(fib.begin(), fib.end());
            do ps.push_back(fib); while (std::next_permutation(fib.begin(), fib.end()));
            perms.push_back(std::move(ps));
          }
          std::vector<std::size_t> pick(ys.size(), 0);
          while (true) {
            std::map<int, lin_order<int>> fibers;
            for (std::size_t t = 0; t < ys.size(); ++t)
              fibers.emplace(ys[t], lin_order<int>(perms[t][pick[t]]));
            for (const auto& base : bases) {
              ck(verify_circular_axioms(lifted_relation(q, base, fibers)).valid,
                 "a lifted relation fails the axioms");
              circ_order<int> out;
              try {
                out = fibered_lift(q, base, fibers);
              } catch (const std::exception& e) {
                ck(false, std::string("fibered_lift threw: ") + e.what());
                continue;
              }
              // Fiber orders embed: two points of one fiber against any
              // outside witness compare exactly by the fiber order.
              bool fiber_ok = true;
              for (const auto& [yy, fib] : fiber_of)
                for (int u : fib)
                  for (int v : fib) {
                    if (u == v) continue;
                    for (int w = 0; w < x; ++w)
                      if (q.at(w) != yy && out.triple(u, v, w) != fibers.at(yy).less(u, v))
                        fiber_ok = false;
                  }
              ck(fiber_ok, "a fiber order is not embedded in the lift");
              if (y == 1)
                ck(out == circularize(fibers.at(ys[0])),
                   "single-fiber lift differs from the circularized fiber");
              ck(cop_check(q, out, base).is_cop(), "the quotient map is not order-preserving");
            }
            std::size_t t = 0;
            while (t < pick.size() && ++pick[t] == perms[t].size()) pick[t++] = 0;
            if (t == pick.size()) break;
          }
        }
        int pos = x - 1;
        while (pos >= 0 && ++img[static_cast<std::size_t>(pos)] == y) {
          img[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
}

// -------------------------------------------------------------------------
// Suite 5: the left-orderability decision versus an independent cyclicity
// scan, over a corpus of groups of order <= 12.

/// Relabel any verified group to labels 0..n-1 in listed order.
template <class G>
group_table<int> indexed_group(const group_table<G>& g) {
  std::vector<int> el(g.size());
  std::iota(el.begin(), el.end(), 0);
  return group_table<int>::from_op(std::move(el), [&g](int a, int b) {
    return static_cast<int>(g.op_at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
  });
}

inline group_table<std::pair<int, int>> dihedral_group(int n) {
  std::vector<std::pair<int, int>> el;
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < 2; ++s) el.emplace_back(a, s);
  return group_table<std::pair<int, int>>::from_op(
      std::move(el), [n](std::pair<int, int> x, std::pair<int, int> y) {
        int a = x.first, i = x.second, b = y.first, j = y.second;
        return std::pair<int, int>((a + (i ? n - b : b)) % n, i ^ j);
      });
}

inline group_table<int> quaternion_group() {
  // Elements 0..7 encode (axis, sign): axis 0..3 for the units 1,i,j,k,
  // low bit set for the negative copy.
  static constexpr int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> el(8);
  std::iota(el.begin(), el.end(), 0);
  return group_table<int>::from_op(std::move(el), [](int u, int v) {
    int a = u >> 1, b = v >> 1;
    int sign = (u & 1 ? -1 : 1) * (v & 1 ? -1 : 1) * sg[a][b];
    return ax[a][b] * 2 + (sign < 0 ? 1 : 0);
  });
}

inline group_table<std::array<int, 4>> alternating_4() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> even;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    if (inv % 2 == 0) even.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_table<std::array<int, 4>>::from_op(
      std::move(even), [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
        std::array<int, 4> c{};
        for (int i = 0; i < 4; ++i)
          c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
        return c;
      });
}

inline void suite_lcord(suite_result& r, std::uint64_t) {
  checker ck{r};
  std::vector<std::pair<std::string, group_table<int>>> corpus;
  for (int n = 1; n <= 12; ++n) corpus.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  corpus.emplace_back("Z2xZ2", indexed_group(direct_product(cyclic_group(2), cyclic_group(2))));
  corpus.emplace_back("Z2xZ4", indexed_group(direct_product(cyclic_group(2), cyclic_group(4))));
  corpus.emplace_back("Z2xZ6", indexed_group(direct_product(cyclic_group(2), cyclic_group(6))));
  corpus.emplace_back("Z3xZ3", indexed_group(direct_product(cyclic_group(3), cyclic_group(3))));
  corpus.emplace_back("Z2xZ2xZ2",
                      indexed_group(direct_product(
                          cyclic_group(2), indexed_group(direct_product(cyclic_group(2),
                                                                        cyclic_group(2))))));
  for (int n : {3, 4, 5, 6})
    corpus.emplace_back("D" + std::to_string(n), indexed_group(dihedral_group(n)));
  corpus.emplace_back("Q8", indexed_group(quaternion_group()));
  corpus.emplace_back("A4", indexed_group(alternating_4()));

  for (const auto& [name, g] : corpus) {
    // Independent oracle: some element's power walk visits everything.
    bool cyclic = false;
    for (int a : g.elements()) {
      int cur = a;
      std::size_t k = 1;
      while (!(cur == g.identity()) && k <= g.size()) {
        cur = g.op(cur, a);
        ++k;
      }
      if (cur == g.identity() && k == g.size()) cyclic = true;
    }
    auto dec = finite_lcord_decide(g);
    ck(dec.orderable == cyclic, "decision disagrees with the cyclicity oracle on " + name);
    if (dec.orderable) {
      ck(dec.certificate.has_value() && dec.certificate->size() == g.size(),
         "certificate has the wrong size on " + name);
      ck(left_invariance_report(g, *dec.certificate).invariant,
         "certificate is not left-invariant on " + name);
    } else {
      ck(dec.transcript.size() == g.size(), "refusal transcript incomplete on " + name);
      bool sound = true;
      for (const auto& [a, ord] : dec.transcript)
        if (ord == g.size() || g.size() % ord != 0) sound = false;
      ck(sound, "refusal transcript lists an impossible element order on " + name);
    }
  }
}

// -------------------------------------------------------------------------
// Suite 6: cycle covers, bondings, and induced automorphism squares over
// seeded random nested marker pairs on hosts of <= 10 labels.

inline void suite_tower(suite_result& r, std::uint64_t seed) {
  checker ck{r};
  std::mt19937_64 rng(seed ^ 0x746f776572ULL);
  auto pick_subset = [&](const std::vector<int>& from) {
    std::vector<int> out;
    for (int v : from)
      if (rng() & 1) out.push_back(v);
    if (out.empty()) out.push_back(from[rng() % from.size()]);
    return out;
  };
  auto host_ordered = [](const circ_order<int>& host, const std::vector<int>& subset) {
    std::set<int> keep(subset.begin(), subset.end());
    std::vector<int> out;
    for (int v : host.cycle())
      if (keep.count(v)) out.push_back(v);
    return out;
  };

  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    if (iter % 3 == 0) std::shuffle(labels.begin(), labels.end(), rng);
    circ_order<int> host(labels);

    auto f2 = host_ordered(host, pick_subset(host.cycle()));
    auto f1 = host_ordered(host, pick_subset(f2));
    auto c2 = build_cycle_cover(host, f2);
    auto c1 = build_cycle_cover(host, f1);
    auto b = bonding_map(c2, c1);

    ck(c1.projection.verdict.is_cop() && c2.projection.verdict.is_cop() &&
           b.verdict.is_cop(),
       "a projection or bonding failed its order-preservation verdict");
    ck(c1.blocks.size() <= 2 * c1.support.size() && c2.blocks.size() <= 2 * c2.support.size(),
       "a cover exceeds 2m blocks");
    bool coherent = true;
    for (int x : host.cycle())
      if (!(b(c2.projection(x)) == c1.projection(x))) coherent = false;
    ck(coherent, "bonding does not collapse the fine projection onto the coarse one");

    auto f0 = host_ordered(host, pick_subset(f1));
    auto c0 = build_cycle_cover(host, f0);
    auto b20 = bonding_map(c2, c0);
    auto b10 = bonding_map(c1, c0);
    bool composed = true;
    for (const auto& blk : c2.blocks)
      if (!(b20(blk) == b10(b(blk)))) composed = false;
    ck(composed, "bonding composition law fails along a nested triple");

    // The order automorphisms of a finite circle are its cycle rotations.
    // Build them directly (the factorial search is only affordable on small
    // hosts), verify each honestly, and cross-check completeness against the
    // exhaustive enumeration whenever the host is small enough for it.
    std::vector<std::map<int, int>> rotations;
    for (int shift = 0; shift < n; ++shift) {
      std::map<int, int> g;
      for (int i = 0; i < n; ++i)
        g.emplace(host.cycle()[static_cast<std::size_t>(i)],
                  host.cycle()[static_cast<std::size_t>((i + shift) % n)]);
      ck(cop_check(g, host, host).is_cop(), "a cycle rotation is not an automorphism");
      rotations.push_back(std::move(g));
    }
    if (n <= 6) {
      auto aut = automorphism_group(host);
      ck(aut.order() == rotations.size(),
         "the rotation count disagrees with the exhaustive automorphism search");
    }
    for (const auto& g : rotations) {
      auto ind2 = induced_quotient_action(g, c2);
      auto ind1 = induced_quotient_action(g, c1);
      bool equi = true;
      for (int x : host.cycle())
        if (!(ind2.map(c2.projection(x)) == ind2.image.projection(g.at(x)))) equi = false;
      ck(equi, "induced quotient map does not commute with the projections");
      auto bt = bonding_map(ind2.image, ind1.image);
      bool square = true;
      for (const auto& blk : c2.blocks)
        if (!(bt(ind2.map(blk)) == ind1.map(b(blk)))) square = false;
      ck(square, "induced maps do not commute with the bondings");
    }
  }
}

// -------------------------------------------------------------------------
// Suite 7: the two-endpoint compactification carries a total bi-invariant
// linear order, verified pointwise; finite monotone fixtures transfer, and
// broken fixtures are rejected with witnesses.

inline void suite_cascade(suite_result& r, std::uint64_t) {
  checker ck{r};
  auto apply = [](const cascade_elt& e, const extended_int& x) { return cascade_apply(e, x); };
  auto compose = [](const cascade_elt& u, const cascade_elt& v) { return cascade_compose(u, v); };
  auto less = [](const extended_int& a, const extended_int& b) { return a < b; };

  auto elems = cascade_elements(10);
  std::vector<cascade_elt> gens;
  for (long long n = -10; n <= 10; ++n) gens.push_back(cascade_elt::translation(n));
  auto window = cascade_window(100).chain();
  auto rep = ellis_linear_order(elems, gens, window, apply, compose, less);
  ck(rep.hypothesis && rep.total && rep.antisymmetric && rep.transitive,
     "compactification order is not a verified linear order");
  ck(rep.right_invariant && rep.left_invariant, "compactification order is not bi-invariant");
  ck(rep.embedding, "the translations do not embed in ascending order");
  std::vector<cascade_elt> expected;
  expected.push_back(cascade_elt::limit_below());
  for (long long n = -10; n <= 10; ++n) expected.push_back(cascade_elt::translation(n));
  expected.push_back(cascade_elt::limit_above());
  ck(rep.chain == expected, "the verified chain is not limit, translations ascending, limit");

  // Finite monotone fixture on the window [-10,10]: shifts transfer to the
  // quotient of any marker chain.
  std::vector<int> pts;
  for (int v = -10; v <= 10; ++v) pts.push_back(v);
  lin_order<int> host(pts);
  auto cover = build_chain_cover(host, {-5, 0, 5});
  std::vector<std::map<int, int>> shifts;
  for (int d : {-1, 0, 1})
    shifts.push_back(window_partial(host, [d](int v) { return v + d; }));
  auto mono = strongly_monotone_check(cover, shifts);
  ck(mono.hypothesis && mono.conclusion && !mono.witness,
     "ascending shifts fail the monotone transfer");

  std::vector<std::map<int, int>> broken;
  broken.push_back(window_partial(host, [](int v) { return v; }));
  broken.push_back(window_partial(host, [](int v) { return -v; }));
  auto mono2 = strongly_monotone_check(cover, broken);
  ck(!mono2.hypothesis && mono2.witness.has_value(),
     "a non-monotone family was not rejected with a witness");

  // Broken pointwise fixture: a crossing pair must be reported, not ordered.
  using tmap = std::map<int, int>;
  std::vector<tmap> crossing = {tmap{{0, 0}, {1, 1}}, tmap{{0, 1}, {1, 0}}};
  auto apply_m = [](const tmap& m, int x) { return m.at(x); };
  auto compose_m = [](const tmap& u, const tmap& v) {
    tmap out;
    for (const auto& [x, y] : v) out.emplace(x, u.at(y));
    return out;
  };
  auto rep2 = ellis_linear_order(crossing, std::vector<tmap>{}, std::vector<int>{0, 1}, apply_m,
                                 compose_m, [](int a, int b) { return a < b; });
  ck(!rep2.total && !rep2.witness.empty() && rep2.chain.empty(),
     "a crossing pair was linearized instead of rejected");
}

// -------------------------------------------------------------------------
// Suite 8: the split-circle system — composition laws, the sandwich and its
// isolation, the minimal ideal, and order preservation of translations.

inline void suite_sturmian(suite_result& r, std::uint64_t seed) {
  checker ck{r};
  std::mt19937_64 rng(seed ^ 0x73747572ULL);
  auto rnd = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto rand_angle = [&]() {
    quad_irr x = qi(rnd(-20, 20), rnd(-20, 20));
    if (rng() & 1) x = x + quad_irr{rational(rnd(-6, 6), rnd(1, 7)), rational(0)};
    return x;
  };
  auto rand_point = [&]() { return make_ta(rand_angle(), rng() & 1 ? 1 : -1); };
  auto rand_side = [&]() { return rng() & 1 ? 1 : -1; };

  // Law 1: composing two rotations adds their exponents.
  for (int i = 0; i < 500; ++i) {
    long long m = rnd(-12, 12), n = rnd(-12, 12);
    auto u = sturmian_elt::power(m), v = sturmian_elt::power(n);
    ck(sturmian_compose(u, v) == sturmian_elt::power(m + n), "rotation composition law");
    auto x = rand_point();
    ck(sturmian_apply(sturmian_compose(u, v), x) == sturmian_apply(u, sturmian_apply(v, x)),
       "rotation composition disagrees pointwise");
  }
  // Law 2: a limit after a rotation shifts its angle, keeping its side.
  for (int i = 0; i < 500; ++i) {
    auto u = sturmian_elt::limit(rand_angle(), rand_side());
    long long n = rnd(-12, 12);
    auto v = sturmian_elt::power(n);
    ck(sturmian_compose(u, v) == sturmian_elt::limit(u.gamma + qi_alpha(n), u.side),
       "limit-after-rotation law");
    auto x = rand_point();
    ck(sturmian_apply(sturmian_compose(u, v), x) == sturmian_apply(u, sturmian_apply(v, x)),
       "limit-after-rotation disagrees pointwise");
  }
  // Law 3: a rotation after a limit shifts the limit's angle, keeping its side.
  for (int i = 0; i < 500; ++i) {
    long long n = rnd(-12, 12);
    auto u = sturmian_elt::power(n);
    auto v = sturmian_elt::limit(rand_angle(), rand_side());
    ck(sturmian_compose(u, v) == sturmian_elt::limit(v.gamma + qi_alpha(n), v.side),
       "rotation-after-limit law");
    auto x = rand_point();
    ck(sturmian_apply(sturmian_compose(u, v), x) == sturmian_apply(u, sturmian_apply(v, x)),
       "rotation-after-limit disagrees pointwise");
  }
  // Law 4: composing limits adds angles; the outer side wins.
  for (int i = 0; i < 500; ++i) {
    auto u = sturmian_elt::limit(rand_angle(), rand_side());
    auto v = sturmian_elt::limit(rand_angle(), rand_side());
    ck(sturmian_compose(u, v) == sturmian_elt::limit(u.gamma + v.gamma, u.side),
       "limit-after-limit law");
    auto x = rand_point();
    ck(sturmian_apply(sturmian_compose(u, v), x) == sturmian_apply(u, sturmian_apply(v, x)),
       "limit-after-limit disagrees pointwise");
  }

  // Sandwich: every rotation sits strictly between its two one-sided limits.
  for (long long n = -50; n <= 50; ++n)
    ck(sturmian_etriple(sturmian_elt::limit(qi_alpha(n), -1), sturmian_elt::power(n),
                        sturmian_elt::limit(qi_alpha(n), 1)),
       "sandwich fails at n=" + std::to_string(n));

  // Minimal ideal on a 40-element sample: the limit part absorbs products.
  std::vector<sturmian_elt> sample;
  for (long long n = -10; n < 10; ++n) sample.push_back(sturmian_elt::power(n));
  for (long long k = 0; k < 10; ++k) {
    sample.push_back(sturmian_elt::limit(qi_alpha(k), -1));
    sample.push_back(sturmian_elt::limit(qi_alpha(k), 1));
  }
  auto ideal = verify_minimal_ideal(sample);
  ck(ideal.closed_left && ideal.closed_right && ideal.checked > 0,
     "the limit part is not two-sidedly absorbing on the sample");

  // Translations preserve the element order on 100 oriented triples each.
  std::vector<std::array<sturmian_elt, 3>> triples;
  auto rand_elt = [&]() {
    return rng() & 1 ? sturmian_elt::power(rnd(-8, 8))
                     : sturmian_elt::limit(rand_angle(), rand_side());
  };
  while (triples.size() < 100) {
    auto a = rand_elt(), b = rand_elt(), c = rand_elt();
    if (a == b || b == c || a == c) continue;
    if (sturmian_etriple(a, b, c)) triples.push_back({a, b, c});
    else if (sturmian_etriple(a, c, b)) triples.push_back({a, c, b});
  }
  for (const auto& u :
       {sturmian_elt::power(1), sturmian_elt::power(-1), sturmian_elt::power(4),
        sturmian_elt::limit(qi(0, 0), 1), sturmian_elt::limit(qi_alpha(1), -1)})
    ck(verify_translation_cop(u, triples), "a translation reverses an oriented triple");
}

// -------------------------------------------------------------------------
// Suite 9: exact sign of p + q*alpha versus a directed floating-point
// interval oracle on 1e5 seeded inputs.

inline void suite_qisign(suite_result& r, std::uint64_t seed) {
  checker ck{r};
  std::mt19937_64 rng(seed ^ 0x7169ULL);
  const double root5 = std::sqrt(5.0);
  auto interval_sign = [&](const quad_irr& x) -> std::optional<int> {
    const double a = 2.0 * x.p.convert_to<double>() - x.q.convert_to<double>();
    const double b = x.q.convert_to<double>();
    const double v = a + b * root5;
    const double err = (std::fabs(a) + std::fabs(b) * root5 + 1e-300) * 1e-13;
    if (v > err) return 1;
    if (v < -err) return -1;
    return std::nullopt;
  };
  auto rnd = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  ck(qi_sign(qi(0, 0)) == 0, "zero does not report sign 0");
  std::size_t decided = 0;
  for (int i = 0; i < 100000; ++i) {
    long long p = rnd(-1000000, 1000000), q = rnd(-1000000, 1000000);
    quad_irr x;
    if (i % 10 == 0)
      x = quad_irr{rational(p, rnd(1, 1000)), rational(q, rnd(1, 1000))};
    else
      x = qi(p, q);
    int s = qi_sign(x);
    ck((s == 0) == (x.p == 0 && x.q == 0), "sign 0 away from the origin");
    if (auto o = interval_sign(x)) {
      ++decided;
      ck(*o == s, "exact sign disagrees with the interval oracle");
    }
  }
  ck(decided > 99000, "the interval oracle decided suspiciously few cases");
}

}  // namespace selftest_detail

inline std::vector<std::string> suite_names() {
  return {"axioms", "cut", "cop", "lift", "lcord", "tower", "cascade", "sturmian", "qisign"};
}

inline suite_result run_suite(const std::string& name, std::uint64_t seed) {
  suite_result r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  using namespace selftest_detail;
  if (name == "axioms") suite_axioms(r, seed);
  else if (name == "cut") suite_cut(r, seed);
  else if (name == "cop") suite_cop(r, seed);
  else if (name == "lift") suite_lift(r, seed);
  else if (name == "lcord") suite_lcord(r, seed);
  else if (name == "tower") suite_tower(r, seed);
  else if (name == "cascade") suite_cascade(r, seed);
  else if (name == "sturmian") suite_sturmian(r, seed);
  else if (name == "qisign") suite_qisign(r, seed);
  else throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cyclord
