// Cycles and order-preserving maps: frozen examples, exhaustive sweeps at
// desk scale, and cross-checks between independent characterizations.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "cyclord/cop.hpp"
#include "cyclord/orders.hpp"
#include "test_util.hpp"

using namespace cyclord;

namespace {

// Odometer over all tuples of a fixed length with entries from `labels`.
template <class F>
void for_all_tuples(const std::vector<int>& labels, std::size_t len, F&& fn) {
  if (labels.empty()) return;
  std::vector<std::size_t> pick(len, 0);
  for (;;) {
    std::vector<int> t(len);
    for (std::size_t i = 0; i < len; ++i) t[i] = labels[pick[i]];
    fn(t);
    std::size_t i = len;
    while (i > 0) {
      if (++pick[i - 1] < labels.size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
}

// Odometer over all total maps from x1's labels into x2's labels.
template <class F>
void for_all_maps(const circ_order<int>& x1, const circ_order<int>& x2, F&& fn) {
  const auto& dom = x1.cycle();
  const auto& cod = x2.cycle();
  if (dom.empty()) {
    fn(std::map<int, int>{});
    return;
  }
  if (cod.empty()) return;
  std::vector<std::size_t> pick(dom.size(), 0);
  for (;;) {
    std::map<int, int> f;
    for (std::size_t i = 0; i < dom.size(); ++i) f.emplace(dom[i], cod[pick[i]]);
    fn(f);
    std::size_t i = dom.size();
    while (i > 0) {
      if (++pick[i - 1] < cod.size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
}

// Independent characterization: smallest tuple length (1..max_len) at which f
// sends some domain cycle to a non-cycle; 0 when none exists.
std::size_t first_cycle_violation(const std::map<int, int>& f, const circ_order<int>& x1,
                                  const circ_order<int>& x2, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    bool bad = false;
    for_all_tuples(x1.cycle(), len, [&](const std::vector<int>& t) {
      if (bad || !is_cycle(x1, t)) return;
      std::vector<int> img;
      img.reserve(t.size());
      for (int x : t) img.push_back(f.at(x));
      if (!is_cycle(x2, img)) bad = true;
    });
    if (bad) return len;
  }
  return 0;
}

std::map<int, int> table_from(const circ_order<int>& dom, const std::vector<int>& images) {
  std::map<int, int> f;
  for (std::size_t i = 0; i < dom.cycle().size(); ++i) f.emplace(dom.cycle()[i], images[i]);
  return f;
}

}  // namespace

TEST_CASE("cycle recognition: frozen examples and the rotation census") {
  // Tuples with one cyclic block per value along an oriented traversal.
  CHECK(is_cycle(make_cn(3), {0, 0, 1, 1, 2}));
  CHECK(is_cycle(make_cn(3), {1, 2, 2, 0}));
  CHECK(is_cycle(make_cn(3), {0, 1, 2, 0}));  // repeat wraps around the seam
  CHECK_FALSE(is_cycle(make_cn(4), {0, 1, 0, 1}));
  CHECK_FALSE(is_cycle(make_cn(3), {0, 2, 1}));

  // Degenerate tuples are cycles.
  CHECK(is_cycle(make_cn(4), {}));
  CHECK(is_cycle(make_cn(4), {2}));
  CHECK(is_cycle(make_cn(4), {3, 3, 3}));
  CHECK(is_cycle(circ_order<int>(std::vector<int>{}), {}));

  CHECK_THROWS_AS(is_cycle(make_cn(3), {0, 7}), std::invalid_argument);

  for (std::size_t n = 1; n <= 6; ++n) {
    auto c = make_cn(n);
    CHECK(is_cycle(c, c.cycle()));
  }

  // Census: a full-length injective tuple over C_n is a cycle exactly when it
  // is a rotation of the canonical sequence, so there are n of them.
  for (std::size_t n = 3; n <= 5; ++n) {
    auto c = make_cn(n);
    std::set<std::vector<int>> rotations;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> t;
      for (std::size_t i = 0; i < n; ++i) t.push_back(c.cycle()[(r + i) % n]);
      rotations.insert(t);
    }
    std::size_t hits = 0;
    for (const auto& perm : testutil::all_permutations(n)) {
      std::vector<int> t(perm.begin(), perm.end());
      bool cyc = is_cycle(c, t);
      CHECK(cyc == (rotations.count(t) != 0));
      if (cyc) ++hits;
    }
    CHECK(hits == n);
  }

  // Shorter injective tuples: a cycle exactly when it is a rotation of the
  // induced cyclic order on its label set.
  for (std::size_t n = 3; n <= 5; ++n) {
    auto c = make_cn(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sub.push_back(static_cast<int>(i));
      if (sub.empty()) continue;
      auto induced = c.restriction(sub);
      std::set<std::vector<int>> rotations;
      for (std::size_t r = 0; r < sub.size(); ++r) {
        std::vector<int> t;
        for (std::size_t i = 0; i < sub.size(); ++i)
          t.push_back(induced.cycle()[(r + i) % sub.size()]);
        rotations.insert(t);
      }
      std::vector<int> t(sub.begin(), sub.end());
      std::sort(t.begin(), t.end());
      do {
        CHECK(is_cycle(c, t) == (rotations.count(t) != 0));
      } while (std::next_permutation(t.begin(), t.end()));
    }
  }
}

TEST_CASE("cop_check: verdicts and minimal witnesses") {
  auto c4 = make_cn(4);
  auto c5 = make_cn(5);

  SECTION("identity, constants, rotations pass") {
    std::map<int, int> id;
    for (int x : c5.cycle()) id.emplace(x, x);
    CHECK(cop_check(id, c5, c5).is_cop());

    std::map<int, int> constant;
    for (int x : c5.cycle()) constant.emplace(x, 2);
    CHECK(cop_check(constant, c5, c5).is_cop());

    std::map<int, int> rot;
    for (int x : c5.cycle()) rot.emplace(x, (x + 1) % 5);
    CHECK(cop_check(rot, c5, c5).is_cop());
  }

  SECTION("adjacent-arc collapse passes") {
    auto f = table_from(c4, {0, 0, 2, 2});
    CHECK(cop_check(f, c4, c4).is_cop());
  }

  SECTION("alternating two-point collapse fails the interval condition") {
    // On the 4-circle 1,2,3,4 send 1,3 -> 1 and 2,4 -> 2: neither closed
    // interval joining 1 and 3 is constant, so the verdict names pair (1,3).
    circ_order<int> host({1, 2, 3, 4});
    auto f = table_from(host, {1, 2, 1, 2});
    auto v = cop_check(f, host, host);
    REQUIRE(v.kind == cop_verdict_kind::fails2);
    CHECK(v.witness == std::vector<int>{1, 3});
    // Its fibers alternate, hence are not convex.
    CHECK_FALSE(fibers_convex(f, host));
    // The triple condition is vacuous here (only two image values), which is
    // exactly why the interval condition must be checked separately.
    CHECK_FALSE(cop_condition1(f, host, host).has_value());
  }

  SECTION("reflection fails the triple condition") {
    auto f = table_from(c4, {0, 3, 2, 1});
    auto v = cop_check(f, c4, c4);
    REQUIRE(v.kind == cop_verdict_kind::fails1);
    CHECK(v.witness == std::vector<int>{0, 1, 2});
    // Fibers are singletons, so the interval condition alone would pass:
    // the two conditions are independent.
    CHECK_FALSE(cop_condition2(f, c4).has_value());
    CHECK(fibers_convex(f, c4));
  }

  SECTION("input validation") {
    std::map<int, int> partial{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(cop_check(partial, c4, c4), std::invalid_argument);
    auto stray = table_from(c4, {0, 1, 2, 9});
    CHECK_THROWS_AS(cop_check(stray, c4, c4), std::invalid_argument);
  }

  SECTION("empty domain is trivially order preserving") {
    circ_order<int> none(std::vector<int>{});
    CHECK(cop_check(std::map<int, int>{}, none, c4).is_cop());
  }
}

TEST_CASE("interval condition coincides with fiber convexity") {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{4, 4}, {5, 3}, {4, 3}, {3, 5}};
  std::size_t seen = 0, disagreements = 0;
  for (auto [m, n] : shapes) {
    auto x1 = make_cn(m);
    auto x2 = make_cn(n);
    for_all_maps(x1, x2, [&](const std::map<int, int>& f) {
      ++seen;
      bool by_intervals = !cop_condition2(f, x1).has_value();
      bool by_fibers = fibers_convex(f, x1);
      if (by_intervals != by_fibers) ++disagreements;
    });
  }
  CHECK(seen == 256 + 243 + 81 + 125);
  CHECK(disagreements == 0);
}

TEST_CASE("three or more image values force the interval condition") {
  // Sweep every map between canonical circles of size at most 5: whenever the
  // triple condition holds and the image has at least three values, the
  // interval condition follows.  With fewer image values it genuinely can
  // fail, so the hypothesis is sharp.
  std::size_t eligible = 0, small_image_failures = 0;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) {
      auto x1 = make_cn(m);
      auto x2 = make_cn(n);
      for_all_maps(x1, x2, [&](const std::map<int, int>& f) {
        if (cop_condition1(f, x1, x2).has_value()) return;
        std::set<int> image;
        for (const auto& [x, y] : f) image.insert(y);
        if (image.size() >= 3) {
          ++eligible;
          CHECK_FALSE(cop_condition2(f, x1).has_value());
        } else if (cop_condition2(f, x1).has_value()) {
          ++small_image_failures;
        }
      });
    }
  CHECK(eligible > 0);
  CHECK(small_image_failures > 0);
}

TEST_CASE("cop_check agrees with the cycles-to-cycles characterization") {
  // Equivalence over every map between circles of size at most 4, probing
  // tuples up to length 5.  Violations, when present, always show up by
  // length 4 already.
  std::size_t cop_count = 0, maps_seen = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      auto x1 = make_cn(m);
      auto x2 = make_cn(n);
      for_all_maps(x1, x2, [&](const std::map<int, int>& f) {
        ++maps_seen;
        bool cop = cop_check(f, x1, x2).is_cop();
        std::size_t viol = first_cycle_violation(f, x1, x2, 5);
        CHECK(cop == (viol == 0));
        if (viol != 0) CHECK(viol <= 4);
        if (cop) ++cop_count;
      });
    }
  CHECK(maps_seen == 494);
  CHECK(cop_count > 0);
}

TEST_CASE("composition re-verifies and is closed on verified maps") {
  auto c4 = make_cn(4);
  auto c5 = make_cn(5);

  SECTION("rotations compose additively") {
    auto rot = [&](int r) {
      std::map<int, int> f;
      for (int x : c5.cycle()) f.emplace(x, (x + r) % 5);
      return cop_map<int>::make(c5, c5, std::move(f));
    };
    auto h = compose(rot(1), rot(2));
    CHECK(h.verdict.is_cop());
    CHECK(h.table == rot(3).table);
    CHECK(h == rot(3));
  }

  SECTION("identity is neutral") {
    std::map<int, int> id;
    for (int x : c4.cycle()) id.emplace(x, x);
    auto e = cop_map<int>::make(c4, c4, id);
    auto f = cop_map<int>::make(c4, c4, table_from(c4, {0, 0, 2, 2}));
    CHECK(compose(e, f) == f);
    CHECK(compose(f, e) == f);
  }

  SECTION("mismatched middles are rejected") {
    std::map<int, int> into5;
    for (int x : c4.cycle()) into5.emplace(x, x);
    auto f = cop_map<int>::make(c5, c5, [&] {
      std::map<int, int> id;
      for (int x : c5.cycle()) id.emplace(x, x);
      return id;
    }());
    auto g = cop_map<int>::make(c4, c5, std::move(into5));
    CHECK_THROWS_AS(compose(g, f), std::invalid_argument);  // f lands in C5, g needs C4
  }

  SECTION("exhaustive closure on the 4-circle") {
    auto maps = enumerate_cop_maps(c4, c4);
    for (const auto& f : maps)
      for (const auto& g : maps) {
        auto h = compose(f, g);
        CHECK(h.verdict.is_cop());
        for (int x : c4.cycle()) CHECK(h(x) == f(g(x)));
      }
  }
}

TEST_CASE("order-preserving point maps between chains") {
  auto l4 = make_chain(4);
  auto l3 = make_chain(3);

  std::map<int, int> mono{{0, 0}, {1, 0}, {2, 2}, {3, 2}};
  CHECK(lop_check(mono, l4, l3));

  std::map<int, int> dip{{0, 1}, {1, 0}, {2, 2}, {3, 2}};
  CHECK_FALSE(lop_check(dip, l4, l3));

  std::map<int, int> partial{{0, 0}};
  CHECK_THROWS_AS(lop_check(partial, l4, l3), std::invalid_argument);

  // Census over every map from the 3-chain to the 3-chain: weakly monotone
  // assignments are the multisets of size 3 from 3 values, C(5,2) = 10.
  std::size_t monotone = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::map<int, int> f{{0, a}, {1, b}, {2, c}};
        bool expect = a <= b && b <= c;
        CHECK(lop_check(f, l3, l3) == expect);
        if (expect) ++monotone;
      }
  CHECK(monotone == 10);
}

TEST_CASE("automorphism groups of circles are the rotation groups") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto c = make_cn(n);
    auto aut = automorphism_group(c);
    CHECK(aut.order() == n);
    CHECK(aut.is_cyclic());

    std::set<std::vector<std::size_t>> expected;
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = (i + r) % n;
      expected.insert(p);
    }
    std::set<std::vector<std::size_t>> got(aut.elements().begin(), aut.elements().end());
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(automorphism_group(make_cn(9)), std::length_error);
}

TEST_CASE("finite chains are rigid") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto aut = automorphism_group(make_chain(n));
    CHECK(aut.order() == 1);
    CHECK(aut.is_cyclic());
  }
  CHECK_THROWS_AS(automorphism_group(make_chain(9)), std::length_error);
}

TEST_CASE("perm_group validates its group laws") {
  std::vector<int> ground{0, 1, 2};
  std::vector<std::size_t> id{0, 1, 2};
  std::vector<std::size_t> cyc{1, 2, 0};
  std::vector<std::size_t> cyc2{2, 0, 1};

  CHECK_NOTHROW(perm_group<int>(ground, {id, cyc, cyc2}));
  CHECK_THROWS_AS(perm_group<int>(ground, {cyc, cyc2}), std::invalid_argument);  // no identity
  CHECK_THROWS_AS(perm_group<int>(ground, {id, cyc}), std::invalid_argument);    // no inverse
  CHECK_THROWS_AS(perm_group<int>(ground, {id, {0, 0, 1}}), std::invalid_argument);

  // A non-cyclic example: the three double transpositions on four points.
  perm_group<int> klein({0, 1, 2, 3},
                        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(klein.order() == 4);
  CHECK_FALSE(klein.is_cyclic());

  perm_group<int> z3(ground, {id, cyc, cyc2});
  CHECK(z3.is_cyclic());
  CHECK(z3.as_map(1) == std::map<int, int>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("enumeration of all order-preserving maps") {
  SECTION("from the one-point circle: exactly the constants") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto maps = enumerate_cop_maps(make_cn(1), make_cn(n));
      CHECK(maps.size() == n);
      std::set<int> images;
      for (const auto& f : maps) images.insert(f(0));
      CHECK(images.size() == n);
    }
  }

  SECTION("3-circle to 3-circle census: 24 maps") {
    // 3 constants, 18 maps with a two-value image (3 singleton fibers times 6
    // ordered image pairs), and the 3 rotations.
    auto maps = enumerate_cop_maps(make_cn(3), make_cn(3));
    CHECK(maps.size() == 24);
    std::set<std::map<int, int>> tables;
    std::size_t bijections = 0;
    for (const auto& f : maps) {
      CHECK(f.verdict.is_cop());
      tables.insert(f.table);
      if (f.is_bijection()) ++bijections;
    }
    CHECK(tables.size() == maps.size());   // deduplicated
    CHECK(std::is_sorted(maps.begin(), maps.end(), [](const auto& a, const auto& b) {
      return a.table < b.table;
    }));
    CHECK(bijections == 3);  // exactly the rotations
  }

  SECTION("4-circle to 4-circle census: 128 maps") {
    // 4 constants + 72 two-value maps (6 arc partitions x 12 ordered image
    // pairs) + 48 three-value maps (4 collapsed adjacent pairs x 12
    // orientation-compatible embeddings) + 4 rotations.
    auto maps = enumerate_cop_maps(make_cn(4), make_cn(4));
    CHECK(maps.size() == 128);
  }

  SECTION("counts match the cycles-to-cycles filter") {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 3}, {3, 4}}) {
      auto x1 = make_cn(m);
      auto x2 = make_cn(n);
      std::size_t naive = 0;
      for_all_maps(x1, x2, [&](const std::map<int, int>& f) {
        if (first_cycle_violation(f, x1, x2, 5) == 0) ++naive;
      });
      CHECK(enumerate_cop_maps(x1, x2).size() == naive);
    }
  }

  SECTION("budget refusal is exact") {
    auto c5 = make_cn(5);
    CHECK_THROWS_AS(enumerate_cop_maps(c5, c5, 3124), std::length_error);
    CHECK_NOTHROW(enumerate_cop_maps(c5, c5, 3125));
  }

  SECTION("degenerate domains") {
    circ_order<int> none(std::vector<int>{});
    auto from_empty = enumerate_cop_maps(none, make_cn(3));
    REQUIRE(from_empty.size() == 1);
    CHECK(from_empty[0].table.empty());
    CHECK(from_empty[0].verdict.is_cop());
    CHECK(enumerate_cop_maps(make_cn(3), none).empty());
  }
}
