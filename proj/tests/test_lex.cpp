// Lexicographic products, fibered lifts, equivariance of lifted actions, and
// ordered disjoint sums: frozen examples plus exhaustive small-case sweeps.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "cyclord/cop.hpp"
#include "cyclord/lex.hpp"
#include "cyclord/orders.hpp"
#include "test_util.hpp"

using namespace cyclord;
using ipair = std::pair<int, int>;

namespace {

// All surjections from {0..nx-1} onto {0..ny-1}, as total maps.
std::vector<std::map<int, int>> all_surjections(int nx, int ny) {
  std::vector<std::map<int, int>> out;
  std::vector<int> pick(static_cast<std::size_t>(nx), 0);
  for (;;) {
    std::set<int> image(pick.begin(), pick.end());
    if (static_cast<int>(image.size()) == ny) {
      std::map<int, int> q;
      for (int x = 0; x < nx; ++x) q.emplace(x, pick[static_cast<std::size_t>(x)]);
      out.push_back(std::move(q));
    }
    int i = nx;
    while (i > 0) {
      if (++pick[static_cast<std::size_t>(i - 1)] < ny) break;
      pick[static_cast<std::size_t>(i - 1)] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

// Every assignment of a linear order to each fiber of q.
std::vector<std::map<int, lin_order<int>>> all_fiber_assignments(const std::map<int, int>& q,
                                                                 int ny) {
  std::vector<std::vector<int>> fiber_of(static_cast<std::size_t>(ny));
  for (const auto& [x, y] : q) fiber_of[static_cast<std::size_t>(y)].push_back(x);

  std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) {
    auto v = fiber_of[static_cast<std::size_t>(y)];
    std::sort(v.begin(), v.end());
    do {
      chains[static_cast<std::size_t>(y)].push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
  }

  std::vector<std::map<int, lin_order<int>>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(ny), 0);
  for (;;) {
    std::map<int, lin_order<int>> fibers;
    for (int y = 0; y < ny; ++y)
      fibers.emplace(y, lin_order<int>(chains[static_cast<std::size_t>(y)][pick[static_cast<std::size_t>(y)]]));
    out.push_back(std::move(fibers));
    std::size_t i = static_cast<std::size_t>(ny);
    while (i > 0) {
      if (++pick[i - 1] < chains[i - 1].size()) break;
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::map<ipair, int> first_projection(const circ_order<ipair>& product) {
  std::map<ipair, int> q;
  for (const ipair& p : product.cycle()) q.emplace(p, p.first);
  return q;
}

}  // namespace

TEST_CASE("lexicographic product of chains") {
  auto two = make_chain(2);

  auto four = lex_lin_lin(two, two);
  CHECK(four.size() == 4);
  CHECK(four.chain() == std::vector<ipair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  lin_order<int> singleton(std::vector<int>{7});
  auto same = lex_lin_lin(make_chain(4), singleton);
  std::vector<ipair> expect;
  for (int i = 0; i < 4; ++i) expect.emplace_back(i, 7);
  CHECK(same.chain() == expect);

  lin_order<char> abc(std::vector<char>{'a', 'b', 'c'});
  auto six = lex_lin_lin(two, abc);
  CHECK(six.chain() == std::vector<std::pair<int, char>>{
                           {0, 'a'}, {0, 'b'}, {0, 'c'}, {1, 'a'}, {1, 'b'}, {1, 'c'}});

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(lex_lin_lin(make_chain(a), make_chain(b)).size() ==
            static_cast<std::size_t>(a * b));
}

TEST_CASE("lexicographic product of a circle with a chain") {
  auto c3 = make_cn(3);
  auto two = make_chain(2);

  SECTION("the 3-circle with a 2-point fiber unrolls to the 6-cycle") {
    auto prod = lex_circ_lin(c3, two);
    REQUIRE(prod.size() == 6);
    circ_order<ipair> expect(
        std::vector<ipair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(prod == expect);
  }

  SECTION("one-point base reduces to the circularized fiber") {
    lin_order<int> fiber(std::vector<int>{2, 0, 1});
    auto prod = lex_circ_lin(make_cn(1), fiber);
    auto wrapped = circularize(fiber);
    std::vector<ipair> expect;
    for (int x : wrapped.cycle()) expect.emplace_back(0, x);
    CHECK(prod.cycle() == expect);
  }

  SECTION("two points sharing a base coordinate compare by fiber") {
    auto prod = lex_circ_lin(c3, two);
    CHECK(prod.triple({0, 0}, {0, 1}, {1, 0}));
    CHECK_FALSE(prod.triple({0, 1}, {0, 0}, {1, 0}));
  }

  SECTION("axioms, size, projection, and fiber restrictions, exhaustively") {
    for (int nc = 1; nc <= 4; ++nc)
      for (const auto& base : testutil::all_circ_orders(nc))
        for (int nl = 1; nl <= 3; ++nl)
          for (const auto& fiber : testutil::all_lin_orders(nl)) {
            auto prod = lex_circ_lin(base, fiber);
            CHECK(prod.size() == base.size() * fiber.size());
            CHECK(verify_circular_axioms(derived_relation(prod)).valid);
            CHECK(cop_check(first_projection(prod), prod, base).is_cop());
            auto wrapped = circularize(fiber);
            for (int a : base.cycle()) {
              std::vector<ipair> members;
              std::vector<ipair> circ_fiber;
              for (int x : fiber.chain()) members.emplace_back(a, x);
              for (int x : wrapped.cycle()) circ_fiber.emplace_back(a, x);
              CHECK(prod.restriction(members) == circ_order<ipair>(circ_fiber));
            }
          }
  }

  SECTION("finite products are complete: every cut has endpoints") {
    auto prod = lex_circ_lin(make_cn(4), make_chain(3));
    for (const ipair& z : prod.cycle()) {
      auto cut = prod.cut_at(z);
      REQUIRE(cut.least().has_value());
      REQUIRE(cut.greatest().has_value());
      CHECK(*cut.least() == z);
    }
  }
}

TEST_CASE("fibered lift along a quotient map") {
  auto c3 = make_cn(3);

  SECTION("paired fibers over the 3-circle give the 6-cycle") {
    std::map<int, int> q;
    for (int x = 0; x < 6; ++x) q.emplace(x, x / 2);
    std::map<int, lin_order<int>> fibers;
    for (int y = 0; y < 3; ++y) fibers.emplace(y, lin_order<int>(std::vector<int>{2 * y, 2 * y + 1}));
    CHECK(verify_circular_axioms(lifted_relation(q, c3, fibers)).valid);
    CHECK(fibered_lift(q, c3, fibers) == make_cn(6));
  }

  SECTION("singleton fibers pull the base back") {
    std::map<int, int> q{{10, 0}, {11, 1}, {12, 2}};
    std::map<int, lin_order<int>> fibers;
    for (int y = 0; y < 3; ++y) fibers.emplace(y, lin_order<int>(std::vector<int>{10 + y}));
    auto lift = fibered_lift(q, c3, fibers);
    CHECK(lift == circ_order<int>(std::vector<int>{10, 11, 12}));
  }

  SECTION("one-point base reproduces the circularized fiber") {
    std::map<int, int> q{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    std::map<int, lin_order<int>> fibers{{0, lin_order<int>(std::vector<int>{2, 3, 0, 1})}};
    auto lift = fibered_lift(q, make_cn(1), fibers);
    CHECK(lift == circularize(fibers.at(0)));
  }

  SECTION("validation failures") {
    // Base point 2 never hit.
    std::map<int, int> q{{0, 0}, {1, 1}};
    std::map<int, lin_order<int>> fibers{{0, lin_order<int>(std::vector<int>{0})},
                                         {1, lin_order<int>(std::vector<int>{1})}};
    CHECK_THROWS_AS(fibered_lift(q, c3, fibers), std::invalid_argument);

    // Fiber order lists a point of another fiber.
    std::map<int, int> q2{{0, 0}, {1, 1}, {2, 2}};
    std::map<int, lin_order<int>> bad{{0, lin_order<int>(std::vector<int>{0, 1})},
                                      {1, lin_order<int>(std::vector<int>{1})},
                                      {2, lin_order<int>(std::vector<int>{2})}};
    CHECK_THROWS_AS(fibered_lift(q2, c3, bad), std::invalid_argument);

    // A point of the domain missing from every fiber order.
    std::map<int, int> q3{{0, 0}, {1, 1}, {2, 2}, {3, 2}};
    std::map<int, lin_order<int>> sparse{{0, lin_order<int>(std::vector<int>{0})},
                                         {1, lin_order<int>(std::vector<int>{1})},
                                         {2, lin_order<int>(std::vector<int>{2})}};
    CHECK_THROWS_AS(fibered_lift(q3, c3, sparse), std::invalid_argument);

    // No fiber order supplied for base point 2.
    std::map<int, int> q4{{0, 0}, {1, 1}, {2, 2}};
    std::map<int, lin_order<int>> missing{{0, lin_order<int>(std::vector<int>{0})},
                                          {1, lin_order<int>(std::vector<int>{1})}};
    CHECK_THROWS_AS(fibered_lift(q4, c3, missing), std::invalid_argument);
  }
}

TEST_CASE("every small lift is a circular order with the right structure") {
  // Exhaustive: all surjections q with |X| <= 5, |Y| <= 3, every base circular
  // order and every assignment of fiber chains.  The lifted relation passes
  // the axioms, restricts on each fiber to the circularized chain, and turns
  // q into a circular-order-preserving map.
  std::size_t lifts = 0;
  for (int nx = 1; nx <= 5; ++nx)
    for (int ny = 1; ny <= 3 && ny <= nx; ++ny) {
      auto surjections = all_surjections(nx, ny);
      if (nx == 5 && ny == 3) CHECK(surjections.size() == 150);
      for (const auto& q : surjections)
        for (const auto& base : testutil::all_circ_orders(ny))
          for (const auto& fibers : all_fiber_assignments(q, ny)) {
            ++lifts;
            auto rel = lifted_relation(q, base, fibers);
            CHECK(verify_circular_axioms(rel).valid);
            auto lift = canonical_circ_order(rel);
            CHECK(cop_check(q, lift, base).is_cop());
            for (const auto& [y, chain] : fibers)
              CHECK(lift.restriction(chain.chain()) == circularize(chain));
          }
    }
  CHECK(lifts > 2000);
}

TEST_CASE("lexicographic product equals the lift of the projection") {
  for (int nc = 1; nc <= 4; ++nc)
    for (const auto& base : testutil::all_circ_orders(nc))
      for (int nl = 1; nl <= 3; ++nl)
        for (const auto& fiber : testutil::all_lin_orders(nl)) {
          auto prod = lex_circ_lin(base, fiber);
          std::map<ipair, int> q = first_projection(prod);
          std::map<int, lin_order<ipair>> fibers;
          for (int a : base.cycle()) {
            std::vector<ipair> chain;
            for (int x : fiber.chain()) chain.emplace_back(a, x);
            fibers.emplace(a, lin_order<ipair>(std::move(chain)));
          }
          CHECK(prod == fibered_lift(q, base, fibers));
        }
}

TEST_CASE("equivariance of actions on a lifted order") {
  // The 6-point lift over the rotating 3-circle: x -> x + 2k mod 6 upstairs
  // covers y -> y + k mod 3 downstairs.
  auto c3 = make_cn(3);
  auto c6 = make_cn(6);
  std::map<int, int> q;
  for (int x = 0; x < 6; ++x) q.emplace(x, x / 2);

  action_table<int, int> up, down;
  for (int k = 0; k < 3; ++k) {
    std::map<int, int> gx, gy;
    for (int x = 0; x < 6; ++x) gx.emplace(x, (x + 2 * k) % 6);
    for (int y = 0; y < 3; ++y) gy.emplace(y, (y + k) % 3);
    up.emplace(k, std::move(gx));
    down.emplace(k, std::move(gy));
  }

  SECTION("rotation action passes exhaustively") {
    auto rep = lift_equivariance_check(up, down, q, c6);
    CHECK(rep.ok());
  }

  SECTION("sampled triples agree") {
    std::vector<std::array<int, 3>> samples{{0, 1, 2}, {5, 1, 3}, {2, 4, 0}};
    CHECK(lift_equivariance_check(up, down, q, c6, samples).ok());
  }

  SECTION("identity-only action passes") {
    action_table<int, int> idx{{0, up.at(0)}}, idy{{0, down.at(0)}};
    CHECK(lift_equivariance_check(idx, idy, q, c6).ok());
  }

  SECTION("a decreasing swap inside one fiber is an order violation") {
    action_table<int, int> bad_up{{0, up.at(0)}}, bad_down{{0, down.at(0)}};
    std::map<int, int> swap01;
    for (int x = 0; x < 6; ++x) swap01.emplace(x, x);
    swap01[0] = 1;
    swap01[1] = 0;
    bad_up.emplace(1, std::move(swap01));
    bad_down.emplace(1, down.at(0));  // identity downstairs: q still commutes
    auto rep = lift_equivariance_check(bad_up, bad_down, q, c6);
    REQUIRE(rep.kind == equivariance_failure::order_violation);
    CHECK(rep.element == 1);
    CHECK(rep.witness == std::vector<int>{0, 1, 2});
  }

  SECTION("a non-commuting quotient map is flagged as such") {
    action_table<int, int> shift_up{{0, up.at(0)}}, id_down{{0, down.at(0)}};
    std::map<int, int> shift;
    for (int x = 0; x < 6; ++x) shift.emplace(x, (x + 1) % 6);
    shift_up.emplace(1, std::move(shift));
    id_down.emplace(1, down.at(0));
    auto rep = lift_equivariance_check(shift_up, id_down, q, c6);
    REQUIRE(rep.kind == equivariance_failure::not_equivariant);
    CHECK(rep.element == 1);
    CHECK(rep.witness == std::vector<int>{1});
  }

  SECTION("mismatched element lists are rejected") {
    action_table<int, int> only_id{{0, up.at(0)}};
    CHECK_THROWS_AS(lift_equivariance_check(up, action_table<int, int>{{0, down.at(0)}}, q, c6),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_equivariance_check(only_id, down, q, c6), std::invalid_argument);
  }
}

TEST_CASE("ordered disjoint sum of linearly ordered systems") {
  auto trivial_system = [](int n) {
    ordered_system<int, int> s;
    s.elements = {0};
    std::map<int, int> id;
    for (int i = 0; i < n; ++i) id.emplace(i, i);
    s.act.emplace(0, std::move(id));
    s.space = make_chain(static_cast<std::size_t>(n));
    return s;
  };

  SECTION("two 1-chains concatenate to a 2-chain") {
    auto sum = ordered_sum_action(trivial_system(1), trivial_system(1));
    CHECK(sum.space.size() == 2);
    CHECK(sum.elements.size() == 1);
    CHECK(system_is_lop(sum));
    CHECK(system_is_effective(sum));
  }

  SECTION("two 2-chains concatenate to a 4-chain, left block first") {
    auto sum = ordered_sum_action(trivial_system(2), trivial_system(2));
    REQUIRE(sum.space.size() == 4);
    using V = std::variant<int, int>;
    V l0(std::in_place_index<0>, 0), l1(std::in_place_index<0>, 1);
    V r0(std::in_place_index<1>, 0), r1(std::in_place_index<1>, 1);
    CHECK(sum.space.chain() == std::vector<V>{l0, l1, r0, r1});
    CHECK(sum.space.less(l1, r0));  // every left point precedes every right point
    CHECK(system_is_lop(sum));
    CHECK(system_is_effective(sum));
    // The single element pair acts as the identity.
    CHECK(sum.act.at({0, 0}).at(l0) == l0);
    CHECK(sum.act.at({0, 0}).at(r1) == r1);
  }

  SECTION("non-monotone and non-effective inputs are rejected") {
    ordered_system<int, int> swapper;
    swapper.elements = {0, 1};
    swapper.act.emplace(0, std::map<int, int>{{0, 0}, {1, 1}});
    swapper.act.emplace(1, std::map<int, int>{{0, 1}, {1, 0}});
    swapper.space = make_chain(2);
    CHECK_THROWS_AS(ordered_sum_action(swapper, trivial_system(1)), std::invalid_argument);

    ordered_system<int, int> redundant;
    redundant.elements = {0, 1};
    redundant.act.emplace(0, std::map<int, int>{{0, 0}});
    redundant.act.emplace(1, std::map<int, int>{{0, 0}});
    redundant.space = make_chain(1);
    CHECK_THROWS_AS(ordered_sum_action(trivial_system(1), redundant), std::invalid_argument);
  }
}
