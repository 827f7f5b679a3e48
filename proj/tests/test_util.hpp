// Shared helpers for the test suites: exhaustive enum't of small orders,
// permutations, subsets, and a seeded RNG wrapper.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <cyclord/orders.hpp>

namespace testutil {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Every circular order on labels {0..n-1}: one representative cyclic sequence
// per order, namely 0 followed by each permutation of the rest.
inline std::vector<cyclord::circ_order<int>> all_circ_orders(int n) {
  std::vector<cyclord::circ_order<int>> out;
  if (n == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> seq{0};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Every linear order on labels {0..n-1}.
inline std::vector<cyclord::lin_order<int>> all_lin_orders(int n) {
  std::vector<cyclord::lin_order<int>> out;
  for (auto& p : all_permutations(n)) out.emplace_back(p);
  return out;
}

inline std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

struct rng {
  explicit rng(std::uint64_t seed) : eng(seed) {}
  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng);
  }
  bool coin() { return pick(0, 1) == 1; }
  std::mt19937_64 eng;
};

}  // namespace testutil
