// A tour of the split-circle semigroup: rotation powers R^n, their one-sided
// limits L(gamma, +-), exact arithmetic in Z[alpha] with alpha = (sqrt5-1)/2,
// the sandwich L(n*alpha,-) < R^n < L(n*alpha,+), and closure of the limit
// elements under composition (the minimal ideal).
//
// Run:  ./split_circle

#include <iostream>

#include "cyclord/quadirr.hpp"
#include "cyclord/sturmian.hpp"

using namespace cyclord;

int main() {
  // Numerically alpha = (sqrt5 - 1) / 2; the library never touches doubles,
  // this estimate is only for the reader.
  std::cout << "angle alpha = " << qi_str(qi_alpha(1)) << " ~ "
            << qi_alpha(1).p.convert_to<double>() +
                   qi_alpha(1).q.convert_to<double>() * 0.6180339887498949
            << " (irrational, so the rotation orbit never closes)\n\n";

  // The doubled point at angle beta has two copies, beta- and beta+.
  auto base = make_ta(qi(0, 0), 1);
  std::cout << "orbit of the doubled point 0+ under the rotation R:\n";
  for (long long k = 0; k <= 5; ++k) {
    auto img = sturmian_apply(sturmian_elt::power(k), base);
    std::cout << "  R^" << k << " . 0+ = " << qi_str(img.beta) << (img.side > 0 ? "+" : "-")
              << "\n";
  }

  std::cout << "\ncomposition is exact and symbolic:\n";
  auto u = sturmian_elt::limit(qi_alpha(2), 1);
  auto v = sturmian_elt::power(3);
  std::cout << "  " << sturmian_str(u) << " after " << sturmian_str(v) << " = "
            << sturmian_str(sturmian_compose(u, v)) << "\n";
  std::cout << "  " << sturmian_str(v) << " after " << sturmian_str(u) << " = "
            << sturmian_str(sturmian_compose(v, u)) << "\n";
  auto w = sturmian_elt::limit(qi(1, -1), -1);
  std::cout << "  " << sturmian_str(u) << " after " << sturmian_str(w) << " = "
            << sturmian_str(sturmian_compose(u, w))
            << "   (the left factor's side wins)\n";

  std::cout << "\neach power sits strictly between its own one-sided limits:\n";
  bool all = true;
  for (long long m = -3; m <= 3; ++m) {
    bool ok = sturmian_etriple(sturmian_elt::limit(qi_alpha(m), -1), sturmian_elt::power(m),
                               sturmian_elt::limit(qi_alpha(m), 1));
    all = all && ok;
    std::cout << "  L(" << qi_str(qi_alpha(m)) << ",-)  <  R^" << m << "  <  L("
              << qi_str(qi_alpha(m)) << ",+) : " << (ok ? "yes" : "NO") << "\n";
  }

  std::vector<sturmian_elt> sample;
  for (long long k = -4; k <= 4; ++k) {
    sample.push_back(sturmian_elt::power(k));
    sample.push_back(sturmian_elt::limit(qi_alpha(k), k % 2 ? -1 : 1));
  }
  auto ideal = verify_minimal_ideal(sample);
  std::cout << "\nminimal ideal over a " << sample.size() << "-element sample: " << ideal.note
            << " (" << (ideal.closed_left && ideal.closed_right ? "closed" : "NOT CLOSED")
            << ")\n";

  return all && ideal.checked && ideal.closed_left && ideal.closed_right ? 0 : 1;
}
