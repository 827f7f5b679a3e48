#pragma once

// Exact arithmetic in the quadratic field generated by the positive root
// of x^2 + x - 1 (call it a, numerically 0.6180...).  Every element is
// p + q*a with rational p, q; since 1 and a are rationally independent the
// representation is unique, so equality, signs, floors, and reductions
// mod 1 are all exactly decidable.  This is the number system behind the
// split-circle semigroup: rotation orbits of a never land on a rational
// grid, and the sign test below never needs to approximate.

#include <cmath>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclord {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

struct quad_irr {
  rational p{};  // rational part
  rational q{};  // coefficient of the fixed irrational a

  friend quad_irr operator+(const quad_irr& x, const quad_irr& y) {
    return {x.p + y.p, x.q + y.q};
  }
  friend quad_irr operator-(const quad_irr& x, const quad_irr& y) {
    return {x.p - y.p, x.q - y.q};
  }
  friend quad_irr operator-(const quad_irr& x) { return {-x.p, -x.q}; }
  // a^2 = 1 - a closes multiplication over the basis (1, a).
  friend quad_irr operator*(const quad_irr& x, const quad_irr& y) {
    return {x.p * y.p + x.q * y.q, x.p * y.q + x.q * y.p - x.q * y.q};
  }
  friend bool operator==(const quad_irr& x, const quad_irr& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const quad_irr& x, const quad_irr& y) { return !(x == y); }
};

inline quad_irr qi(long long p, long long q) { return {rational(p), rational(q)}; }

/// n*a as a field element.
inline quad_irr qi_alpha(long long n = 1) { return {rational(0), rational(n)}; }

/// Exact sign of p + q*a.  Writing the value as (A + B*sqrt5)/2 with
/// A = 2p - q and B = q, the verdict is immediate when A and B agree in
/// sign; otherwise it reduces to comparing A^2 against 5*B^2, and the two
/// can never tie with B != 0 because 5 is not a rational square.
inline int qi_sign(const quad_irr& x) {
  const rational A = 2 * x.p - x.q;
  const rational& B = x.q;
  const int sa = A.sign();
  const int sb = B.sign();
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  const rational lhs = A * A;
  const rational rhs = 5 * B * B;
  if (sa > 0) return lhs > rhs ? 1 : -1;  // A > 0, B < 0
  return rhs > lhs ? 1 : -1;              // A < 0, B > 0
}

/// The numeric order on the field.
inline bool qi_less(const quad_irr& x, const quad_irr& y) { return qi_sign(x - y) < 0; }

inline double qi_to_double(const quad_irr& x) {
  static const double alpha = (std::sqrt(5.0) - 1.0) / 2.0;
  return x.p.convert_to<double>() + x.q.convert_to<double>() * alpha;
}

/// Exact floor: a floating-point estimate corrected by exact sign tests.
inline bigint qi_floor(const quad_irr& x) {
  bigint k(static_cast<long long>(std::floor(qi_to_double(x))));
  while (qi_sign(x - quad_irr{rational(k), rational(0)}) < 0) --k;
  while (qi_sign(x - quad_irr{rational(k + 1), rational(0)}) >= 0) ++k;
  return k;
}

/// Reduction into [0, 1).
inline quad_irr qi_mod1(const quad_irr& x) {
  return x - quad_irr{rational(qi_floor(x)), rational(0)};
}

/// Whether x lies in the lattice of integer combinations m + n*a.  After
/// reduction mod 1 this decides membership in the rotation orbit of a on
/// the circle: both coordinates integral, nothing else.
inline bool qi_integral(const quad_irr& x) {
  using boost::multiprecision::denominator;
  return denominator(x.p) == 1 && denominator(x.q) == 1;
}

/// Coordinate-lexicographic comparator for use as a container key order.
/// This is NOT the numeric order; use qi_less for that.
struct qi_coord_less {
  bool operator()(const quad_irr& x, const quad_irr& y) const {
    if (x.p != y.p) return x.p < y.p;
    return x.q < y.q;
  }
};

inline std::string qi_str(const quad_irr& x) {
  std::ostringstream os;
  os << x.p << "+" << x.q << "a";
  return os.str();
}

}  // namespace cyclord
