#pragma once

// The two-endpoint compactification of the integer translation flow: the
// integers with a bottom and top endpoint adjoined, the translations, and
// the two limit transformations that translation sequences converge to
// pointwise.  Composition is symbolic; the test suite re-derives every
// composition from pointwise evaluation on finite windows before trusting
// the laws.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <cyclord/orders.hpp>

namespace cyclord {

/// A point of the compactified line: tier -1 is the bottom endpoint, tier 0
/// a finite integer, tier +1 the top endpoint.
struct extended_int {
  int tier = 0;
  long long n = 0;  // significant only on tier 0

  static extended_int bottom() { return {-1, 0}; }
  static extended_int finite(long long v) { return {0, v}; }
  static extended_int top() { return {+1, 0}; }

  friend bool operator==(const extended_int& a, const extended_int& b) {
    return a.tier == b.tier && (a.tier != 0 || a.n == b.n);
  }
  friend bool operator!=(const extended_int& a, const extended_int& b) { return !(a == b); }
  friend bool operator<(const extended_int& a, const extended_int& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    return a.tier == 0 && a.n < b.n;
  }
  friend bool operator>(const extended_int& a, const extended_int& b) { return b < a; }
  friend bool operator<=(const extended_int& a, const extended_int& b) { return !(b < a); }
  friend bool operator>=(const extended_int& a, const extended_int& b) { return !(a < b); }
};

inline std::string ext_str(const extended_int& x) {
  if (x.tier < 0) return "-inf";
  if (x.tier > 0) return "+inf";
  return std::to_string(x.n);
}

/// A transformation of the compactified line: a translation by a fixed
/// shift, or one of the two limits (which send every finite point to an
/// endpoint and fix both endpoints).
struct cascade_elt {
  int tier = 0;         // -1: bottom limit, 0: translation, +1: top limit
  long long shift = 0;  // significant only on tier 0

  static cascade_elt limit_below() { return {-1, 0}; }
  static cascade_elt translation(long long n) { return {0, n}; }
  static cascade_elt limit_above() { return {+1, 0}; }

  bool is_limit() const { return tier != 0; }

  friend bool operator==(const cascade_elt& a, const cascade_elt& b) {
    return a.tier == b.tier && (a.tier != 0 || a.shift == b.shift);
  }
  friend bool operator!=(const cascade_elt& a, const cascade_elt& b) { return !(a == b); }
  // Container key order (which the tests compare against the pointwise
  // order rather than assuming they coincide).
  friend bool operator<(const cascade_elt& a, const cascade_elt& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    return a.tier == 0 && a.shift < b.shift;
  }
  friend bool operator>(const cascade_elt& a, const cascade_elt& b) { return b < a; }
  friend bool operator<=(const cascade_elt& a, const cascade_elt& b) { return !(b < a); }
  friend bool operator>=(const cascade_elt& a, const cascade_elt& b) { return !(a < b); }
};

inline std::string cascade_str(const cascade_elt& e) {
  if (e.tier < 0) return "lim-";
  if (e.tier > 0) return "lim+";
  std::ostringstream os;
  os << "T(" << e.shift << ")";
  return os.str();
}

inline extended_int cascade_apply(const cascade_elt& e, const extended_int& x) {
  if (x.tier != 0) return x;  // every transformation fixes both endpoints
  if (e.tier < 0) return extended_int::bottom();
  if (e.tier > 0) return extended_int::top();
  return extended_int::finite(x.n + e.shift);
}

/// Symbolic composition, u after v.  The right factor wins when it is a
/// limit: it has already sent the integers to an endpoint, which everything
/// fixes.  Otherwise a limit on the left absorbs the translation, and two
/// translations add their shifts.  Note the resulting non-commutativity:
/// composing the two limits yields whichever sits on the right.
inline cascade_elt cascade_compose(const cascade_elt& u, const cascade_elt& v) {
  if (v.tier != 0) return v;
  if (u.tier != 0) return u;
  return cascade_elt::translation(u.shift + v.shift);
}

/// The evaluation window: bottom < -radius < ... < radius < top.
inline lin_order<extended_int> cascade_window(long long radius) {
  if (radius < 0) throw std::invalid_argument("cascade window: negative radius");
  std::vector<extended_int> chain;
  chain.push_back(extended_int::bottom());
  for (long long v = -radius; v <= radius; ++v) chain.push_back(extended_int::finite(v));
  chain.push_back(extended_int::top());
  return lin_order<extended_int>(chain);
}

/// Both limits plus all translations with |shift| <= radius, listed in
/// ascending container order.
inline std::vector<cascade_elt> cascade_elements(long long radius) {
  if (radius < 0) throw std::invalid_argument("cascade elements: negative radius");
  std::vector<cascade_elt> out;
  out.push_back(cascade_elt::limit_below());
  for (long long n = -radius; n <= radius; ++n) out.push_back(cascade_elt::translation(n));
  out.push_back(cascade_elt::limit_above());
  return out;
}

}  // namespace cyclord
