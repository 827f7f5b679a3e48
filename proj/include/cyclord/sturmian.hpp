#pragma once

// The split-circle system at exact-arithmetic desk scale.  Fix the
// irrational rotation step a (the positive root of x^2 + x - 1) and split
// every point of its orbit lattice {m + n*a mod 1} into a left and a right
// copy; all other angles stay single points.  The rotation acts on this
// split circle, and its symbolic enveloping semigroup consists of the
// finite rotation powers together with the limit transformations that snap
// the whole circle onto one rotated copy with a fixed side.  Composition is
// symbolic, every law is validated pointwise by the tests, and the circular
// order on elements is the lexicographic one over (angle, level) keys with
// powers sitting between the two limits at the same angle.

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <cyclord/lex.hpp>
#include <cyclord/quadirr.hpp>

namespace cyclord {

/// Whether the angle (reduced mod 1) is a split point of the circle.
inline bool ta_split(const quad_irr& beta) { return qi_integral(beta); }

/// A point of the split circle: a base angle in [0,1) plus a side.  On
/// non-split angles the two sides are the same point; the constructor
/// normalizes their side to +1 so equality is plain field equality.
struct ta_point {
  quad_irr beta;
  int side = 1;

  friend bool operator==(const ta_point& a, const ta_point& b) {
    return a.side == b.side && a.beta == b.beta;
  }
  friend bool operator!=(const ta_point& a, const ta_point& b) { return !(a == b); }
};

inline ta_point make_ta(const quad_irr& beta, int side) {
  if (side != -1 && side != 1)
    throw std::invalid_argument("split-circle point: side must be -1 or +1");
  quad_irr b = qi_mod1(beta);
  return {b, ta_split(b) ? side : 1};
}

inline std::string ta_str(const ta_point& x) {
  return qi_str(x.beta) + (ta_split(x.beta) ? (x.side < 0 ? "-" : "+") : "");
}

/// The circular order of the split circle: base angles first, sides within
/// a split pair.  The three points must be pairwise distinct.
inline bool ta_triple(const ta_point& u, const ta_point& v, const ta_point& w) {
  if (u == v || v == w || w == u)
    throw std::invalid_argument("split-circle triple: repeated point");
  return lifted_triple(
      u, v, w, [](const ta_point& p) { return p.beta; },
      [](const quad_irr& a, const quad_irr& b, const quad_irr& c) {
        return cyclic_ascent(a, b, c, qi_less);
      },
      [](const ta_point& s, const ta_point& t) { return s.side < t.side; });
}

// ---------------------------------------------------------------------------
// The symbolic semigroup.

/// Either a finite power of the rotation, or a limit transformation with a
/// fixed offset and side.
struct sturmian_elt {
  bool is_power = true;
  long long n = 0;  // power exponent
  quad_irr gamma;   // limit offset, reduced mod 1
  int side = 1;     // limit side

  static sturmian_elt power(long long n) { return {true, n, {}, 1}; }
  static sturmian_elt limit(const quad_irr& gamma, int side) {
    if (side != -1 && side != 1)
      throw std::invalid_argument("limit transformation: side must be -1 or +1");
    return {false, 0, qi_mod1(gamma), side};
  }

  friend bool operator==(const sturmian_elt& a, const sturmian_elt& b) {
    if (a.is_power != b.is_power) return false;
    if (a.is_power) return a.n == b.n;
    return a.side == b.side && a.gamma == b.gamma;
  }
  friend bool operator!=(const sturmian_elt& a, const sturmian_elt& b) { return !(a == b); }
};

inline std::string sturmian_str(const sturmian_elt& e) {
  std::ostringstream os;
  if (e.is_power)
    os << "R^" << e.n;
  else
    os << "L(" << qi_str(e.gamma) << "," << (e.side < 0 ? "-" : "+") << ")";
  return os.str();
}

/// A power shifts the angle and keeps the side; a limit shifts the angle
/// and forces its own side.
inline ta_point sturmian_apply(const sturmian_elt& e, const ta_point& x) {
  if (e.is_power) return make_ta(x.beta + qi_alpha(e.n), x.side);
  return make_ta(x.beta + e.gamma, e.side);
}

/// Symbolic composition, u after v.  Whenever a limit is involved the
/// result is a limit whose offset accumulates both shifts; the side is the
/// left (outer) factor's when that factor is a limit, and survives from the
/// inner one otherwise.
inline sturmian_elt sturmian_compose(const sturmian_elt& u, const sturmian_elt& v) {
  if (u.is_power && v.is_power) return sturmian_elt::power(u.n + v.n);
  if (!u.is_power) {
    const quad_irr shift = v.is_power ? qi_alpha(v.n) : v.gamma;
    return sturmian_elt::limit(u.gamma + shift, u.side);
  }
  return sturmian_elt::limit(v.gamma + qi_alpha(u.n), v.side);  // u power, v limit
}

/// The lexicographic key of an element: its angle on the circle, plus a
/// three-level fiber in which the power at an angle (level 0) sits between
/// the left (-1) and right (+1) limits at the same angle.
struct sturmian_key {
  quad_irr base;
  int level = 0;

  friend bool operator==(const sturmian_key& a, const sturmian_key& b) {
    return a.level == b.level && a.base == b.base;
  }
  friend bool operator!=(const sturmian_key& a, const sturmian_key& b) { return !(a == b); }
};

inline sturmian_key sturmian_embed(const sturmian_elt& e) {
  if (e.is_power) return {qi_mod1(qi_alpha(e.n)), 0};
  return {e.gamma, e.side};
}

/// The circular order on elements, through the lexicographic embedding.
/// The three elements must be pairwise distinct.
inline bool sturmian_etriple(const sturmian_elt& u, const sturmian_elt& v,
                             const sturmian_elt& w) {
  if (u == v || v == w || w == u)
    throw std::invalid_argument("element triple: repeated element");
  return lifted_triple(
      sturmian_embed(u), sturmian_embed(v), sturmian_embed(w),
      [](const sturmian_key& k) { return k.base; },
      [](const quad_irr& a, const quad_irr& b, const quad_irr& c) {
        return cyclic_ascent(a, b, c, qi_less);
      },
      [](const sturmian_key& s, const sturmian_key& t) { return s.level < t.level; });
}

// ---------------------------------------------------------------------------
// Structural verifiers.

struct ideal_report {
  bool checked = false;       // the sample contained limit elements
  bool closed_left = false;   // outer * limit stays a limit
  bool closed_right = false;  // limit * outer stays a limit
  std::vector<sturmian_elt> witness;  // first offending (outer, limit) pair
  std::string note;
};

/// Confirm on a sample that the limit part absorbs multiplication from both
/// sides — one product at a time through the supplied composition, never by
/// appeal to the symbolic laws being verified elsewhere.
template <class Compose>
ideal_report verify_minimal_ideal(const std::vector<sturmian_elt>& samples, Compose&& compose) {
  ideal_report rep;
  std::vector<sturmian_elt> limits;
  for (const auto& e : samples)
    if (!e.is_power) limits.push_back(e);
  if (limits.empty()) {
    rep.note = "no ideal elements sampled";
    return rep;
  }
  rep.checked = true;
  rep.closed_left = true;
  rep.closed_right = true;
  for (const auto& s : samples)
    for (const auto& i : limits) {
      if (rep.closed_left && compose(s, i).is_power) {
        rep.closed_left = false;
        if (rep.witness.empty()) rep.witness = {s, i};
      }
      if (rep.closed_right && compose(i, s).is_power) {
        rep.closed_right = false;
        if (rep.witness.empty()) rep.witness = {i, s};
      }
    }
  rep.note = (rep.closed_left && rep.closed_right)
                 ? "the limit part absorbs multiplication on both sides"
                 : "a product escaped the limit part";
  return rep;
}

inline ideal_report verify_minimal_ideal(const std::vector<sturmian_elt>& samples) {
  return verify_minimal_ideal(
      samples, [](const sturmian_elt& u, const sturmian_elt& v) { return sturmian_compose(u, v); });
}

/// Left and right translation by u preserve each sampled oriented triple:
/// images that stay pairwise distinct must keep their orientation, and a
/// collapse is always consistent at triple scale (a fiber of two inside a
/// sample of three is convex no matter what).  Inputs must be oriented
/// triples.
inline bool verify_translation_cop(const sturmian_elt& u,
                                   const std::vector<std::array<sturmian_elt, 3>>& triples) {
  for (const auto& t : triples) {
    if (!sturmian_etriple(t[0], t[1], t[2]))
      throw std::invalid_argument("translation check: input triple is not oriented");
    const std::array<sturmian_elt, 3> lt{sturmian_compose(u, t[0]), sturmian_compose(u, t[1]),
                                         sturmian_compose(u, t[2])};
    const std::array<sturmian_elt, 3> rt{sturmian_compose(t[0], u), sturmian_compose(t[1], u),
                                         sturmian_compose(t[2], u)};
    for (const auto& img : {lt, rt}) {
      const bool distinct = img[0] != img[1] && img[1] != img[2] && img[2] != img[0];
      if (distinct && !sturmian_etriple(img[0], img[1], img[2])) return false;
    }
  }
  return true;
}

}  // namespace cyclord
