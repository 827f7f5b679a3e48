#pragma once

// Transformation semigroups attached to order-preserving actions, at desk
// scale.  For a finite space the semigroup generated by a group action is
// materialized map-by-map; for infinite systems the element algebra stays
// symbolic and only evaluation is concrete.  Either way, the linear order
// on the semigroup is the pointwise one -- u comes before v when ua <= va
// at every evaluation point -- and every advertised property (totality,
// bi-invariance, embedding of the acting group) is checked rather than
// assumed.  The circular-order probe at the end gathers evidence only: the
// corresponding structural question is open, and the probe reports what it
// sees on the given instance without generalizing.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <cyclord/groups.hpp>
#include <cyclord/orders.hpp>

namespace cyclord {

// ---------------------------------------------------------------------------
// Finite transformation semigroups from group actions.

template <class L>
struct transformation_semigroup {
  std::vector<std::map<L, L>> elements;  // the distinct translation maps
  std::vector<std::size_t> attribution;  // group element index -> map index
  bool attribution_injective = false;    // true exactly when the action is effective
};

/// The image of a finite group action inside the self-map semigroup of the
/// space: the set of translation maps with duplicates merged, plus the
/// record of which group element produced which map.  For a validated
/// action this set is closed under composition; the constructor confirms
/// that instead of assuming it.
template <class G, class L>
transformation_semigroup<L> finite_ellis(const group_table<G>& grp, const action_table<G, L>& act,
                                         const std::vector<L>& space) {
  validate_action(grp, act, space);
  transformation_semigroup<L> out;
  std::map<std::map<L, L>, std::size_t> seen;
  for (const G& g : grp.elements()) {
    const auto& m = act.at(g);
    auto [it, fresh] = seen.emplace(m, out.elements.size());
    if (fresh) out.elements.push_back(m);
    out.attribution.push_back(it->second);
  }
  out.attribution_injective = (seen.size() == grp.size());
  for (const auto& u : out.elements)
    for (const auto& v : out.elements) {
      std::map<L, L> w;
      for (const auto& [x, y] : v) w.emplace(x, u.at(y));
      if (!seen.count(w))
        throw std::logic_error("translation maps are not closed under composition");
    }
  return out;
}

// ---------------------------------------------------------------------------
// The pointwise comparison and the linear order it induces.

enum class pointwise_verdict { below, equal, above, crossing };

/// Compare two transformations by their values over the evaluation points:
/// `below` means ua <= va everywhere with at least one strict drop below,
/// `equal` means indistinguishable on the sample, `crossing` means the two
/// are incomparable pointwise.
template <class Elt, class Pt, class Apply, class Less>
pointwise_verdict pointwise_compare(const Elt& u, const Elt& v, const std::vector<Pt>& points,
                                    Apply&& apply, Less&& less) {
  bool some_lt = false, some_gt = false;
  for (const Pt& a : points) {
    const Pt ua = apply(u, a);
    const Pt va = apply(v, a);
    if (less(ua, va))
      some_lt = true;
    else if (less(va, ua))
      some_gt = true;
    if (some_lt && some_gt) return pointwise_verdict::crossing;
  }
  if (some_lt) return pointwise_verdict::below;
  if (some_gt) return pointwise_verdict::above;
  return pointwise_verdict::equal;
}

template <class Elt>
struct ellis_order_report {
  bool hypothesis = false;       // orbits of the ascending generator list ascend
  bool total = false;            // no crossing pair
  bool antisymmetric = false;    // no two elements indistinguishable on the sample
  bool transitive = false;
  bool right_invariant = false;  // u <= v implies u*p <= v*p
  bool left_invariant = false;   // u <= v implies p*u <= p*v
  bool embedding = false;        // the generator list is strictly ascending pointwise
  std::vector<Elt> chain;        // all elements in ascending order, when total
  std::vector<Elt> witness;      // offenders of the first failed check
  std::string note;
};

/// Build and audit the pointwise linear order on a set of transformations.
/// `generators_ascending` lists the images of the acting group in its own
/// ascending order (possibly a strict subset of `elements`); `compose(u,v)`
/// is u-after-v.  A failed hypothesis or a non-total relation is reported
/// with witnesses, never patched over.
template <class Elt, class Pt, class Apply, class Compose, class Less>
ellis_order_report<Elt> ellis_linear_order(const std::vector<Elt>& elements,
                                           const std::vector<Elt>& generators_ascending,
                                           const std::vector<Pt>& points, Apply&& apply,
                                           Compose&& compose, Less&& less) {
  if (elements.empty())
    throw std::invalid_argument("ellis order: at least one element required");
  ellis_order_report<Elt> rep;
  std::ostringstream note;

  rep.hypothesis = true;
  for (std::size_t i = 0; i + 1 < generators_ascending.size() && rep.hypothesis; ++i)
    for (const Pt& a : points) {
      const Pt x = apply(generators_ascending[i], a);
      const Pt y = apply(generators_ascending[i + 1], a);
      if (less(y, x)) {
        rep.hypothesis = false;
        rep.witness = {generators_ascending[i], generators_ascending[i + 1]};
        note << "an orbit of the supplied ascending generators descends; ";
        break;
      }
    }

  const std::size_t n = elements.size();
  std::vector<pointwise_verdict> verdict(n * n, pointwise_verdict::equal);
  auto at = [&](std::size_t i, std::size_t j) -> pointwise_verdict& {
    return verdict[i * n + j];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) at(i, j) = pointwise_compare(elements[i], elements[j], points, apply, less);

  rep.total = true;
  rep.antisymmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) == pointwise_verdict::crossing && rep.total) {
        rep.total = false;
        if (rep.witness.empty()) rep.witness = {elements[i], elements[j]};
        note << "the pointwise relation is not total (two transformations cross); ";
      }
      if (at(i, j) == pointwise_verdict::equal && rep.antisymmetric) {
        rep.antisymmetric = false;
        if (rep.witness.empty()) rep.witness = {elements[i], elements[j]};
        note << "two distinct transformations are indistinguishable on the sample; ";
      }
    }

  auto leq = [&](std::size_t i, std::size_t j) {
    return i == j || at(i, j) == pointwise_verdict::below ||
           at(i, j) == pointwise_verdict::equal;
  };
  rep.transitive = true;
  for (std::size_t i = 0; i < n && rep.transitive; ++i)
    for (std::size_t j = 0; j < n && rep.transitive; ++j)
      for (std::size_t k = 0; k < n && rep.transitive; ++k)
        if (leq(i, j) && leq(j, k) && !leq(i, k)) {
          rep.transitive = false;
          rep.witness = {elements[i], elements[j], elements[k]};
          note << "the pointwise relation is not transitive; ";
        }

  if (rep.total && rep.antisymmetric && rep.transitive) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t i, std::size_t j) { return i != j && leq(i, j); });
    for (std::size_t i : idx) rep.chain.push_back(elements[i]);
  }

  rep.right_invariant = true;
  rep.left_invariant = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      for (const Elt& p : elements) {
        if (rep.right_invariant) {
          auto v = pointwise_compare(compose(elements[i], p), compose(elements[j], p), points,
                                     apply, less);
          if (v == pointwise_verdict::above || v == pointwise_verdict::crossing) {
            rep.right_invariant = false;
            rep.witness = {elements[i], elements[j], p};
            note << "right translation breaks the order; ";
          }
        }
        if (rep.left_invariant) {
          auto v = pointwise_compare(compose(p, elements[i]), compose(p, elements[j]), points,
                                     apply, less);
          if (v == pointwise_verdict::above || v == pointwise_verdict::crossing) {
            rep.left_invariant = false;
            rep.witness = {elements[i], elements[j], p};
            note << "left translation breaks the order; ";
          }
        }
      }
    }

  rep.embedding = true;
  for (std::size_t i = 0; i + 1 < generators_ascending.size(); ++i)
    if (pointwise_compare(generators_ascending[i], generators_ascending[i + 1], points, apply,
                          less) != pointwise_verdict::below) {
      rep.embedding = false;
      if (rep.witness.empty())
        rep.witness = {generators_ascending[i], generators_ascending[i + 1]};
      note << "the ascending generator list does not embed strictly; ";
    }

  if (note.str().empty())
    note << "total bi-invariant linear order verified pointwise on " << n << " elements over "
         << points.size()
         << " evaluation points; order closedness is vacuous on a finite sample";
  rep.note = note.str();
  return rep;
}

// ---------------------------------------------------------------------------
// The experimental circular probe.

struct corder_probe_report {
  std::size_t element_count = 0;
  std::size_t decided_true = 0;   // ordered triples the evaluation points orient
  std::size_t undecided = 0;      // distinct triples no point separates
  std::size_t conflicted = 0;     // points disagree about the orientation
  ternary_relation<std::size_t> relation{std::vector<std::size_t>{}, {}};
  axiom_report<std::size_t> axioms;
  std::string note;
};

/// Pointwise-induced ternary relation on a transformation set: a triple of
/// elements is oriented when every basepoint at which their images are
/// pairwise distinct orients it the same way, and at least one such point
/// exists.  The circular-order axioms are then checked on whatever relation
/// emerges.  This is evidence about one instance, not a theorem: triples no
/// basepoint separates stay undecided and surface as transitivity or
/// totality gaps in the axiom check.
template <class Elt, class Pt, class Apply, class Triple>
corder_probe_report ellis_corder_probe(const std::vector<Elt>& elements,
                                       const std::vector<Pt>& basepoints, Apply&& apply,
                                       Triple&& ctriple) {
  corder_probe_report rep;
  const std::size_t n = elements.size();
  rep.element_count = n;
  std::vector<std::size_t> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  std::vector<std::array<std::size_t, 3>> oriented;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || k == i) continue;
        bool saw_true = false, saw_false = false;
        for (const Pt& a : basepoints) {
          const Pt u = apply(elements[i], a);
          const Pt v = apply(elements[j], a);
          const Pt w = apply(elements[k], a);
          if (u == v || v == w || w == u) continue;
          (ctriple(u, v, w) ? saw_true : saw_false) = true;
        }
        if (saw_true && saw_false)
          ++rep.conflicted;
        else if (saw_true) {
          ++rep.decided_true;
          oriented.push_back({i, j, k});
        } else if (!saw_false)
          ++rep.undecided;
      }
  rep.relation = ternary_relation<std::size_t>(ground, oriented);
  rep.axioms = verify_circular_axioms(rep.relation);
  std::ostringstream note;
  note << "experimental evidence only: the pointwise relation on " << n << " transformations "
       << (rep.axioms.valid ? "satisfies" : "fails") << " the circular-order axioms on this instance";
  if (rep.undecided > 0) note << "; " << rep.undecided << " triples undecided by the basepoints";
  if (rep.conflicted > 0) note << "; " << rep.conflicted << " triples conflicted";
  rep.note = note.str();
  return rep;
}

}  // namespace cyclord
