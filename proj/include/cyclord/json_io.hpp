// JSON document layer for the command-line front end: a recursive label type
// shared by every document, the six input-document schemas (corder, linorder,
// ternary, group, action, scenario), and a canonical field-ordered
// serialization so that equal documents produce byte-identical JSON.
//
// Error discipline: everything structural — malformed JSON, wrong shapes,
// unknown labels, duplicate labels where a set is required — throws
// parse_error (the CLI maps it to exit code 2).  Violations of mathematical
// laws in a structurally well-formed document (a group table that is not
// associative, a ternary relation that fails an axiom, a map that does not
// preserve an order) are reported by the verifiers instead (exit code 1).

#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclord/groups.hpp"
#include "cyclord/lex.hpp"
#include "cyclord/limits.hpp"
#include "cyclord/orders.hpp"

namespace cyclord {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Labels.  A label is an integer, a piece of text, or a composite built from
// smaller labels: pairs (lexicographic products) and the block names of
// covers (points, open intervals, rays).  Composites let constructed objects
// round-trip through the same document schemas as hand-written inputs.

class dyn_label {
public:
  enum class tag { integer, text, pair, point, interval, ray_below, ray_above };

  dyn_label() = default;

  static dyn_label of(long long n) {
    dyn_label l;
    l.t_ = tag::integer;
    l.num_ = n;
    return l;
  }
  static dyn_label of(std::string s) {
    dyn_label l;
    l.t_ = tag::text;
    l.text_ = std::move(s);
    return l;
  }
  static dyn_label pair_of(dyn_label a, dyn_label b) { return composite(tag::pair, {std::move(a), std::move(b)}); }
  static dyn_label point_of(dyn_label x) { return composite(tag::point, {std::move(x)}); }
  static dyn_label interval_of(dyn_label a, dyn_label b) {
    return composite(tag::interval, {std::move(a), std::move(b)});
  }
  static dyn_label ray_below_of(dyn_label x) { return composite(tag::ray_below, {std::move(x)}); }
  static dyn_label ray_above_of(dyn_label x) { return composite(tag::ray_above, {std::move(x)}); }

  tag kind() const { return t_; }
  long long num() const { return num_; }
  const std::string& text() const { return text_; }
  const std::vector<dyn_label>& parts() const { return parts_; }

  friend int compare(const dyn_label& x, const dyn_label& y) {
    if (x.t_ != y.t_) return static_cast<int>(x.t_) < static_cast<int>(y.t_) ? -1 : 1;
    switch (x.t_) {
      case tag::integer: return x.num_ < y.num_ ? -1 : x.num_ > y.num_ ? 1 : 0;
      case tag::text: return x.text_ < y.text_ ? -1 : x.text_ > y.text_ ? 1 : 0;
      default: {
        for (std::size_t i = 0; i < x.parts_.size() && i < y.parts_.size(); ++i)
          if (int c = compare(x.parts_[i], y.parts_[i])) return c;
        return x.parts_.size() < y.parts_.size() ? -1 : x.parts_.size() > y.parts_.size() ? 1 : 0;
      }
    }
  }
  friend bool operator==(const dyn_label& x, const dyn_label& y) { return compare(x, y) == 0; }
  friend bool operator!=(const dyn_label& x, const dyn_label& y) { return compare(x, y) != 0; }
  friend bool operator<(const dyn_label& x, const dyn_label& y) { return compare(x, y) < 0; }
  friend bool operator>(const dyn_label& x, const dyn_label& y) { return compare(x, y) > 0; }
  friend bool operator<=(const dyn_label& x, const dyn_label& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const dyn_label& x, const dyn_label& y) { return compare(x, y) >= 0; }

private:
  static dyn_label composite(tag t, std::vector<dyn_label> parts) {
    dyn_label l;
    l.t_ = t;
    l.parts_ = std::move(parts);
    return l;
  }

  tag t_ = tag::integer;
  long long num_ = 0;
  std::string text_;
  std::vector<dyn_label> parts_;
};

inline json label_to_json(const dyn_label& l) {
  switch (l.kind()) {
    case dyn_label::tag::integer: return json(l.num());
    case dyn_label::tag::text: return json(l.text());
    case dyn_label::tag::pair:
      return json{{"pair", json::array({label_to_json(l.parts()[0]), label_to_json(l.parts()[1])})}};
    case dyn_label::tag::point: return json{{"point", label_to_json(l.parts()[0])}};
    case dyn_label::tag::interval:
      return json{{"interval", json::array({label_to_json(l.parts()[0]), label_to_json(l.parts()[1])})}};
    case dyn_label::tag::ray_below: return json{{"ray_below", label_to_json(l.parts()[0])}};
    case dyn_label::tag::ray_above: return json{{"ray_above", label_to_json(l.parts()[0])}};
  }
  throw std::logic_error("label_to_json: unreachable");
}

inline dyn_label label_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(
                                      std::numeric_limits<long long>::max()))
      throw parse_error("label: integer out of range");
    return dyn_label::of(j.get<long long>());
  }
  if (j.is_string()) return dyn_label::of(j.get<std::string>());
  if (j.is_object() && j.size() == 1) {
    const std::string key = j.begin().key();
    const json& v = j.begin().value();
    auto two = [&](const char* what) {
      if (!v.is_array() || v.size() != 2)
        throw parse_error(std::string("label: ") + what + " needs an array of two labels");
      return std::pair(label_from_json(v[0]), label_from_json(v[1]));
    };
    if (key == "pair") {
      auto [a, b] = two("pair");
      return dyn_label::pair_of(std::move(a), std::move(b));
    }
    if (key == "interval") {
      auto [a, b] = two("interval");
      return dyn_label::interval_of(std::move(a), std::move(b));
    }
    if (key == "point") return dyn_label::point_of(label_from_json(v));
    if (key == "ray_below") return dyn_label::ray_below_of(label_from_json(v));
    if (key == "ray_above") return dyn_label::ray_above_of(label_from_json(v));
    throw parse_error("label: unknown composite '" + key + "'");
  }
  throw parse_error("label: must be an integer, a string, or a one-key composite object");
}

/// Compact human-readable rendering, used by --human output and witnesses.
inline std::string label_str(const dyn_label& l) {
  switch (l.kind()) {
    case dyn_label::tag::integer: return std::to_string(l.num());
    case dyn_label::tag::text: return l.text();
    case dyn_label::tag::pair: return "(" + label_str(l.parts()[0]) + "," + label_str(l.parts()[1]) + ")";
    case dyn_label::tag::point: return "[" + label_str(l.parts()[0]) + "]";
    case dyn_label::tag::interval:
      return "(" + label_str(l.parts()[0]) + ".." + label_str(l.parts()[1]) + ")";
    case dyn_label::tag::ray_below: return "(-inf.." + label_str(l.parts()[0]) + ")";
    case dyn_label::tag::ray_above: return "(" + label_str(l.parts()[0]) + "..+inf)";
  }
  throw std::logic_error("label_str: unreachable");
}

/// Dynamic labels print as their human-readable form, so generic code that
/// streams labels (diagram writers, error messages) works unchanged.
inline std::ostream& operator<<(std::ostream& os, const dyn_label& l) {
  return os << label_str(l);
}

/// Stable object key for a label, used by action maps.  Text labels key as
/// themselves, integers as their decimal form, composites as compact JSON.
inline std::string label_key(const dyn_label& l) {
  switch (l.kind()) {
    case dyn_label::tag::integer: return std::to_string(l.num());
    case dyn_label::tag::text: return l.text();
    default: return label_to_json(l).dump();
  }
}

/// Name a cover block as a label, so quotients of covers are themselves
/// order documents.  Point blocks are wrapped (not passed through bare) so
/// they can never collide with a host label that is already composite.
inline dyn_label label_of_block(const block_id<dyn_label>& b) {
  switch (b.kind) {
    case block_kind::point: return dyn_label::point_of(b.a);
    case block_kind::interval: return dyn_label::interval_of(b.a, b.b);
    case block_kind::ray_below: return dyn_label::ray_below_of(b.a);
    case block_kind::ray_above: return dyn_label::ray_above_of(b.a);
  }
  throw std::logic_error("label_of_block: unreachable");
}

// ---------------------------------------------------------------------------
// Documents.

enum class doc_kind { corder, linorder, ternary, group, action, scenario };

inline const char* kind_name(doc_kind k) {
  switch (k) {
    case doc_kind::corder: return "corder";
    case doc_kind::linorder: return "linorder";
    case doc_kind::ternary: return "ternary";
    case doc_kind::group: return "group";
    case doc_kind::action: return "action";
    case doc_kind::scenario: return "scenario";
  }
  throw std::logic_error("kind_name: unreachable");
}

inline doc_kind kind_from(const std::string& s) {
  if (s == "corder") return doc_kind::corder;
  if (s == "linorder") return doc_kind::linorder;
  if (s == "ternary") return doc_kind::ternary;
  if (s == "group") return doc_kind::group;
  if (s == "action") return doc_kind::action;
  if (s == "scenario") return doc_kind::scenario;
  throw parse_error("document: unknown kind '" + s + "'");
}

/// One parsed input document.  Field use by kind:
///   corder / linorder : labels = the cycle / chain as written
///   ternary           : labels = points, triples
///   group             : labels = elements, table (row i = products of
///                       element i with each element, in listed order)
///   action            : group, space (embedded documents), maps = one image
///                       list per group element, aligned with the space's
///                       labels as written
///   scenario          : family, seed, range, samples
struct document {
  doc_kind kind = doc_kind::corder;
  std::vector<dyn_label> labels;
  std::vector<std::array<dyn_label, 3>> triples;
  std::vector<std::vector<dyn_label>> table;
  std::shared_ptr<document> group;
  std::shared_ptr<document> space;
  std::vector<std::pair<dyn_label, std::vector<dyn_label>>> maps;
  std::string family;
  std::uint64_t seed = 0;
  long long range = 0;
  long long samples = 0;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw parse_error(std::string("document: missing field '") + name + "'");
  return *it;
}

inline std::vector<dyn_label> label_array(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string("document: '") + what + "' must be an array");
  std::vector<dyn_label> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(label_from_json(e));
  return out;
}

inline std::vector<dyn_label> label_set(const json& j, const char* what) {
  auto out = label_array(j, what);
  std::set<dyn_label> seen(out.begin(), out.end());
  if (seen.size() != out.size())
    throw parse_error(std::string("document: duplicate label in '") + what + "'");
  return out;
}

inline long long int_field(const json& j, const char* name, long long fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) throw parse_error(std::string("document: '") + name + "' must be an integer");
  return it->get<long long>();
}

}  // namespace detail

inline document parse_document(const json& j);

namespace detail {

inline void parse_order_body(const json& j, document& d, const char* seq_field) {
  d.labels = label_set(field(j, seq_field), seq_field);
}

inline void parse_ternary_body(const json& j, document& d) {
  d.labels = label_set(field(j, "points"), "points");
  std::set<dyn_label> known(d.labels.begin(), d.labels.end());
  const json& ts = field(j, "triples");
  if (!ts.is_array()) throw parse_error("document: 'triples' must be an array");
  for (const json& t : ts) {
    if (!t.is_array() || t.size() != 3)
      throw parse_error("document: each triple must be an array of three labels");
    std::array<dyn_label, 3> tr{label_from_json(t[0]), label_from_json(t[1]), label_from_json(t[2])};
    for (const dyn_label& l : tr)
      if (!known.count(l)) throw parse_error("document: triple uses a label outside 'points'");
    d.triples.push_back(std::move(tr));
  }
}

inline void parse_group_body(const json& j, document& d) {
  d.labels = label_set(field(j, "elements"), "elements");
  std::set<dyn_label> known(d.labels.begin(), d.labels.end());
  const json& tb = field(j, "table");
  if (!tb.is_array() || tb.size() != d.labels.size())
    throw parse_error("document: 'table' must be an n-by-n array of element labels");
  for (const json& row : tb) {
    if (!row.is_array() || row.size() != d.labels.size())
      throw parse_error("document: 'table' must be an n-by-n array of element labels");
    std::vector<dyn_label> r;
    r.reserve(row.size());
    for (const json& e : row) {
      dyn_label l = label_from_json(e);
      if (!known.count(l)) throw parse_error("document: table entry is not a listed element");
      r.push_back(std::move(l));
    }
    d.table.push_back(std::move(r));
  }
}

inline void parse_action_body(const json& j, document& d) {
  const json& gj = field(j, "group");
  const json& sj = field(j, "space");
  if (!gj.is_object() || !sj.is_object())
    throw parse_error("document: 'group' and 'space' must be embedded documents");
  d.group = std::make_shared<document>(parse_document(gj));
  d.space = std::make_shared<document>(parse_document(sj));
  if (d.group->kind != doc_kind::group)
    throw parse_error("document: the 'group' of an action must have kind 'group'");
  if (d.space->kind != doc_kind::corder && d.space->kind != doc_kind::linorder)
    throw parse_error("document: the 'space' of an action must be a corder or a linorder");

  std::set<dyn_label> space_labels(d.space->labels.begin(), d.space->labels.end());
  const json& mj = field(j, "maps");
  if (!mj.is_object()) throw parse_error("document: 'maps' must be an object");
  std::size_t used = 0;
  for (const dyn_label& g : d.group->labels) {
    auto it = mj.find(label_key(g));
    if (it == mj.end())
      throw parse_error("document: 'maps' is missing group element '" + label_str(g) + "'");
    ++used;
    auto images = label_array(*it, "maps");
    if (images.size() != d.space->labels.size())
      throw parse_error("document: a map must list one image per space label");
    for (const dyn_label& y : images)
      if (!space_labels.count(y)) throw parse_error("document: a map image is not a space label");
    d.maps.emplace_back(g, std::move(images));
  }
  if (used != mj.size()) throw parse_error("document: 'maps' has a key that is not a group element");
}

inline void parse_scenario_body(const json& j, document& d) {
  const json& f = field(j, "family");
  if (!f.is_string()) throw parse_error("document: 'family' must be a string");
  d.family = f.get<std::string>();
  if (d.family != "finite" && d.family != "cascade" && d.family != "sturmian")
    throw parse_error("document: unknown scenario family '" + d.family + "'");
  long long seed = int_field(j, "seed", 0);
  if (seed < 0) throw parse_error("document: 'seed' must be nonnegative");
  d.seed = static_cast<std::uint64_t>(seed);
  d.range = int_field(j, "range", 5);
  d.samples = int_field(j, "samples", 100);
  if (d.range < 1) throw parse_error("document: 'range' must be positive");
  if (d.samples < 0) throw parse_error("document: 'samples' must be nonnegative");
}

}  // namespace detail

inline document parse_document(const json& j) {
  if (!j.is_object()) throw parse_error("document: top level must be an object");
  const json& kj = detail::field(j, "kind");
  if (!kj.is_string()) throw parse_error("document: 'kind' must be a string");
  document d;
  d.kind = kind_from(kj.get<std::string>());
  long long version = detail::int_field(j, "version", 1);
  if (version != 1) throw parse_error("document: unsupported version");
  switch (d.kind) {
    case doc_kind::corder: detail::parse_order_body(j, d, "cycle"); break;
    case doc_kind::linorder: detail::parse_order_body(j, d, "chain"); break;
    case doc_kind::ternary: detail::parse_ternary_body(j, d); break;
    case doc_kind::group: detail::parse_group_body(j, d); break;
    case doc_kind::action: detail::parse_action_body(j, d); break;
    case doc_kind::scenario: detail::parse_scenario_body(j, d); break;
  }
  return d;
}

inline json serialize_document(const document& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  j["version"] = 1;
  auto labels_json = [](const std::vector<dyn_label>& v) {
    json a = json::array();
    for (const dyn_label& l : v) a.push_back(label_to_json(l));
    return a;
  };
  switch (d.kind) {
    case doc_kind::corder: j["cycle"] = labels_json(d.labels); break;
    case doc_kind::linorder: j["chain"] = labels_json(d.labels); break;
    case doc_kind::ternary: {
      j["points"] = labels_json(d.labels);
      json ts = json::array();
      for (const auto& t : d.triples)
        ts.push_back(json::array({label_to_json(t[0]), label_to_json(t[1]), label_to_json(t[2])}));
      j["triples"] = std::move(ts);
      break;
    }
    case doc_kind::group: {
      j["elements"] = labels_json(d.labels);
      json tb = json::array();
      for (const auto& row : d.table) tb.push_back(labels_json(row));
      j["table"] = std::move(tb);
      break;
    }
    case doc_kind::action: {
      j["group"] = serialize_document(*d.group);
      j["space"] = serialize_document(*d.space);
      json maps = json::object();
      for (const auto& [g, images] : d.maps) maps[label_key(g)] = labels_json(images);
      j["maps"] = std::move(maps);
      break;
    }
    case doc_kind::scenario: {
      j["family"] = d.family;
      j["seed"] = d.seed;
      j["range"] = d.range;
      j["samples"] = d.samples;
      break;
    }
  }
  return j;
}

inline bool operator==(const document& a, const document& b) {
  return serialize_document(a) == serialize_document(b);
}

// ---------------------------------------------------------------------------
// Files and digests.

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// FNV-1a (64-bit) of the raw bytes, as "fnv1a:<16 hex digits>".
inline std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a:";
  for (int i = 60; i >= 0; i -= 4) out.push_back(hex[(h >> i) & 0xF]);
  return out;
}

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw parse_error("invalid JSON");
  return j;
}

struct loaded_document {
  document doc;
  std::string path;
  std::string digest;
};

inline loaded_document load_document(const std::string& path) {
  std::string bytes = read_file(path);
  return {parse_document(parse_json_text(bytes)), path, digest(bytes)};
}

// ---------------------------------------------------------------------------
// Conversions between documents and the library's objects.  Structural
// problems were already ruled out by the parser; anything thrown here (by the
// library's own validators) is a semantic failure.

inline circ_order<dyn_label> as_circ(const document& d) {
  if (d.kind != doc_kind::corder) throw parse_error("expected a corder document");
  return circ_order<dyn_label>(d.labels);
}

inline lin_order<dyn_label> as_lin(const document& d) {
  if (d.kind != doc_kind::linorder) throw parse_error("expected a linorder document");
  return lin_order<dyn_label>(d.labels);
}

inline ternary_relation<dyn_label> as_ternary(const document& d) {
  if (d.kind != doc_kind::ternary) throw parse_error("expected a ternary document");
  return ternary_relation<dyn_label>(d.labels, d.triples);
}

/// Builds the verified group table; throws std::invalid_argument naming the
/// violated law when the table is not a group.
inline group_table<dyn_label> as_group(const document& d) {
  if (d.kind != doc_kind::group) throw parse_error("expected a group document");
  return group_table<dyn_label>(d.labels, d.table);
}

inline action_table<dyn_label, dyn_label> as_action_table(const document& d) {
  if (d.kind != doc_kind::action) throw parse_error("expected an action document");
  action_table<dyn_label, dyn_label> act;
  for (const auto& [g, images] : d.maps) {
    std::map<dyn_label, dyn_label> m;
    for (std::size_t i = 0; i < images.size(); ++i) m.emplace(d.space->labels[i], images[i]);
    if (m.size() != images.size())
      throw parse_error("document: a map repeats a space label");  // unreachable after label_set
    act.emplace(g, std::move(m));
  }
  return act;
}

inline document make_corder_doc(const circ_order<dyn_label>& c) {
  document d;
  d.kind = doc_kind::corder;
  d.labels = c.cycle();
  return d;
}

inline document make_linorder_doc(const lin_order<dyn_label>& l) {
  document d;
  d.kind = doc_kind::linorder;
  d.labels = l.chain();
  return d;
}

}  // namespace cyclord
