// cyclord — command-line front end for the order toolkit.
//
// Subcommands
//   verify <file>        check a document's laws, report pass/fail + witnesses
//   build <what> ...     construct an object (lex | lift | cover | tower | quotient)
//   orderable <file>     decide left-orderability of a finite group
//   selftest             run the built-in verification suites
//
// Exit codes: 0 = success, 1 = a semantic check failed (a law is violated,
// a construction was refused, a group is not orderable), 2 = input error
// (unreadable file, malformed document, bad flags, size bound exceeded).
//
// Reports are JSON on stdout (or readable text with --human).  Given the
// same inputs and the same seed the result sections are byte-identical;
// only the timing section varies between runs.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclord/cascade.hpp"
#include "cyclord/cop.hpp"
#include "cyclord/ellis.hpp"
#include "cyclord/groups.hpp"
#include "cyclord/json_io.hpp"
#include "cyclord/lex.hpp"
#include "cyclord/limits.hpp"
#include "cyclord/orders.hpp"
#include "cyclord/quadirr.hpp"
#include "cyclord/selftest.hpp"
#include "cyclord/sturmian.hpp"

namespace {

using namespace cyclord;

struct run_context {
  bool human = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t max_size = default_max_points;
};

void enforce_size(std::size_t count, const char* what, const run_context& ctx) {
  if (count > ctx.max_size)
    throw parse_error(std::string(what) + " has " + std::to_string(count) +
                      " labels, above the size bound of " + std::to_string(ctx.max_size) +
                      " (raise --max-size or CYCLORD_MAX_SIZE)");
}

json labels_json(const std::vector<dyn_label>& v) {
  json a = json::array();
  for (const dyn_label& l : v) a.push_back(label_to_json(l));
  return a;
}

struct report {
  json doc = json::object();
  json results = json::array();
  json timing = json::object();
  bool any_fail = false;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  report(const std::string& command, std::uint64_t seed) {
    doc["tool"] = "cyclord";
    doc["command"] = command;
    doc["inputs"] = json::array();
    doc["seed"] = seed;
  }

  void input(const loaded_document& ld) {
    doc["inputs"].push_back(json{{"path", ld.path}, {"digest", ld.digest}});
  }

  void add(const std::string& check, bool ok, json extra = json::object()) {
    json e;
    e["check"] = check;
    e["status"] = ok ? "pass" : "fail";
    for (auto& [k, v] : extra.items()) e[k] = v;
    results.push_back(std::move(e));
    if (!ok) any_fail = true;
  }

  int finish(const run_context& ctx, json output = json()) {
    doc["results"] = results;
    if (!output.is_null()) doc["output"] = std::move(output);
    doc["status"] = any_fail ? "fail" : "pass";
    timing["total"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    doc["timing_ms"] = timing;
    if (ctx.human) {
      std::cout << doc["tool"].get<std::string>() << " " << doc["command"].get<std::string>()
                << "\n";
      for (const auto& in : doc["inputs"])
        std::cout << "  input: " << in["path"].get<std::string>() << " ("
                  << in["digest"].get<std::string>() << ")\n";
      std::cout << "  seed: " << doc["seed"] << "\n";
      for (const auto& e : doc["results"]) {
        std::cout << "  " << e["check"].get<std::string>() << ": "
                  << (e["status"] == "pass" ? "PASS" : "FAIL");
        for (auto& [k, v] : e.items())
          if (k != "check" && k != "status") std::cout << "  " << k << "=" << v.dump();
        std::cout << "\n";
      }
      if (doc.contains("output")) std::cout << "  output: " << doc["output"].dump() << "\n";
      std::cout << "status: " << (any_fail ? "FAIL" : "PASS") << " ("
                << timing["total"].get<double>() << " ms)\n";
    } else {
      std::cout << doc.dump(2) << "\n";
    }
    return any_fail ? 1 : 0;
  }
};

// ---------------------------------------------------------------------------
// verify

void verify_corder(report& rep, const document& d, const run_context& ctx) {
  enforce_size(d.labels.size(), "cycle", ctx);
  auto c = as_circ(d);
  rep.add("circular-axioms", verify_circular_axioms(derived_relation(c), ctx.max_size).valid,
          json{{"size", c.size()}});
  bool cuts = true;
  for (const dyn_label& z : c.cycle())
    if (!(circularize(cut_order(c, z)) == c)) cuts = false;
  rep.add("cut-round-trip", cuts);
}

void verify_linorder(report& rep, const document& d, const run_context& ctx) {
  enforce_size(d.labels.size(), "chain", ctx);
  auto l = as_lin(d);
  rep.add("chain-valid", true, json{{"size", l.size()}});
  bool rt = l.empty() || cut_order(circularize(l), l.chain().front()) == l;
  rep.add("circularize-cut", rt);
}

void verify_ternary(report& rep, const document& d, const run_context& ctx) {
  enforce_size(d.labels.size(), "points", ctx);
  auto rel = as_ternary(d);
  auto ax = verify_circular_axioms(rel, ctx.max_size);
  if (ax.valid) {
    rep.add("circular-axioms", true);
    auto c = canonical_circ_order(rel, ctx.max_size);
    rep.add("realized", true, json{{"cycle", labels_json(c.cycle())}});
  } else {
    rep.add("circular-axioms", false,
            json{{"axiom", axiom_name(*ax.failed_axiom)}, {"witness", labels_json(ax.witness)}});
  }
}

void verify_group(report& rep, const document& d, const run_context& ctx) {
  enforce_size(d.labels.size(), "elements", ctx);
  try {
    auto g = as_group(d);
    rep.add("group-laws", true,
            json{{"order", g.size()}, {"abelian", g.is_abelian()}, {"cyclic", g.is_cyclic()}});
  } catch (const std::invalid_argument& e) {
    rep.add("group-laws", false, json{{"reason", e.what()}});
  }
}

void verify_action(report& rep, const document& d, const run_context& ctx) {
  enforce_size(d.group->labels.size(), "elements", ctx);
  enforce_size(d.space->labels.size(), "space", ctx);
  group_table<dyn_label> g({dyn_label::of(0)}, {{dyn_label::of(0)}});
  try {
    g = as_group(*d.group);
    rep.add("group-laws", true, json{{"order", g.size()}});
  } catch (const std::invalid_argument& e) {
    rep.add("group-laws", false, json{{"reason", e.what()}});
    return;
  }
  auto act = as_action_table(d);
  try {
    validate_action(g, act, d.space->labels);
    rep.add("action-laws", true, json{{"effective", action_effective(g, act)}});
  } catch (const std::invalid_argument& e) {
    rep.add("action-laws", false, json{{"reason", e.what()}});
    return;
  }
  // Order preservation of every translation: with the regular action this is
  // exactly left invariance of the order.
  bool all = true;
  json witness;
  if (d.space->kind == doc_kind::corder) {
    circ_order<dyn_label> space(d.space->labels);
    for (const auto& [gl, m] : act) {
      auto v = cop_check(m, space, space);
      if (!v.is_cop() && all) {
        all = false;
        json w = json::array();
        for (const dyn_label& x : v.witness) w.push_back(label_to_json(x));
        witness = json{{"element", label_to_json(gl)}, {"witness", w}};
      }
    }
  } else {
    lin_order<dyn_label> space(d.space->labels);
    for (const auto& [gl, m] : act)
      if (!lop_check(m, space, space) && all) {
        all = false;
        witness = json{{"element", label_to_json(gl)}};
      }
  }
  rep.add("order-preservation", all, all ? json::object() : witness);
}

void verify_scenario(report& rep, const document& d, const run_context& ctx) {
  std::uint64_t seed = ctx.seed_given ? ctx.seed : d.seed;
  rep.doc["seed"] = seed;
  if (d.family == "finite") {
    int n = static_cast<int>(std::min<long long>(std::max<long long>(d.range, 1), 12));
    auto g = cyclic_group(n);
    auto space = make_cn(n);
    action_table<int, int> act;
    for (int e : g.elements()) {
      std::map<int, int> m;
      for (int x : space.cycle()) m.emplace(x, (x + e) % n);
      act.emplace(e, std::move(m));
    }
    auto ts = finite_ellis(g, act, space.cycle());
    rep.add("translation-closure", true, json{{"elements", ts.elements.size()}});
    rep.add("attribution-injective", ts.attribution_injective == action_effective(g, act));
    auto probe = ellis_corder_probe(
        ts.elements, space.cycle(), [](const std::map<int, int>& m, int x) { return m.at(x); },
        [&](int a, int b, int c) { return space.triple(a, b, c); });
    rep.add("probe-decided", probe.conflicted == 0 && probe.undecided == 0,
            json{{"decided", probe.decided_true},
                 {"undecided", probe.undecided},
                 {"conflicted", probe.conflicted}});
    rep.add("probe-axioms", probe.axioms.valid);
  } else if (d.family == "cascade") {
    auto elems = cascade_elements(d.range);
    std::vector<cascade_elt> gens;
    for (long long k = -d.range; k <= d.range; ++k) gens.push_back(cascade_elt::translation(k));
    auto window = cascade_window(std::max<long long>(d.samples, 1)).chain();
    auto r = ellis_linear_order(
        elems, gens, window,
        [](const cascade_elt& e, const extended_int& x) { return cascade_apply(e, x); },
        [](const cascade_elt& u, const cascade_elt& v) { return cascade_compose(u, v); },
        [](const extended_int& a, const extended_int& b) { return a < b; });
    rep.add("linear-order", r.hypothesis && r.total && r.antisymmetric && r.transitive,
            json{{"elements", elems.size()}, {"points", window.size()}});
    rep.add("bi-invariance", r.right_invariant && r.left_invariant);
    rep.add("embedding", r.embedding);
  } else {  // sturmian
    std::mt19937_64 rng(seed);
    auto rnd = [&](long long lo, long long hi) {
      return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto rand_angle = [&]() {
      quad_irr x = qi(rnd(-20, 20), rnd(-20, 20));
      if (rng() & 1) x = x + quad_irr{rational(rnd(-6, 6), rnd(1, 7)), rational(0)};
      return x;
    };
    auto rand_point = [&]() { return make_ta(rand_angle(), rng() & 1 ? 1 : -1); };
    auto rand_elt = [&]() {
      return rng() & 1 ? sturmian_elt::power(rnd(-8, 8))
                       : sturmian_elt::limit(rand_angle(), rng() & 1 ? 1 : -1);
    };
    bool laws = true;
    for (long long i = 0; i < d.samples; ++i) {
      auto u = rand_elt(), v = rand_elt();
      auto x = rand_point();
      if (!(sturmian_apply(sturmian_compose(u, v), x) ==
            sturmian_apply(u, sturmian_apply(v, x))))
        laws = false;
    }
    rep.add("composition-laws", laws, json{{"samples", d.samples}});
    bool sandwich = true;
    for (long long n = -d.range; n <= d.range; ++n)
      if (!sturmian_etriple(sturmian_elt::limit(qi_alpha(n), -1), sturmian_elt::power(n),
                            sturmian_elt::limit(qi_alpha(n), 1)))
        sandwich = false;
    rep.add("sandwich", sandwich, json{{"range", d.range}});
    std::vector<sturmian_elt> sample;
    for (long long k = -d.range; k <= d.range; ++k) {
      sample.push_back(sturmian_elt::power(k));
      sample.push_back(sturmian_elt::limit(qi_alpha(k), k % 2 ? -1 : 1));
    }
    auto ideal = verify_minimal_ideal(sample);
    rep.add("minimal-ideal", ideal.closed_left && ideal.closed_right,
            json{{"checked", ideal.checked}});
  }
}

int cmd_verify(const std::string& path, const run_context& ctx) {
  auto ld = load_document(path);
  report rep("verify", ctx.seed);
  rep.input(ld);
  switch (ld.doc.kind) {
    case doc_kind::corder: verify_corder(rep, ld.doc, ctx); break;
    case doc_kind::linorder: verify_linorder(rep, ld.doc, ctx); break;
    case doc_kind::ternary: verify_ternary(rep, ld.doc, ctx); break;
    case doc_kind::group: verify_group(rep, ld.doc, ctx); break;
    case doc_kind::action: verify_action(rep, ld.doc, ctx); break;
    case doc_kind::scenario: verify_scenario(rep, ld.doc, ctx); break;
  }
  return rep.finish(ctx);
}

// ---------------------------------------------------------------------------
// build

struct build_args {
  std::string what;
  std::string base, fiber, host, markers, dot, out;
  std::vector<std::string> fibers;
  std::size_t budget = default_tower_budget;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot write file '" + path + "'");
  f << text;
}

json cover_json(const cycle_cover<dyn_label>& c) {
  json j;
  j["support"] = labels_json(c.support);
  json blocks = json::array();
  for (const auto& b : c.blocks) blocks.push_back(label_to_json(label_of_block(b)));
  j["blocks"] = std::move(blocks);
  json members = json::array();
  for (const auto& b : c.blocks)
    members.push_back(json{{"block", label_to_json(label_of_block(b))},
                           {"labels", labels_json(c.members.at(b))}});
  j["members"] = std::move(members);
  json proj = json::array();
  for (const auto& [x, b] : c.projection.table)
    proj.push_back(json::array({label_to_json(x), label_to_json(label_of_block(b))}));
  j["projection"] = std::move(proj);
  return j;
}

json cover_json(const chain_cover<dyn_label>& c) {
  json j;
  j["support"] = labels_json(c.support);
  json blocks = json::array();
  for (const auto& b : c.blocks) blocks.push_back(label_to_json(label_of_block(b)));
  j["blocks"] = std::move(blocks);
  json members = json::array();
  for (const auto& b : c.blocks)
    members.push_back(json{{"block", label_to_json(label_of_block(b))},
                           {"labels", labels_json(c.members.at(b))}});
  j["members"] = std::move(members);
  json proj = json::array();
  for (const auto& [x, b] : c.projection.table)
    proj.push_back(json::array({label_to_json(x), label_to_json(label_of_block(b))}));
  j["projection"] = std::move(proj);
  return j;
}

template <class Cover>
json tower_json(const basic_tower<Cover>& tw) {
  json j;
  json levels = json::array();
  for (const auto& lv : tw.levels) {
    json blocks = json::array();
    for (const auto& b : lv.blocks) blocks.push_back(label_to_json(label_of_block(b)));
    levels.push_back(json{{"support", labels_json(lv.support)}, {"blocks", std::move(blocks)}});
  }
  j["levels"] = std::move(levels);
  json bonds = json::array();
  for (const auto& [key, bond] : tw.bondings) {
    json table = json::array();
    for (const auto& [b, c] : bond.table)
      table.push_back(json::array(
          {label_to_json(label_of_block(b)), label_to_json(label_of_block(c))}));
    bonds.push_back(
        json{{"fine", key.first}, {"coarse", key.second}, {"table", std::move(table)}});
  }
  j["bondings"] = std::move(bonds);
  return j;
}

std::vector<dyn_label> parse_marker_list(const json& j) {
  if (!j.is_array()) throw parse_error("--markers must be a JSON array");
  std::vector<dyn_label> out;
  for (const json& e : j) out.push_back(label_from_json(e));
  return out;
}

int cmd_build(const build_args& a, const run_context& ctx) {
  report rep("build " + a.what, ctx.seed);
  json output;
  try {
    if (a.what == "lex") {
      if (a.base.empty() || a.fiber.empty())
        throw parse_error("build lex requires --base (corder) and --fiber (linorder)");
      auto bd = load_document(a.base);
      auto fd = load_document(a.fiber);
      rep.input(bd);
      rep.input(fd);
      auto base = as_circ(bd.doc);
      auto fiber = as_lin(fd.doc);
      enforce_size(base.size(), "base", ctx);
      enforce_size(fiber.size(), "fiber", ctx);
      enforce_size(base.size() * std::max<std::size_t>(fiber.size(), 1), "product", ctx);
      auto prod = lex_circ_lin(base, fiber);
      auto relabeled = map_labels(prod, [](const std::pair<dyn_label, dyn_label>& p) {
        return dyn_label::pair_of(p.first, p.second);
      });
      rep.add("lexicographic-product", true, json{{"size", relabeled.size()}});
      rep.add("circular-axioms",
              verify_circular_axioms(derived_relation(relabeled), ctx.max_size).valid);
      output = serialize_document(make_corder_doc(relabeled));
    } else if (a.what == "lift") {
      if (a.base.empty() || a.fibers.empty())
        throw parse_error("build lift requires --base and one --fiber per base label");
      auto bd = load_document(a.base);
      rep.input(bd);
      auto base = as_circ(bd.doc);
      if (a.fibers.size() != bd.doc.labels.size())
        throw parse_error("build lift: need exactly one --fiber per base label, in cycle order");
      std::map<dyn_label, lin_order<dyn_label>> fibers;
      std::map<dyn_label, dyn_label> q;
      std::size_t total = 0;
      for (std::size_t i = 0; i < a.fibers.size(); ++i) {
        auto fd = load_document(a.fibers[i]);
        rep.input(fd);
        auto fiber = as_lin(fd.doc);
        total += fiber.size();
        enforce_size(total, "total space", ctx);
        for (const dyn_label& x : fiber.chain())
          if (!q.emplace(x, bd.doc.labels[i]).second)
            throw parse_error("build lift: label '" + label_str(x) + "' appears in two fibers");
        fibers.emplace(bd.doc.labels[i], std::move(fiber));
      }
      auto lifted = fibered_lift(q, base, fibers);
      rep.add("fibered-lift", true, json{{"size", lifted.size()}});
      rep.add("quotient-preserves", cop_check(q, lifted, base).is_cop());
      output = serialize_document(make_corder_doc(lifted));
    } else if (a.what == "cover" || a.what == "quotient") {
      if (a.host.empty() || a.markers.empty())
        throw parse_error("build " + a.what + " requires --host and --markers");
      auto hd = load_document(a.host);
      rep.input(hd);
      enforce_size(hd.doc.labels.size(), "host", ctx);
      auto markers = parse_marker_list(parse_json_text(a.markers));
      if (hd.doc.kind == doc_kind::corder) {
        auto cover = build_cycle_cover(as_circ(hd.doc), markers);
        rep.add("cover", true,
                json{{"markers", cover.support.size()}, {"blocks", cover.blocks.size()}});
        if (a.what == "cover") {
          output = cover_json(cover);
        } else {
          auto quot = map_labels(cover.quotient,
                                 [](const block_id<dyn_label>& b) { return label_of_block(b); });
          output = serialize_document(make_corder_doc(quot));
        }
      } else if (hd.doc.kind == doc_kind::linorder) {
        auto cover = build_chain_cover(as_lin(hd.doc), markers);
        rep.add("cover", true,
                json{{"markers", cover.support.size()}, {"blocks", cover.blocks.size()}});
        if (a.what == "cover") {
          output = cover_json(cover);
        } else {
          auto quot = map_labels(cover.quotient,
                                 [](const block_id<dyn_label>& b) { return label_of_block(b); });
          document qd;
          qd.kind = doc_kind::linorder;
          qd.labels = quot.chain();
          output = serialize_document(qd);
        }
      } else {
        throw parse_error("build " + a.what + ": --host must be a corder or a linorder");
      }
    } else if (a.what == "tower") {
      if (a.host.empty() || a.markers.empty())
        throw parse_error("build tower requires --host and --markers (an array of arrays)");
      auto hd = load_document(a.host);
      rep.input(hd);
      enforce_size(hd.doc.labels.size(), "host", ctx);
      json mj = parse_json_text(a.markers);
      if (!mj.is_array()) throw parse_error("--markers must be a JSON array of arrays");
      std::vector<std::vector<dyn_label>> seeds;
      for (const json& row : mj) seeds.push_back(parse_marker_list(row));
      std::string dot;
      if (hd.doc.kind == doc_kind::corder) {
        auto tw = build_tower(as_circ(hd.doc), seeds, a.budget);
        rep.add("tower", true,
                json{{"levels", tw.levels.size()}, {"bondings", tw.bondings.size()}});
        output = tower_json(tw);
        dot = tower_dot(tw);
      } else if (hd.doc.kind == doc_kind::linorder) {
        auto tw = build_chain_tower(as_lin(hd.doc), seeds, a.budget);
        rep.add("tower", true,
                json{{"levels", tw.levels.size()}, {"bondings", tw.bondings.size()}});
        output = tower_json(tw);
        dot = tower_dot(tw);
      } else {
        throw parse_error("build tower: --host must be a corder or a linorder");
      }
      if (!a.dot.empty()) {
        write_text(a.dot, dot);
        rep.add("dot-written", true, json{{"path", a.dot}});
      }
    } else {
      throw parse_error("unknown build target '" + a.what +
                        "' (expected lex, lift, cover, tower, or quotient)");
    }
  } catch (const std::invalid_argument& e) {
    rep.add(a.what + "-construction", false, json{{"reason", e.what()}});
    return rep.finish(ctx);
  } catch (const std::length_error& e) {
    rep.add(a.what + "-construction", false, json{{"reason", e.what()}});
    return rep.finish(ctx);
  }
  if (!a.out.empty() && !output.is_null()) write_text(a.out, output.dump(1) + "\n");
  return rep.finish(ctx, std::move(output));
}

// ---------------------------------------------------------------------------
// orderable

int cmd_orderable(const std::string& path, const run_context& ctx) {
  auto ld = load_document(path);
  report rep("orderable", ctx.seed);
  rep.input(ld);
  enforce_size(ld.doc.labels.size(), "elements", ctx);
  group_table<dyn_label> g({dyn_label::of(0)}, {{dyn_label::of(0)}});
  try {
    g = as_group(ld.doc);
    rep.add("group-laws", true, json{{"order", g.size()}});
  } catch (const std::invalid_argument& e) {
    rep.add("group-laws", false, json{{"reason", e.what()}});
    return rep.finish(ctx);
  }
  auto dec = finite_lcord_decide(g);
  json output;
  output["orderable"] = dec.orderable;
  if (dec.orderable) {
    rep.add("left-invariant-order",
            left_invariance_report(g, *dec.certificate).invariant &&
                right_invariance_report(g, *dec.certificate).invariant,
            json{{"generator", label_to_json(*dec.generator)}});
    output["generator"] = label_to_json(*dec.generator);
    output["certificate"] = serialize_document(make_corder_doc(*dec.certificate));
  } else {
    json transcript = json::array();
    for (const auto& [a, ord] : dec.transcript)
      transcript.push_back(json::array({label_to_json(a), ord}));
    rep.add("left-invariant-order", false,
            json{{"reason", "no single element generates the group"},
                 {"transcript", transcript}});
    output["transcript"] = std::move(transcript);
  }
  return rep.finish(ctx, std::move(output));
}

// ---------------------------------------------------------------------------
// selftest

int cmd_selftest(std::vector<std::string> names, const run_context& ctx) {
  auto known = suite_names();
  if (names.empty()) names = known;
  for (const auto& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw parse_error("unknown suite '" + n + "'");
  report rep("selftest", ctx.seed);
  for (const auto& n : names) {
    auto res = run_suite(n, ctx.seed);
    json extra{{"checks", res.checks}};
    if (!res.detail.empty()) extra["detail"] = res.detail;
    rep.add("suite:" + n, res.pass, extra);
    rep.timing[n] = res.millis;
  }
  return rep.finish(ctx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circular and linear order toolkit"};
  app.require_subcommand(1);

  run_context ctx;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--human", ctx.human, "readable text instead of JSON");
    sub->add_option("--max-size", ctx.max_size, "label-count bound on inputs")
        ->envname("CYCLORD_MAX_SIZE");
    return sub->add_option("--seed", ctx.seed, "seed for randomized checks");
  };

  static std::string vpath;
  auto* v = app.add_subcommand("verify", "check a document's laws");
  v->add_option("file", vpath, "input document (JSON)")->required();
  auto* vseed = add_common(v);
  v->callback([&, vseed] {
    ctx.seed_given = vseed->count() > 0;
    action = [&] { return cmd_verify(vpath, ctx); };
  });

  static build_args ba;
  auto* b = app.add_subcommand("build", "construct an object and emit it as JSON");
  b->add_option("what", ba.what, "lex | lift | cover | tower | quotient")->required();
  b->add_option("--base", ba.base, "base circular order (lex, lift)");
  b->add_option("--fiber", ba.fibers, "fiber linear order (lex: one; lift: one per base label)");
  b->add_option("--host", ba.host, "host order document (cover, tower, quotient)");
  b->add_option("--markers", ba.markers, "marker labels as JSON (array, or array of arrays)");
  b->add_option("--budget", ba.budget, "level budget for join closure");
  b->add_option("--dot", ba.dot, "write the tower diagram (GraphViz) to this file");
  b->add_option("--out", ba.out, "also write the constructed document to this file");
  add_common(b);
  b->callback([&] {
    if (ba.what == "lex") {
      if (ba.fibers.size() > 1) throw CLI::ValidationError("build lex takes a single --fiber");
      ba.fiber = ba.fibers.empty() ? "" : ba.fibers.front();
    }
    action = [&] { return cmd_build(ba, ctx); };
  });

  static std::string opath;
  auto* o = app.add_subcommand("orderable", "decide left-orderability of a finite group");
  o->add_option("file", opath, "group document (JSON)")->required();
  add_common(o);
  o->callback([&] { action = [&] { return cmd_orderable(opath, ctx); }; });

  static std::vector<std::string> suites;
  auto* s = app.add_subcommand("selftest", "run built-in verification suites");
  s->add_option("--suite", suites, "suite name (repeatable; default: all)");
  add_common(s);
  s->callback([&] { action = [&] { return cmd_selftest(suites, ctx); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const parse_error& e) {
    if (ctx.human) {
      std::cerr << "input error: " << e.what() << "\n";
    } else {
      json err{{"tool", "cyclord"}, {"status", "input-error"}, {"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    if (ctx.human) {
      std::cerr << "internal error: " << e.what() << "\n";
    } else {
      json err{{"tool", "cyclord"}, {"status", "internal-error"}, {"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    return 2;
  }
}
