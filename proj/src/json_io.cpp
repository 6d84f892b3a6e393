#include "hypergrass/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hypergrass/bigfloat.hpp"
#include "hypergrass/config.hpp"
#include "hypergrass/errors.hpp"

namespace hypergrass {

namespace {

json rat_json(const Rat& r) { return rational_str(r); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer())
    return Rat(static_cast<long>(j.get<long long>()));
  require(j.is_string(), errc::parameter_mismatch,
          "matrix entries must be \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

}  // namespace

json subset_json(const KSubset& s) { return json(s.elements()); }

json collection_json(const SortedCollection& c) {
  json out = json::array();
  for (const KSubset& m : c.members()) out.push_back(subset_json(m));
  return out;
}

json matrix_json(const RationalMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.k(); ++r) {
    json row = json::array();
    for (int c = 1; c <= a.n(); ++c) row.push_back(rat_json(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"k", a.k()}, {"n", a.n()}, {"entries", std::move(rows)}};
}

RationalMatrix matrix_from_json(const json& j) {
  require(j.is_object() && j.contains("k") && j.contains("n") &&
              j.contains("entries"),
          errc::parameter_mismatch,
          "matrix JSON must be an object with k, n, and entries");
  require(j["k"].is_number_integer() && j["n"].is_number_integer(),
          errc::parameter_mismatch, "matrix k and n must be integers");
  const int k = j["k"].get<int>();
  const int n = j["n"].get<int>();
  require(k >= 1 && n >= k, errc::parameter_mismatch,
          "matrix needs 1 <= k <= n");
  const json& entries = j["entries"];
  require(entries.is_array() && static_cast<int>(entries.size()) == k,
          errc::parameter_mismatch, "entries must hold k rows");
  std::vector<Rat> flat;
  flat.reserve(static_cast<std::size_t>(k) * n);
  for (const json& row : entries) {
    require(row.is_array() && static_cast<int>(row.size()) == n,
            errc::parameter_mismatch, "each matrix row must hold n entries");
    for (const json& cell : row) flat.push_back(rat_from_json(cell));
  }
  return RationalMatrix(k, n, flat);
}

RationalMatrix load_matrix(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    require(in.good(), errc::parameter_mismatch,
            "cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    raise(errc::parameter_mismatch,
          "matrix file '" + path + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

json plucker_json(const PluckerVector& p) {
  json values = json::array();
  if (p.exact) {
    for (const auto& [subset, value] : p.values)
      values.push_back(
          json{{"subset", subset_json(subset)}, {"value", rat_json(value)}});
  } else {
    for (const auto& [subset, ball] : p.approx)
      values.push_back(
          json{{"subset", subset_json(subset)}, {"value", ball.str()}});
  }
  return json{{"k", p.k},
              {"n", p.n},
              {"exact", p.exact},
              {"power", p.power},
              {"values", std::move(values)}};
}

json arrangement_json(const ArrangementPartition& a) {
  json blocks = json::array();
  for (std::size_t b = 0; b < a.blocks.size(); ++b) {
    json members = json::array();
    for (const KSubset& s : a.blocks[b]) members.push_back(subset_json(s));
    json blk{{"members", std::move(members)}};
    if (b < a.block_values.size()) blk["value"] = rat_json(a.block_values[b]);
    blocks.push_back(std::move(blk));
  }
  return json{{"k", a.k},
              {"n", a.n},
              {"power", a.power},
              {"blocks", std::move(blocks)}};
}

json normalize_json(const TorusScaling& scaling, const PluckerVector& p) {
  json out = plucker_json(p);
  if (p.exact) {
    const long d = p.power;
    json alphas = json::array();
    for (const Rat& a : scaling.alpha_powered(d)) alphas.push_back(rat_json(a));
    out["alpha_powered"] = std::move(alphas);
  } else {
    json alphas = json::array();
    for (const Ball& a : scaling.alpha_float(config().float_precision_bits))
      alphas.push_back(a.str());
    out["alpha"] = std::move(alphas);
  }
  return out;
}

json witness_json(const WitnessResult& w) {
  json largest = json::array();
  for (const auto& [subset, value] : w.normalized.values)
    if (value == 1) largest.push_back(subset_json(subset));
  return json{
      {"k", w.point.k()},
      {"n", w.point.n()},
      {"W", subset_json(w.move.replacement)},
      {"detour",
       json{{"center", subset_json(w.move.center)},
            {"replacement", subset_json(w.move.replacement)},
            {"corner_c", subset_json(w.move.corner_c)},
            {"corner_d", subset_json(w.move.corner_d)},
            {"a", w.move.a},
            {"b", w.move.b}}},
      {"epsilon", rat_json(w.eps)},
      {"rotation", w.rotation},
      {"matrix", matrix_json(w.point)},
      {"power", w.normalized.power},
      {"largest", std::move(largest)},
      {"second_value", rat_json(w.normalized.value(w.move.replacement))},
      {"normalized", plucker_json(w.normalized)}};
}

json grid_json(const OrientedYoungGrid& g) {
  json vertices = json::array();
  for (const auto& [pos, label] : g.vertex_labels)
    vertices.push_back(json{{"i", pos.i},
                            {"j", pos.j},
                            {"label", subset_json(label)},
                            {"outer", g.is_outer(pos)}});
  json outer = json::array();
  for (const GridPos& p : g.outer_path) outer.push_back(json{p.i, p.j});
  json rels = json::array();
  for (const GridRelation& rel : grid_inequalities(g))
    rels.push_back(json{{"lesser", subset_json(rel.lesser)},
                        {"greater", subset_json(rel.greater)},
                        {"at", json{rel.at.i, rel.at.j}},
                        {"direction", rel.vertical ? "vertical" : "horizontal"}});
  json chain = json::array();
  for (const GridPos& p : origin_chain(g)) chain.push_back(json{p.i, p.j});
  return json{{"k", g.k},
              {"n", g.n},
              {"h", g.h},
              {"v", g.v},
              {"anchor", g.anchor},
              {"a_equals_b", g.a_equals_b},
              {"top", g.top},
              {"omega_H", g.omega_H},
              {"omega_H_str", g.omega_H_str()},
              {"bottom_labels", g.bottom_label},
              {"right_labels", g.right_label},
              {"vertices", std::move(vertices)},
              {"outer_path", std::move(outer)},
              {"swapping_distance", swapping_distance(g)},
              {"inequalities", std::move(rels)},
              {"origin_chain", std::move(chain)}};
}

namespace {

/// Class index per node representative, in the order classes() reports.
std::map<int, int> class_slots(const MinorPoset& p) {
  std::map<int, int> slot;
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    slot.emplace(p.rep[i], static_cast<int>(slot.size()));
  return slot;
}

std::string class_label(const std::vector<KSubset>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += members[i].str();
  }
  return out;
}

}  // namespace

json poset_json(const MinorPoset& p) {
  const auto groups = p.classes();
  const auto slot = class_slots(p);
  json classes = json::array();
  for (const auto& group : groups) {
    json members = json::array();
    for (const KSubset& s : group) members.push_back(subset_json(s));
    classes.push_back(std::move(members));
  }
  json edges = json::array();
  for (const auto& [lo, hi] : p.hasse()) {
    json e{{"lesser", slot.at(lo)}, {"greater", slot.at(hi)}};
    const auto reason = p.provenance.find({lo, hi});
    e["reason"] =
        reason == p.provenance.end() ? "transitivity" : reason->second;
    edges.push_back(std::move(e));
  }
  return json{{"k", p.k},
              {"n", p.n},
              {"classes", std::move(classes)},
              {"hasse", std::move(edges)}};
}

std::string poset_dot(const MinorPoset& p) {
  const auto groups = p.classes();
  const auto slot = class_slots(p);
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t c = 0; c < groups.size(); ++c)
    out += "  c" + std::to_string(c) + " [label=\"" +
           class_label(groups[c]) + "\"];\n";
  for (const auto& [lo, hi] : p.hasse())
    out += "  c" + std::to_string(slot.at(lo)) + " -> c" +
           std::to_string(slot.at(hi)) + ";\n";
  out += "}\n";
  return out;
}

json dual_graph_json(const DualGraph& g) {
  json vertices = json::array();
  for (const SortedCollection& v : g.vertices)
    vertices.push_back(collection_json(v));
  json edges = json::array();
  for (std::size_t v = 0; v < g.adj.size(); ++v)
    for (int w : g.adj[v])
      if (static_cast<std::size_t>(v) < static_cast<std::size_t>(w))
        edges.push_back(json{static_cast<int>(v), w});
  return json{{"k", g.k},
              {"n", g.n},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

std::string dual_graph_dot(const DualGraph& g) {
  std::string out = "graph dual {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + g.vertices[v].str() +
           "\"];\n";
  for (std::size_t v = 0; v < g.adj.size(); ++v)
    for (int w : g.adj[v])
      if (static_cast<int>(v) < w)
        out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) +
               ";\n";
  out += "}\n";
  return out;
}

json report_json(const ExperimentReport& r, bool with_timings) {
  json out{{"experiment", r.id},
           {"parameters", json{{"k", r.k},
                               {"n", r.n},
                               {"t", r.t},
                               {"trials", r.trials},
                               {"seed", r.seed}}},
           {"cases", r.cases},
           {"pass", r.pass()},
           {"failures", r.failures},
           {"findings", r.findings}};
  if (with_timings) out["runtime_seconds"] = r.runtime_seconds;
  return out;
}

std::string report_csv(const ExperimentReport& r, bool with_timings) {
  std::ostringstream out;
  out << "experiment,k,n,t,trials,seed,cases,failures,findings,pass";
  if (with_timings) out << ",runtime_seconds";
  out << "\n";
  out << r.id << ',' << r.k << ',' << r.n << ',' << r.t << ',' << r.trials
      << ',' << r.seed << ',' << r.cases << ',' << r.failures.size() << ','
      << r.findings.size() << ',' << (r.pass() ? "true" : "false");
  if (with_timings) out << ',' << r.runtime_seconds;
  out << "\n";
  return out.str();
}

}  // namespace hypergrass
