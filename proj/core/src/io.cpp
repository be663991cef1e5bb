#include "torfib/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torfib {

using nlohmann::json;

namespace {

json tree_json(const StableTree& t) {
  json vs = json::array();
  for (const TreeVertex& v : t.vertices()) vs.push_back({{"genus", v.genus}, {"id", v.id}});
  json es = json::array();
  for (const auto& e : t.edges())
    es.push_back(json::array({t.vertex(e[0]).id, t.vertex(e[1]).id}));
  return json{{"edges", es}, {"vertices", vs}};
}

StableTree tree_from(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("tree JSON needs \"vertices\" and \"edges\"");
  std::vector<TreeVertex> vs;
  for (const auto& v : j.at("vertices")) {
    if (!v.contains("id") || !v.contains("genus"))
      throw std::invalid_argument("vertex entries need \"id\" and \"genus\"");
    if (!v.at("genus").is_number_integer())
      throw std::invalid_argument("vertex genus must be an integer");
    vs.push_back({v.at("id").get<std::string>(), v.at("genus").get<Genus>()});
  }
  auto index = [&](const std::string& id) {
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      if (vs[i].id == id) return i;
    throw std::invalid_argument("edge references unknown vertex \"" + id + "\"");
  };
  std::vector<std::array<int, 2>> es;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edges must be pairs of vertex ids");
    es.push_back({index(e.at(0).get<std::string>()), index(e.at(1).get<std::string>())});
  }
  return StableTree(std::move(vs), std::move(es));
}

json stratum_json(const ColoredStratum& s) {
  json j = tree_json(s.tree);
  json coloring = json::object();
  for (const auto& [v, col] : s.coloring.colorOf) coloring[s.tree.vertex(v).id] = col;
  j["coloring"] = coloring;
  j["parts"] = s.coloring.parts;
  return j;
}

ColoredStratum stratum_from(const json& j) {
  StableTree t = tree_from(j);
  if (!j.contains("coloring") || !j.contains("parts"))
    throw std::invalid_argument("stratum JSON needs \"coloring\" and \"parts\"");
  Coloring c;
  c.parts = j.at("parts").get<std::vector<Genus>>();
  for (const auto& [id, col] : j.at("coloring").items()) {
    int v = t.find_vertex(id);
    if (v < 0) throw std::invalid_argument("coloring references unknown vertex \"" + id + "\"");
    c.colorOf[v] = col.get<int>();
  }
  return ColoredStratum::make_unchecked(std::move(t), std::move(c));
}

std::string genus_color_label(const StableTree& t, const Coloring* c, int v) {
  std::string label = "g=" + std::to_string(t.genus_of(v));
  if (c && c->color(v) > 0) label += ",c=" + std::to_string(c->color(v));
  return label;
}

std::string dot_graph(const StableTree& t, const Coloring* c, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < t.vertex_count(); ++v)
    os << "  \"" << t.vertex(v).id << "\" [label=\"" << t.vertex(v).id << ":"
       << genus_color_label(t, c, v) << "\"];\n";
  for (int e = 0; e < t.edge_count(); ++e)
    os << "  \"" << t.vertex(t.edge(e)[0]).id << "\" -- \"" << t.vertex(t.edge(e)[1]).id
       << "\" [label=\"s" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string tree_to_json(const StableTree& t) { return tree_json(t).dump(); }

StableTree tree_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  return tree_from(j);
}

std::string stratum_to_json(const ColoredStratum& s) { return stratum_json(s).dump(); }

ColoredStratum stratum_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  return stratum_from(j);
}

std::string tree_to_dot(const StableTree& t, const Coloring* coloring, const std::string& name) {
  return dot_graph(t, coloring, name);
}

std::string strata_to_json(const std::vector<ColoredStratum>& strata) {
  json out = json::array();
  for (const ColoredStratum& s : strata) out.push_back(stratum_json(s));
  return out.dump();
}

std::string strata_to_dot(const std::vector<ColoredStratum>& strata) {
  std::ostringstream os;
  for (size_t i = 0; i < strata.size(); ++i)
    os << dot_graph(strata[i].tree, &strata[i].coloring, "stratum" + std::to_string(i));
  return os.str();
}

std::string ideal_to_json(const SquareFreeIdeal& ideal) {
  return json{{"dimX", ideal.dimX}, {"gens", ideal.gens}, {"vars", ideal.vars}}.dump();
}

LoadedIdeal ideal_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("vars") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs \"vars\" and \"gens\"");
  LoadedIdeal out;
  out.vars = j.at("vars").get<std::vector<int>>();
  out.gens = j.at("gens").get<std::vector<std::vector<int>>>();
  out.dimX = j.value("dimX", 0);
  return out;
}

std::string local_ring_report_json(const ColoredStratum& s) {
  SquareFreeIdeal ideal = local_ring(s);
  json primes = json::array();
  json dims = json::array();
  for (const MinimalPrime& p : minimal_primes_at(s)) {
    primes.push_back(p.vars);
    dims.push_back(p.componentDim);
  }
  json j{{"componentDims", dims},
         {"dimX", ideal.dimX},
         {"gens", ideal.gens},
         {"minimalPrimes", primes},
         {"reduced", is_radical_squarefree(ideal.gens)},
         {"vars", ideal.vars}};
  return j.dump();
}

std::string poset_to_json(const StrataPoset& p) {
  json nodes = json::array();
  for (size_t i = 0; i < p.strata.size(); ++i) {
    json n = stratum_json(p.strata[i]);
    n["component"] = static_cast<bool>(p.component[i]);
    n["inStrataY"] = static_cast<bool>(p.inStrataY[i]);
    nodes.push_back(std::move(n));
  }
  json covers = json::array();
  for (const auto& [a, b] : p.covers) covers.push_back(json::array({a, b}));
  json reach = json::array();
  for (const auto& row : p.reach) reach.push_back(row);
  return json{{"covers", covers}, {"nodes", nodes}, {"reach", reach}}.dump();
}

std::string poset_to_dot(const StrataPoset& p) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=BT;\n";
  for (size_t i = 0; i < p.strata.size(); ++i) {
    os << "  n" << i << " [label=\"#" << i << " |E|=" << p.strata[i].tree.edge_count() << "\"";
    if (p.component[i]) os << ", shape=doublecircle";
    if (!p.inStrataY[i]) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string series_to_json(const SSeries& s, const StableTree& t) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) {
    terms.push_back(json{{"coef", c.text(&t)}, {"degree", m.degree()}, {"monomial", m.exp}});
  }
  json j{{"cap", s.cap() >= kExactOrder ? json() : json(s.cap())}, {"terms", terms}};
  return j.dump();
}

std::string refinement_to_text(const RefinementReport& r, const StableTree& t) {
  std::ostringstream os;
  os << "vertices: " << t.vertex(r.vertex).id << " <- " << t.vertex(r.omegaVertex).id
     << "  distance r = " << r.distance << "\n";
  os << "geodesic monomial:";
  for (int e : r.geodesicEdges) os << " s[" << e << "]";
  os << "\n";
  for (const RefinementOrder& ord : r.orders) {
    os << "order r' = " << ord.rPrime << ": ";
    if (ord.belowDistance) {
      os << (ord.zeroOk ? "zero (as required below distance)" : "NONZERO below distance");
      os << "\n";
      continue;
    }
    os << (ord.ok() ? "ok" : "MISMATCH") << "\n";
    os << "  leading  = " << ord.pathSum.text(&t) << "\n";
    os << "  remainder = " << ord.remainder.text(&t) << "\n";
    os << "  remainder divisible by geodesic: " << (ord.remainderDivisible ? "yes" : "NO")
       << ", remainder degree >= r'+1: " << (ord.lowOrderClean ? "yes" : "NO") << "\n";
  }
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string refinement_to_json(const RefinementReport& r, const StableTree& t) {
  json orders = json::array();
  for (const RefinementOrder& ord : r.orders) {
    json o{{"belowDistance", ord.belowDistance},
           {"ok", ord.ok()},
           {"rPrime", ord.rPrime}};
    if (!ord.belowDistance) {
      o["leading"] = ord.pathSum.text(&t);
      o["leadingMatches"] = ord.leadingMatches;
      o["remainder"] = ord.remainder.text(&t);
      o["remainderDivisible"] = ord.remainderDivisible;
      o["remainderDegreeOk"] = ord.lowOrderClean;
    }
    orders.push_back(std::move(o));
  }
  json j{{"distance", r.distance},
         {"geodesicEdges", r.geodesicEdges},
         {"omegaVertex", t.vertex(r.omegaVertex).id},
         {"orders", orders},
         {"pass", r.pass},
         {"rMax", r.rMax},
         {"vertex", t.vertex(r.vertex).id}};
  return j.dump();
}

namespace {

json tuple_row(Genus g, const PartTuple& t) {
  Genus d = codim(t);
  return json{{"classification", to_string(classify(t))},
              {"codim", d},
              {"dimBound", 3 * g - 3},
              {"g", g},
              {"parts", t.parts},
              {"tautBound", 2 * g - 3}};
}

}  // namespace

std::string tuples_table_tsv(Genus gMax) {
  std::ostringstream os;
  os << "g\tparts\td\t2g-3\t3g-3\tclassification\n";
  for (Genus g = 2; g <= gMax; ++g) {
    for (const PartTuple& t : enumerate_nonvanishing(g)) {
      os << g << "\t";
      for (size_t i = 0; i < t.parts.size(); ++i) os << (i ? "," : "") << t.parts[i];
      os << "\t" << codim(t) << "\t" << (2 * g - 3) << "\t" << (3 * g - 3) << "\t"
         << to_string(classify(t)) << "\n";
    }
  }
  return os.str();
}

std::string tuples_table_json(Genus gMax) {
  json rows = json::array();
  for (Genus g = 2; g <= gMax; ++g)
    for (const PartTuple& t : enumerate_nonvanishing(g)) rows.push_back(tuple_row(g, t));
  return rows.dump();
}

}  // namespace torfib
