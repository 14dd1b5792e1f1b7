#include "ckstar/json_io.hpp"

#include "ckstar/error.hpp"

#include <fstream>

namespace ckstar {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

Rational rational_field(const Json& doc, const char* key, const char* fallback) {
  if (!doc.contains(key)) return parse_rational(fallback);
  const Json& v = doc.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return make_rational(v.get<long>());
  throw Error(ErrorCode::parse_error, std::string("field '") + key + "' must be a \"p/q\" string");
}

}  // namespace

OrderedGraph graph_from_json(const Json& doc) {
  return guarded("graph", [&] {
    std::vector<std::string> vertices = field(doc, "vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : field(doc, "edges")) {
      edges.push_back({field(e, "id").get<std::string>(), field(e, "range").get<std::string>(),
                       field(e, "source").get<std::string>()});
    }
    Graph graph(std::move(vertices), std::move(edges));
    if (!doc.contains("order")) return OrderedGraph(std::move(graph));
    std::vector<EdgeId> order;
    for (const auto& id : doc.at("order")) {
      auto e = graph.find_edge(id.get<std::string>());
      if (!e) throw Error(ErrorCode::invalid_graph, "order lists unknown edge '" + id.get<std::string>() + "'");
      order.push_back(*e);
    }
    return OrderedGraph(std::move(graph), order);
  });
}

Json graph_to_json(const OrderedGraph& og) {
  const Graph& g = og.graph();
  Json doc;
  doc["vertices"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    doc["edges"].push_back(
        {{"id", g.edge_name(e)}, {"range", g.vertex_name(g.range(e))}, {"source", g.vertex_name(g.source(e))}});
  }
  doc["order"] = Json::array();
  for (EdgeId e : og.edges()) doc["order"].push_back(g.edge_name(e));
  return doc;
}

EdgeWord word_from_json(const Graph& graph, const Json& ids) {
  return guarded("path", [&] {
    if (!ids.is_array()) throw Error(ErrorCode::parse_error, "path must be an array of edge ids");
    EdgeWord w;
    for (const auto& id : ids) w.push_back(graph.edge(id.get<std::string>()));
    return w;
  });
}

Json word_to_json(const Graph& graph, const EdgeWord& word) {
  Json out = Json::array();
  for (EdgeId e : word) out.push_back(graph.edge_name(e));
  return out;
}

CKMono mono_from_json(const Graph& graph, const Json& doc) {
  return guarded("monomial", [&] {
    const EdgeWord alpha = word_from_json(graph, doc.value("alpha", Json::array()));
    const EdgeWord beta = word_from_json(graph, doc.value("beta", Json::array()));
    VertexId anchor = 0;
    if (doc.contains("anchor")) {
      anchor = graph.vertex(doc.at("anchor").get<std::string>());
    } else if (!alpha.empty()) {
      anchor = graph.source(alpha.back());
    } else if (!beta.empty()) {
      anchor = graph.source(beta.back());
    } else {
      throw Error(ErrorCode::parse_error, "monomial with two empty paths needs an anchor");
    }
    return CKMono::make(graph, alpha, beta, anchor);
  });
}

Json mono_to_json(const Graph& graph, const CKMono& m) {
  return {{"alpha", word_to_json(graph, m.alpha.edges())},
          {"beta", word_to_json(graph, m.beta.edges())},
          {"anchor", graph.vertex_name(m.anchor())}};
}

Json coefficient_to_json(const Coefficient& c) {
  return {{"re", format_rational(c.re())}, {"im", format_rational(c.im())}};
}

AlgElement element_from_json(const Graph& graph, const Json& doc) {
  return guarded("element", [&] {
    if (!doc.is_array()) throw Error(ErrorCode::parse_error, "element must be an array of terms");
    AlgElement a;
    for (const auto& term : doc) {
      a.add_term(mono_from_json(graph, term),
                 Coefficient(rational_field(term, "re", "1"), rational_field(term, "im", "0")));
    }
    return a;
  });
}

Json element_to_json(const Graph& graph, const AlgElement& a) {
  Json out = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json term = mono_to_json(graph, m);
    term["re"] = format_rational(c.re());
    term["im"] = format_rational(c.im());
    out.push_back(std::move(term));
  }
  return out;
}

SpectrumSet spectrum_from_json(const Graph& graph, const Json& doc) {
  return guarded("spectrum", [&] {
    if (!doc.is_array()) throw Error(ErrorCode::parse_error, "spectrum must be an array of cylinders");
    std::vector<Cylinder> cylinders;
    for (const auto& c : doc) cylinders.push_back(mono_from_json(graph, c));
    return SpectrumSet(graph, cylinders);
  });
}

Json spectrum_to_json(const Graph& graph, const SpectrumSet& s) {
  Json out = Json::array();
  for (const auto& c : s.cylinders()) out.push_back(mono_to_json(graph, c));
  return out;
}

EvPath evpath_from_json(const Graph& graph, const Json& doc) {
  return guarded("infinite path", [&] {
    return EvPath::make(graph, word_from_json(graph, doc.value("prefix", Json::array())),
                        word_from_json(graph, field(doc, "cycle")));
  });
}

Json evpath_to_json(const Graph& graph, const EvPath& x) {
  return {{"prefix", word_to_json(graph, x.prefix())}, {"cycle", word_to_json(graph, x.cycle())}};
}

GroupoidPoint point_from_json(const Graph& graph, const Json& doc) {
  return guarded("groupoid point", [&] {
    return GroupoidPoint::make(evpath_from_json(graph, field(doc, "x")), field(doc, "k").get<std::int64_t>(),
                               evpath_from_json(graph, field(doc, "y")));
  });
}

Json point_to_json(const Graph& graph, const GroupoidPoint& g) {
  return {{"x", evpath_to_json(graph, g.x)}, {"k", g.k}, {"y", evpath_to_json(graph, g.y)}};
}

LocallyConstantFn function_from_json(const Graph& graph, const Json& doc) {
  return guarded("function", [&] {
    const auto depth = field(doc, "depth").get<std::size_t>();
    std::map<EdgeWord, Rational> table;
    for (const auto& row : field(doc, "table")) {
      EdgeWord path = word_from_json(graph, field(row, "path"));
      if (path.size() != depth) throw Error(ErrorCode::parse_error, "table path length differs from depth");
      if (!table.emplace(std::move(path), rational_field(row, "value", "0")).second) {
        throw Error(ErrorCode::parse_error, "duplicate table path");
      }
    }
    return LocallyConstantFn(depth, std::move(table));
  });
}

Json function_to_json(const Graph& graph, const LocallyConstantFn& f) {
  Json rows = Json::array();
  for (const auto& [path, value] : f.table()) {
    rows.push_back({{"path", word_to_json(graph, path)}, {"value", format_rational(value)}});
  }
  return {{"depth", f.depth()}, {"table", rows}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, "'" + path + "': " + e.what());
  }
}

}  // namespace ckstar
