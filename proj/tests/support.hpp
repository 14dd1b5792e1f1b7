#pragma once

#include "oracles.hpp"

#include "ckstar/json_io.hpp"

#include <string>

namespace support {

using namespace ckstar;

inline std::string data_file(const std::string& name) { return std::string(CKSTAR_TEST_DATA) + "/" + name; }

inline OrderedGraph load(const std::string& name) { return graph_from_json(read_json_file(data_file(name))); }

inline OrderedGraph parse_graph(const std::string& text) { return graph_from_json(Json::parse(text)); }

inline const OrderedGraph& o2() {
  static const OrderedGraph g = load("o2.json");
  return g;
}
inline const OrderedGraph& c2() {
  static const OrderedGraph g = load("c2.json");
  return g;
}
/// u with loop e, plus f: w -> u and g: u -> w.
inline const OrderedGraph& entrance() {
  static const OrderedGraph g = load("entrance.json");
  return g;
}

inline std::string show(const Graph& g, const CKMono& m) { return mono_to_json(g, m).dump(); }
inline std::string show(const Graph& g, const GroupoidPoint& p) { return point_to_json(g, p).dump(); }

inline FinPath path(const Graph& g, std::initializer_list<std::string_view> names) {
  return FinPath::from_word(g, g.word(names));
}

inline EvPath ev(const Graph& g, std::initializer_list<std::string_view> prefix,
                 std::initializer_list<std::string_view> cycle) {
  return EvPath::make(g, g.word(prefix), g.word(cycle));
}

/// S_alpha S_beta^* from edge names; the anchor defaults to the sources.
inline CKMono mono(const Graph& g, std::initializer_list<std::string_view> alpha,
                   std::initializer_list<std::string_view> beta, std::string_view anchor = "") {
  const EdgeWord a = g.word(alpha), b = g.word(beta);
  VertexId v = 0;
  if (!anchor.empty()) {
    v = g.vertex(anchor);
  } else if (!a.empty()) {
    v = g.source(a.back());
  } else {
    v = g.source(b.back());
  }
  return CKMono::make(g, a, b, v);
}

/// Monomials S_alpha S_beta^* with |alpha|, |beta| <= n.
inline std::vector<CKMono> all_monos(const Graph& g, std::size_t n) {
  std::vector<std::vector<FinPath>> by_source(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) by_source[v].push_back(FinPath::empty_at(v));
  for (std::size_t len = 1; len <= n; ++len) {
    for (auto& w : oracle::all_words(g, len)) {
      const VertexId s = g.source(w.back());
      by_source[s].push_back(FinPath::from_word(g, std::move(w)));
    }
  }
  std::vector<CKMono> out;
  for (const auto& paths : by_source) {
    for (const auto& a : paths) {
      for (const auto& b : paths) out.push_back(CKMono::make(a, b));
    }
  }
  return out;
}

}  // namespace support
