#include "ckstar/monomial.hpp"

#include "ckstar/error.hpp"

namespace ckstar {

CKMono CKMono::make(FinPath alpha, FinPath beta) {
  if (alpha.source() != beta.source()) {
    throw Error(ErrorCode::invalid_path, "monomial paths must share their source vertex");
  }
  return {std::move(alpha), std::move(beta)};
}

CKMono CKMono::make(const Graph& graph, const EdgeWord& alpha, const EdgeWord& beta, VertexId anchor) {
  return make(FinPath::from_word(graph, alpha, anchor), FinPath::from_word(graph, beta, anchor));
}

CKMono CKMono::edge(const Graph& graph, EdgeId e) {
  return {FinPath::from_word(graph, {e}), FinPath::empty_at(graph.source(e))};
}

std::vector<CKMono> children(const Graph& graph, const CKMono& m) {
  std::vector<CKMono> out;
  for (EdgeId e : graph.edges_into(m.anchor())) {
    FinPath step = FinPath::from_word(graph, {e});
    out.push_back({concat(graph, m.alpha, step), concat(graph, m.beta, step)});
  }
  return out;
}

std::vector<CKMono> refine_mono(const Graph& graph, const CKMono& m, std::size_t level) {
  std::vector<CKMono> current{m};
  while (!current.empty() && current.front().level() < level) {
    std::vector<CKMono> next;
    for (const auto& c : current) {
      for (auto& child : children(graph, c)) next.push_back(std::move(child));
    }
    current = std::move(next);
  }
  return current;
}

std::optional<CKMono> mul_mono(const Graph& graph, const CKMono& m1, const CKMono& m2) {
  // S_{a1} S_{b1}^* S_{a2} S_{b2}^*: only the middle S_{b1}^* S_{a2} matters.
  if (m2.alpha.starts_with(m1.beta, graph)) {
    FinPath eps = m2.alpha.drop(m1.beta.size());
    return CKMono{concat(graph, m1.alpha, eps), m2.beta};
  }
  if (m1.beta.starts_with(m2.alpha, graph)) {
    FinPath eps = m1.beta.drop(m2.alpha.size());
    return CKMono{m1.alpha, concat(graph, m2.beta, eps)};
  }
  return std::nullopt;
}

bool cyl_contains(const Graph& graph, const CKMono& outer, const CKMono& inner) {
  if (inner.degree() != outer.degree() || inner.level() < outer.level()) return false;
  if (!inner.alpha.starts_with(outer.alpha, graph) || !inner.beta.starts_with(outer.beta, graph)) return false;
  return inner.alpha.drop(outer.alpha.size()) == inner.beta.drop(outer.beta.size());
}

}  // namespace ckstar
