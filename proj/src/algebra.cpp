#include "ckstar/algebra.hpp"

#include "ckstar/error.hpp"

#include <algorithm>

namespace ckstar {

namespace {

using Bucket = std::map<CKMono, Coefficient>;

void accumulate(Bucket& bucket, const CKMono& m, const Coefficient& c) {
  auto [it, inserted] = bucket.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) bucket.erase(it);
  } else if (c.is_zero()) {
    bucket.erase(it);
  }
}

// Replaces every complete sibling family with equal coefficients by its
// parent, provided the whole bucket can move up one level.
bool coarsen_once(const Graph& graph, Bucket& bucket) {
  if (bucket.empty()) return false;
  Bucket parents;
  for (const auto& [m, c] : bucket) {
    if (m.alpha.empty() || m.beta.empty()) return false;
    const EdgeId f = m.alpha.edges().back();
    if (m.beta.edges().back() != f) return false;
    CKMono parent{m.alpha.take(graph, m.alpha.size() - 1), m.beta.take(graph, m.beta.size() - 1)};
    if (parents.count(parent)) continue;
    for (const auto& sibling : children(graph, parent)) {
      auto it = bucket.find(sibling);
      if (it == bucket.end() || !(it->second == c)) return false;
    }
    parents.emplace(std::move(parent), c);
  }
  bucket = std::move(parents);
  return true;
}

std::map<std::int64_t, Bucket> by_degree(const AlgElement& a) {
  std::map<std::int64_t, Bucket> out;
  for (const auto& [m, c] : a.terms()) {
    if (!c.is_zero()) out[m.degree()].emplace(m, c);
  }
  return out;
}

Bucket refine_bucket(const Graph& graph, const Bucket& raw, std::size_t level) {
  Bucket refined;
  for (const auto& [m, c] : raw) {
    for (const auto& piece : refine_mono(graph, m, std::max(level, m.level()))) accumulate(refined, piece, c);
  }
  return refined;
}

}  // namespace

void AlgElement::add_term(const CKMono& m, const Coefficient& c) { accumulate(terms_, m, c); }

AlgElement identity(const Graph& graph) {
  AlgElement one;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) one.add_term(CKMono::vertex(v), Coefficient(1L));
  return one;
}

AlgElement normalize(const Graph& graph, const AlgElement& a) {
  AlgElement out;
  for (auto& [degree, raw] : by_degree(a)) {
    std::size_t level = 0;
    for (const auto& [m, c] : raw) level = std::max(level, m.level());
    Bucket bucket = refine_bucket(graph, raw, level);
    while (coarsen_once(graph, bucket)) {
    }
    for (const auto& [m, c] : bucket) out.add_term(m, c);
  }
  return out;
}

AlgElement refine_to_level(const Graph& graph, const AlgElement& a, std::size_t level) {
  AlgElement out;
  for (const auto& [m, c] : normalize(graph, a).terms()) {
    if (m.level() >= level) {
      out.add_term(m, c);
      continue;
    }
    for (const auto& piece : refine_mono(graph, m, level)) out.add_term(piece, c);
  }
  return out;
}

AlgElement add(const Graph& graph, const AlgElement& a, const AlgElement& b) {
  AlgElement sum = a;
  for (const auto& [m, c] : b.terms()) sum.add_term(m, c);
  return normalize(graph, sum);
}

AlgElement sub(const Graph& graph, const AlgElement& a, const AlgElement& b) {
  AlgElement diff = a;
  for (const auto& [m, c] : b.terms()) diff.add_term(m, -c);
  return normalize(graph, diff);
}

AlgElement scale(const Graph& graph, const AlgElement& a, const Coefficient& c) {
  AlgElement out;
  for (const auto& [m, coeff] : a.terms()) out.add_term(m, coeff * c);
  return normalize(graph, out);
}

AlgElement mul(const Graph& graph, const AlgElement& a, const AlgElement& b) {
  AlgElement out;
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      if (auto m = mul_mono(graph, m1, m2)) out.add_term(*m, c1 * c2);
    }
  }
  return normalize(graph, out);
}

AlgElement adjoint(const Graph& graph, const AlgElement& a) {
  AlgElement out;
  for (const auto& [m, c] : a.terms()) out.add_term(m.adjoint(), c.conj());
  return normalize(graph, out);
}

bool equal(const Graph& graph, const AlgElement& a, const AlgElement& b) { return sub(graph, a, b).empty(); }

AlgElement phi_m(const Graph& graph, const AlgElement& a, std::int64_t m) {
  AlgElement out;
  for (const auto& [mono, c] : normalize(graph, a).terms()) {
    if (mono.degree() == m) out.add_term(mono, c);
  }
  return out;
}

std::vector<std::int64_t> degrees(const Graph& graph, const AlgElement& a) {
  std::vector<std::int64_t> out;
  for (const auto& [m, c] : normalize(graph, a).terms()) out.push_back(m.degree());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AlgElement gauge(const Graph& graph, const AlgElement& a, int n, long long j) {
  Coefficient::root_of_unity(n, 0);  // rejects unsupported orders even for a = 0
  AlgElement out;
  for (const auto& [m, c] : normalize(graph, a).terms()) {
    out.add_term(m, c * Coefficient::root_of_unity(n, j * m.degree()));
  }
  return out;
}

Coefficient eval(const Graph& graph, const AlgElement& a, const GroupoidPoint& g) {
  Coefficient value;
  for (const auto& [m, c] : a.terms()) {
    if (point_in_Z(graph, g, m.alpha, m.beta)) value += c;
  }
  return value;
}

}  // namespace ckstar
