#include "ckstar/normalizer.hpp"

#include "ckstar/error.hpp"

#include <algorithm>

namespace ckstar {

namespace {

bool comparable(const Graph& graph, const FinPath& x, const FinPath& y) {
  return x.starts_with(y, graph) || y.starts_with(x, graph);
}

bool orthogonal_sum(const Graph& graph, const AlgElement& normal) {
  std::vector<const CKMono*> terms;
  for (const auto& [m, c] : normal.terms()) terms.push_back(&m);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (comparable(graph, terms[i]->alpha, terms[j]->alpha)) return false;
      if (comparable(graph, terms[i]->beta, terms[j]->beta)) return false;
    }
  }
  return true;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  mpz_class num = sqrt(x.get_num());
  mpz_class den = sqrt(x.get_den());
  return Rational(num, den);
}

std::optional<CKMono> chain(const Graph& graph, std::initializer_list<CKMono> factors) {
  auto it = factors.begin();
  std::optional<CKMono> acc = *it;
  for (++it; it != factors.end() && acc; ++it) acc = mul_mono(graph, *acc, *it);
  return acc;
}

std::vector<CKMono> diagonal_degree_monomials(const OrderedGraph& og, std::size_t k) {
  const Graph& graph = og.graph();
  std::vector<CKMono> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) out.push_back(CKMono::vertex(v));
  for (std::size_t len = 1; len <= k; ++len) {
    const auto paths = paths_of_length(og, len);
    for (const auto& lambda : paths) {
      for (const auto& mu : paths) {
        if (graph.source(lambda.back()) != graph.source(mu.back())) continue;
        out.push_back({FinPath::from_word(graph, lambda), FinPath::from_word(graph, mu)});
      }
    }
  }
  return out;
}

}  // namespace

bool is_normalizing_pi(const Graph& graph, const AlgElement& a) {
  const AlgElement n = normalize(graph, a);
  for (const auto& [m, c] : n.terms()) {
    if (!c.is_unimodular()) return false;
  }
  return orthogonal_sum(graph, n);
}

std::optional<RestrictedNorm> restricted_norm(const Graph& graph, const AlgElement& a) {
  const AlgElement n = normalize(graph, a);
  if (!orthogonal_sum(graph, n)) return std::nullopt;
  Rational best(0);
  for (const auto& [m, c] : n.terms()) best = std::max(best, c.norm_squared());
  return RestrictedNorm{best, rational_sqrt(best)};
}

bool path_condition(const FinPath& pi, const FinPath& w, std::size_t k) {
  if (pi.size() < k || w.size() < k) return false;
  for (std::size_t d = 1; d <= k; ++d) {
    if (std::equal(pi.edges().end() - static_cast<std::ptrdiff_t>(d), pi.edges().end(), w.edges().begin())) {
      return false;
    }
  }
  return true;
}

bool separates(const OrderedGraph& og, const CKMono& p, const CKMono& q, std::size_t k) {
  const Graph& graph = og.graph();
  const auto middles = diagonal_degree_monomials(og, k);
  for (std::size_t d = 1; d <= k; ++d) {
    for (const auto& gamma : paths_of_length(og, d)) {
      CKMono g{FinPath::from_word(graph, gamma), FinPath::empty_at(graph.source(gamma.back()))};
      for (const auto& m : middles) {
        if (chain(graph, {q, g, m, p}) || chain(graph, {q, m, g, p})) return false;
      }
    }
  }
  return true;
}

SeparatingProjections separating_projections(const OrderedGraph& og, const CKMono& e, std::size_t k) {
  const Graph& graph = og.graph();
  if (e.alpha.size() != e.beta.size()) {
    throw Error(ErrorCode::precondition, "separating projections need |alpha| = |beta|");
  }
  if (k == 0) throw Error(ErrorCode::precondition, "k must be positive");
  const std::size_t limit = k + graph.vertex_count() + max_simple_loop_length(graph);
  for (std::size_t kk = k; kk <= limit; ++kk) {
    for (const auto& pi_word : paths_into(og, e.anchor(), 2 * kk)) {
      const FinPath pi = FinPath::from_word(graph, pi_word);
      for (const auto& w_word : paths_into(og, pi.source(), kk)) {
        const FinPath w = FinPath::from_word(graph, w_word);
        if (!path_condition(pi, w, kk)) continue;
        const FinPath tail = concat(graph, pi, w);
        SeparatingProjections out{pi, w, CKMono::range_projection(concat(graph, e.beta, tail)),
                                  CKMono::range_projection(concat(graph, e.alpha, tail)), kk};
        if (chain(graph, {e, out.p, e.adjoint()}) != out.q || !separates(og, out.p, out.q, kk)) {
          throw Error(ErrorCode::search_failure, "candidate satisfies the path condition but does not separate");
        }
        return out;
      }
    }
  }
  throw Error(ErrorCode::search_failure,
              "no admissible (pi, w) up to k = " + std::to_string(limit) + "; is there a loop without entrance?");
}

AfPartCheck check_proj_afpart(const OrderedGraph& og, const AlgElement& a, const CKMono& e, std::size_t k) {
  const Graph& graph = og.graph();
  AfPartCheck out;
  out.first = separating_projections(og, e, k);
  const CKMono f{out.first.p.alpha, out.first.q.alpha};
  out.second = separating_projections(og, f, k);
  out.p = out.second.q;
  out.q = out.second.p;
  const AlgElement p(out.p);
  const AlgElement q(out.q);
  out.holds = mul(graph, q, mul(graph, a, p)) == mul(graph, q, mul(graph, phi_m(graph, a, 0), p));
  return out;
}

}  // namespace ckstar
