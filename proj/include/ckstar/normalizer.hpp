#pragma once

#include "ckstar/algebra.hpp"

namespace ckstar {

/// Normal form has unimodular coefficients and both its initial projections
/// R_beta and its final projections R_alpha are pairwise orthogonal.
bool is_normalizing_pi(const Graph& graph, const AlgElement& a);

struct RestrictedNorm {
  /// max |c|^2 over the terms.
  Rational squared;
  /// max |c| when it is rational.
  std::optional<Rational> value;
};

/// Norm of an orthogonal sum of monomials; nullopt when the normal form is
/// not an orthogonal sum.
std::optional<RestrictedNorm> restricted_norm(const Graph& graph, const AlgElement& a);

/// The last d edges of pi differ from the first d edges of w, d = 1..k.
bool path_condition(const FinPath& pi, const FinPath& w, std::size_t k);

/// q (S_gamma M) p = 0 = q (M S_gamma) p for every path 1 <= |gamma| <= k and
/// every S_lambda S_mu^* with |lambda| = |mu| <= k. Brute force.
bool separates(const OrderedGraph& og, const CKMono& p, const CKMono& q, std::size_t k);

struct SeparatingProjections {
  FinPath pi;
  FinPath w;
  CKMono p;  // R_{beta pi w}
  CKMono q;  // R_{alpha pi w} = e p e^*
  /// k actually used in the search; at least the requested one.
  std::size_t k_used = 0;
};

/// First (pi, w) in lexicographic order with |pi| = 2k, |w| = k,
/// r(pi) = s(alpha), r(w) = s(pi) and the path condition. If none exists
/// the search retries with larger k. Throws Error(precondition) unless
/// |alpha| = |beta|, Error(search_failure) if no pair is found or the
/// separation postcondition fails.
SeparatingProjections separating_projections(const OrderedGraph& og, const CKMono& e, std::size_t k);

struct AfPartCheck {
  SeparatingProjections first;
  SeparatingProjections second;
  CKMono p;
  CKMono q;
  /// q a p = q Phi_0(a) p.
  bool holds = false;
};

/// Two chained searches: first for e, then for f = (e p_1)^*. The final
/// projections satisfy q = e p e^*.
AfPartCheck check_proj_afpart(const OrderedGraph& og, const AlgElement& a, const CKMono& e, std::size_t k);

}  // namespace ckstar
