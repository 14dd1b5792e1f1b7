#pragma once

#include "ckstar/algebra.hpp"

#include <string_view>

namespace ckstar {

/// Atoms R_alpha, alpha in F_k, in lexicographic order.
std::vector<EdgeWord> nest_atoms(const OrderedGraph& og, std::size_t level);

/// Sum of the first `cut` atoms of level k >= 1. Throws Error(out_of_range)
/// for k = 0 or cut > |F_k|.
AlgElement nest_projection(const OrderedGraph& og, std::size_t level, std::size_t cut);

enum class NestClause {
  equal_length,        // |alpha| = |beta|, alpha <= beta
  alpha_head_precedes, // alpha = delta gamma, |delta| = |beta|, delta < beta
  alpha_min_extension, // alpha = beta gamma, gamma s-minimal
  beta_head_follows,   // beta = delta gamma, |delta| = |alpha|, alpha < delta
  beta_max_extension,  // beta = alpha gamma, gamma s-maximal
};

std::string_view to_string(NestClause clause);

/// The first of the five path conditions that holds, or nullopt when the
/// monomial is not in Alg N.
std::optional<NestClause> in_alg_n(const OrderedGraph& og, const CKMono& m);

/// |alpha| + |beta| + 2 max(longest simple loop, 1).
std::size_t default_oracle_level(const OrderedGraph& og, const CKMono& m);

struct NestViolation {
  std::size_t level = 0;
  /// P = first `cut` atoms at `level`; P^perp m P != 0.
  std::size_t cut = 0;
};

/// Checks P^perp m P = 0 for every nest projection of levels 1..K. Uses the
/// atom decomposition: P^perp m P is the sum of R_tau m R_sigma over sigma in
/// P and tau not in P, and those terms have disjoint supports. Returns the
/// first violation by level then cut.
std::optional<NestViolation> in_alg_n_oracle(const OrderedGraph& og, const CKMono& m, std::size_t max_level);
/// Same test, normalising (1 - P) m P for every cut. Slow; for cross-checks.
std::optional<NestViolation> in_alg_n_oracle_literal(const OrderedGraph& og, const CKMono& m,
                                                     std::size_t max_level);

enum class SpectrumClause {
  precedes,  // x < y
  diagonal,  // x = y, k = 0
  min_loop,  // x = y, k > 0, tail gamma^inf with gamma s-minimal, |gamma| = k
  max_loop,  // x = y, k < 0, tail gamma^inf with gamma s-maximal, |gamma| = -k
};

std::string_view to_string(SpectrumClause clause);

std::optional<SpectrumClause> point_in_spectrum_alg_n(const OrderedGraph& og, const GroupoidPoint& g);
/// In the spectrum with x < y strictly.
bool in_radical_spectrum(const OrderedGraph& og, const GroupoidPoint& g);
/// Every point of Z(alpha, beta) has x < y.
bool cylinder_in_radical(const OrderedGraph& og, const CKMono& m);

/// ab - ba.
AlgElement commutator(const Graph& graph, const AlgElement& a, const AlgElement& b);

}  // namespace ckstar
