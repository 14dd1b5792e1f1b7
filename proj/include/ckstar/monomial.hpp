#pragma once

#include "ckstar/paths.hpp"

#include <optional>

namespace ckstar {

/// S_alpha S_beta^* with s(alpha) = s(beta). Also used as the cylinder
/// Z(alpha, beta) of path-groupoid points.
struct CKMono {
  FinPath alpha;
  FinPath beta;

  /// Throws Error(invalid_path) when the sources differ.
  static CKMono make(FinPath alpha, FinPath beta);
  /// From edge words; `anchor` is the common source and must match any
  /// nonempty word.
  static CKMono make(const Graph& graph, const EdgeWord& alpha, const EdgeWord& beta, VertexId anchor);
  /// P_v.
  static CKMono vertex(VertexId v) { return {FinPath::empty_at(v), FinPath::empty_at(v)}; }
  /// S_e.
  static CKMono edge(const Graph& graph, EdgeId e);
  /// R_alpha = S_alpha S_alpha^*.
  static CKMono range_projection(const FinPath& alpha) { return {alpha, alpha}; }

  VertexId anchor() const { return alpha.source(); }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(alpha.size()) - static_cast<std::int64_t>(beta.size());
  }
  /// Length of beta, the refinement level within a degree.
  std::size_t level() const { return beta.size(); }
  bool is_diagonal() const { return alpha == beta; }
  CKMono adjoint() const { return {beta, alpha}; }

  friend auto operator<=>(const CKMono&, const CKMono&) = default;
  friend bool operator==(const CKMono&, const CKMono&) = default;
};

/// CK refinement: S_alpha S_beta^* = sum over r(e) = s(alpha) of
/// S_{alpha e} S_{beta e}^*. Children come in edge-declaration order.
std::vector<CKMono> children(const Graph& graph, const CKMono& m);
/// All refinements of m with level exactly `level` (m itself if already there).
std::vector<CKMono> refine_mono(const Graph& graph, const CKMono& m, std::size_t level);

/// The product of two monomials is a monomial or zero.
std::optional<CKMono> mul_mono(const Graph& graph, const CKMono& m1, const CKMono& m2);

/// Z(inner) is a subset of Z(outer): inner = (outer.alpha eps, outer.beta eps).
bool cyl_contains(const Graph& graph, const CKMono& outer, const CKMono& inner);

}  // namespace ckstar
