#pragma once

#include "ckstar/cocycle.hpp"

#include <random>

namespace ckstar {

/// Seeded generators for property tests and the sampled CLI checks.
class Sampler {
 public:
  Sampler(const OrderedGraph& og, std::uint64_t seed) : og_(og), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  /// Path of length n with source v, built backwards along edges out of v.
  /// Shorter when a vertex has no outgoing edge.
  FinPath path_to_source(VertexId v, std::size_t n);
  /// Path of length n with range v, built along edges into v.
  FinPath path_from_range(VertexId v, std::size_t n);

  /// prefix of length <= max_prefix in front of a rotated simple loop,
  /// sometimes repeated or followed by a second loop at the same vertex.
  EvPath ev_path(std::size_t max_prefix = 3);
  /// Purely periodic point.
  EvPath periodic_path();

  /// (alpha z, |alpha| - |beta|, beta z), or a loop point (x, j p, x).
  GroupoidPoint point(std::size_t max_len = 3);
  /// (g1, g2) with g1.y = g2.x.
  std::pair<GroupoidPoint, GroupoidPoint> composable_pair(std::size_t max_len = 3);

  CKMono mono(std::size_t max_len);
  CKMono mono_degree(std::size_t max_len, std::int64_t min_degree, std::int64_t max_degree);
  /// Small Gaussian rational, nonzero.
  Coefficient coefficient(bool gaussian = true);
  AlgElement element(std::size_t max_terms, std::size_t max_len, bool gaussian = true);
  /// Sum of R_alpha with random coefficients.
  AlgElement diagonal(std::size_t max_terms, std::size_t max_len);
  /// Sum of distinct atoms R_alpha at one level, a projection.
  AlgElement diagonal_projection(std::size_t level);
  /// Orthogonal sum of unimodular multiples of monomials.
  AlgElement normalizer(std::size_t max_terms, std::size_t level, std::size_t max_degree);

  LocallyConstantFn function(std::size_t depth, long max_abs = 5);

 private:
  const OrderedGraph& og_;
  std::mt19937_64 rng_;
};

}  // namespace ckstar
