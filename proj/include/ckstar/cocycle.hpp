#pragma once

#include "ckstar/algebra.hpp"

#include <map>

namespace ckstar {

/// f on path space depending only on the first `depth` edges. Depth 0 is a
/// constant stored under the empty word.
class LocallyConstantFn {
 public:
  LocallyConstantFn() = default;
  LocallyConstantFn(std::size_t depth, std::map<EdgeWord, Rational> table)
      : depth_(depth), table_(std::move(table)) {}

  static LocallyConstantFn constant(const Rational& value) { return {0, {{EdgeWord{}, value}}}; }
  /// Depth 1, f(x) = weight(x_1).
  static LocallyConstantFn from_edge_weights(const std::vector<Rational>& weights);

  std::size_t depth() const { return depth_; }
  const std::map<EdgeWord, Rational>& table() const& { return table_; }
  std::map<EdgeWord, Rational> table() && { return std::move(table_); }

  /// Value on any word of length >= depth, read from its first `depth`
  /// edges. Throws Error(precondition) for a missing table entry.
  const Rational& value(const EdgeWord& word, std::size_t offset = 0) const;
  const Rational& value(const EvPath& x) const;

  /// Throws Error(precondition) unless the table covers F_depth exactly.
  void check_total(const OrderedGraph& og) const;

 private:
  std::size_t depth_ = 0;
  std::map<EdgeWord, Rational> table_;
};

/// (x, k, y) with x = prefix_x window ..., y = prefix_y window ..., the
/// continuation past the window left abstract.
struct TailedPair {
  EdgeWord prefix_x;
  EdgeWord prefix_y;
  EdgeWord window;

  std::int64_t k() const {
    return static_cast<std::int64_t>(prefix_x.size()) - static_cast<std::int64_t>(prefix_y.size());
  }
};

/// Smallest n >= max(k, 0) with S^j x = S^{j-k} y for all j >= n (k >= 0).
std::size_t stabilization_index(const GroupoidPoint& g);

/// c_f(g) from the defining series: sum_{j<k} f(S^j x) plus
/// sum_{j>=k} [f(S^j x) - f(S^{j-k} y)], cut at the stabilization index;
/// k < 0 through c(x, k, y) = -c(y, -k, x).
Rational eval_cocycle(const LocallyConstantFn& f, const GroupoidPoint& g);

/// Telescoped form sum_{j<|px|} f(S^j x) - sum_{j<|py|} f(S^j y); needs only
/// the window. Throws Error(window_too_short) when |window| < depth.
Rational eval_cocycle_tailed(const LocallyConstantFn& f, const TailedPair& tp);

/// Prefixes up to the stabilization index and a window of `depth` edges.
TailedPair to_tailed(const GroupoidPoint& g, std::size_t depth);

/// f(x) = c_f(x, 1, Sx) for every sample.
bool reconstructs(const LocallyConstantFn& f, const std::vector<EvPath>& samples);

struct LoopGrowth {
  std::size_t period = 0;
  /// c(x, p, x).
  Rational base;
  /// c(x, kp, x) = k base for k = 1..50.
  bool verified = false;
  /// base != 0, so c is unbounded along the orbit.
  bool unbounded = false;
};

/// x must be purely periodic; `period` defaults to the primitive period and
/// must be a multiple of it. Throws Error(precondition) otherwise.
LoopGrowth loop_growth(const LocallyConstantFn& f, const EvPath& x, std::optional<std::size_t> period = {},
                       std::size_t max_multiple = 50);

/// a(e_i) = 3^{-i}, i = 1..n.
std::vector<Rational> acyclic_weights(std::size_t n);
/// Every weight exceeds the sum of all strictly smaller weights.
bool dominates(const std::vector<Rational>& weights);

struct ObstructionWitness {
  /// Loops after equalisation: common base vertex and length k.
  FinPath alpha;
  FinPath beta;
  std::size_t multiplicity = 0;
  /// N = multiplicity * k.
  std::size_t depth = 0;
  /// alpha^l alpha beta alpha^l beta^inf and alpha^l beta alpha alpha^l beta^inf.
  EvPath x;
  EvPath y;
  /// S^n x = S^n y for n >= span.
  std::size_t span = 0;
};

/// Joins the loops through shortest connecting paths and equalises their
/// lengths with powers. Throws Error(loops_not_equalizable) when no
/// connecting path exists or beta has no edge outside alpha, and
/// Error(precondition) unless both are loops and multiplicity > 1.
ObstructionWitness integer_obstruction_witness(const Graph& graph, const FinPath& alpha, const FinPath& beta,
                                               std::size_t multiplicity);
/// sum over n < span of f(S^n x) - f(S^n y).
Rational obstruction_sum(const LocallyConstantFn& f, const ObstructionWitness& w);
/// Sorted depth-N truncations (S^n x)_N and (S^n y)_N over n < span.
std::pair<std::vector<EdgeWord>, std::vector<EdgeWord>> truncation_multisets(const ObstructionWitness& w);

struct Z10Report {
  bool passed = true;
  /// Indices of samples that are units with c != 0 or non-units with c = 0.
  std::vector<std::size_t> failures;
};

Z10Report is_z1_0_sampled(const LocallyConstantFn& f, const std::vector<GroupoidPoint>& samples);

/// Constant value of c_f on each depth-refined piece of Z(m): the pieces
/// (alpha eps, beta eps) with |eps| = depth.
std::vector<std::pair<CKMono, Rational>> cocycle_pieces(const Graph& graph, const LocallyConstantFn& f,
                                                        const CKMono& m);

/// Part of a on which c_f takes `value`.
AlgElement cocycle_graded_projection(const Graph& graph, const LocallyConstantFn& f, const AlgElement& a,
                                     const Rational& value);
/// Values c_f takes on the support of a, ascending.
std::vector<Rational> cocycle_values(const Graph& graph, const LocallyConstantFn& f, const AlgElement& a);

}  // namespace ckstar
