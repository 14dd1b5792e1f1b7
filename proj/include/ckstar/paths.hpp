#pragma once

#include "ckstar/graph.hpp"

#include <compare>
#include <cstdint>

namespace ckstar {

/// Finite path alpha_1 ... alpha_n with r(alpha_{i+1}) = s(alpha_i). The empty
/// path is anchored at a vertex; for nonempty paths the stored vertex is
/// s(alpha_n), so it is always the source.
class FinPath {
 public:
  FinPath() = default;

  static FinPath empty_at(VertexId v) { return FinPath({}, v); }
  /// Throws Error(invalid_path) if the word is empty or not composable.
  static FinPath from_word(const Graph& graph, EdgeWord edges);
  /// The word must be nonempty or `anchor` used as its vertex.
  static FinPath from_word(const Graph& graph, EdgeWord edges, VertexId anchor);

  const EdgeWord& edges() const& { return edges_; }
  EdgeWord edges() && { return std::move(edges_); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  VertexId source() const { return source_; }
  VertexId range(const Graph& graph) const { return edges_.empty() ? source_ : graph.range(edges_.front()); }

  /// First n edges, anchored correctly.
  FinPath take(const Graph& graph, std::size_t n) const;
  /// Drops the first n edges.
  FinPath drop(std::size_t n) const;
  bool starts_with(const FinPath& prefix, const Graph& graph) const;

  friend auto operator<=>(const FinPath&, const FinPath&) = default;
  friend bool operator==(const FinPath&, const FinPath&) = default;

 private:
  FinPath(EdgeWord edges, VertexId source) : edges_(std::move(edges)), source_(source) {}

  EdgeWord edges_;
  VertexId source_ = 0;
};

/// alpha beta; throws Error(composition_mismatch) when s(alpha) != r(beta).
FinPath concat(const Graph& graph, const FinPath& alpha, const FinPath& beta);

/// Eventually periodic infinite path prefix . cycle^infinity, kept canonical:
/// the cycle is primitive and the prefix cannot be absorbed into it.
class EvPath {
 public:
  EvPath() = default;
  /// Validates composability (cycle must be a nonempty loop that feeds the
  /// prefix) and canonicalises. Throws Error(invalid_path).
  static EvPath make(const Graph& graph, EdgeWord prefix, EdgeWord cycle);
  static EvPath periodic(const Graph& graph, EdgeWord cycle) { return make(graph, {}, std::move(cycle)); }

  const EdgeWord& prefix() const& { return prefix_; }
  EdgeWord prefix() && { return std::move(prefix_); }
  const EdgeWord& cycle() const& { return cycle_; }
  EdgeWord cycle() && { return std::move(cycle_); }
  bool purely_periodic() const { return prefix_.empty(); }

  /// 0-based edge access into the infinite sequence.
  EdgeId at(std::size_t i) const {
    return i < prefix_.size() ? prefix_[i] : cycle_[(i - prefix_.size()) % cycle_.size()];
  }
  EdgeWord take(std::size_t n) const;
  /// S^n.
  EvPath drop(std::size_t n) const;
  /// alpha . this (alpha must end where this path begins).
  EvPath prepend(const Graph& graph, const FinPath& alpha) const;

  VertexId range(const Graph& graph) const { return graph.range(at(0)); }

  friend bool operator==(const EvPath&, const EvPath&) = default;
  friend auto operator<=>(const EvPath&, const EvPath&) = default;

 private:
  EvPath(EdgeWord prefix, EdgeWord cycle);
  void canonicalize();

  EdgeWord prefix_;
  EdgeWord cycle_;
};

/// The shift map: drops the first edge.
inline EvPath shift(const EvPath& x) { return x.drop(1); }

/// Lexicographic (left to right) comparison by edge rank. Finite paths must
/// have equal length; throws Error(length_mismatch).
std::strong_ordering lex_compare(const OrderedGraph& og, const FinPath& x, const FinPath& y);
std::strong_ordering lex_compare(const OrderedGraph& og, const EdgeWord& x, const EdgeWord& y);
/// Decided on the first |px| + |py| + lcm(|cx|, |cy|) edges: two eventually
/// periodic sequences that agree that far agree everywhere.
std::strong_ordering lex_compare(const OrderedGraph& og, const EvPath& x, const EvPath& y);

/// alpha <= beta for every beta with |beta| = |alpha| and r(beta) = s(alpha).
bool is_s_minimal(const OrderedGraph& og, const FinPath& alpha);
bool is_s_maximal(const OrderedGraph& og, const FinPath& alpha);

/// Lexicographically first / last path of length n with range v, if any.
std::optional<EdgeWord> lex_min_path(const OrderedGraph& og, VertexId v, std::size_t n);
std::optional<EdgeWord> lex_max_path(const OrderedGraph& og, VertexId v, std::size_t n);

/// x ~_k y: x_{i+k} = y_i for all large i.
bool sim_k(const EvPath& x, std::int64_t k, const EvPath& y);

/// (x, k, y) with x ~_k y.
struct GroupoidPoint {
  EvPath x;
  std::int64_t k = 0;
  EvPath y;

  /// Throws Error(invalid_path) unless x ~_k y.
  static GroupoidPoint make(EvPath x, std::int64_t k, EvPath y);
  static GroupoidPoint unit(EvPath x) { return {x, 0, x}; }

  bool is_unit() const { return k == 0 && x == y; }

  friend bool operator==(const GroupoidPoint&, const GroupoidPoint&) = default;
};

/// Throws Error(non_composable) unless g1.y == g2.x.
GroupoidPoint compose(const GroupoidPoint& g1, const GroupoidPoint& g2);
GroupoidPoint inverse(const GroupoidPoint& g);

/// x in Z(alpha).
bool in_cylinder(const Graph& graph, const EvPath& x, const FinPath& alpha);
/// g in Z(alpha, beta) = {(alpha z, |alpha| - |beta|, beta z)}.
bool point_in_Z(const Graph& graph, const GroupoidPoint& g, const FinPath& alpha, const FinPath& beta);

/// Every path of length n, in lexicographic order of the edge ranks.
std::vector<EdgeWord> paths_of_length(const OrderedGraph& og, std::size_t n);
/// Every path of length n with range v, in lexicographic order.
std::vector<EdgeWord> paths_into(const OrderedGraph& og, VertexId v, std::size_t n);

}  // namespace ckstar
