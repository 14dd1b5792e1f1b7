#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ckstar {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using EdgeWord = std::vector<EdgeId>;

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
};

/// Finite directed graph. Paths compose right to left: a path e1 e2 is
/// valid when r(e2) = s(e1).
class Graph {
 public:
  Graph() = default;
  /// Throws Error(invalid_graph) on duplicate ids or unknown endpoints.
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }

  VertexId range(EdgeId e) const { return range_[e]; }
  VertexId source(EdgeId e) const { return source_[e]; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throws Error(parse_error) for unknown names.
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;
  EdgeWord word(std::initializer_list<std::string_view> names) const;

  /// Edges e with r(e) = v, in declaration order.
  std::span<const EdgeId> edges_into(VertexId v) const { return into_[v]; }
  /// Edges e with s(e) = v, in declaration order.
  std::span<const EdgeId> edges_from(VertexId v) const { return from_[v]; }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> range_;
  std::vector<VertexId> source_;
  std::vector<std::vector<EdgeId>> into_;
  std::vector<std::vector<EdgeId>> from_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// A graph with a total order on its edges. The order is not required to be
/// valid at construction; validate_order reports the interval property.
class OrderedGraph {
 public:
  /// Declaration order.
  explicit OrderedGraph(Graph graph);
  /// `order` must list every edge exactly once; throws Error(invalid_graph).
  OrderedGraph(Graph graph, const std::vector<EdgeId>& order);

  const Graph& graph() const { return graph_; }
  std::uint32_t rank(EdgeId e) const { return rank_[e]; }
  bool precedes(EdgeId a, EdgeId b) const { return rank_[a] < rank_[b]; }
  /// Edges into v sorted by rank.
  std::span<const EdgeId> edges_into(VertexId v) const { return sorted_into_[v]; }
  /// All edges sorted by rank.
  std::span<const EdgeId> edges() const { return sorted_; }

 private:
  void index();

  Graph graph_;
  std::vector<std::uint32_t> rank_;
  std::vector<EdgeId> sorted_;
  std::vector<std::vector<EdgeId>> sorted_into_;
};

struct ValidationReport {
  /// Vertices that are the range of no edge.
  std::vector<VertexId> sourceless;
  /// Vertices with no incident edges at all.
  std::vector<VertexId> isolated;
  /// Vertices whose in-edges do not form an interval of the edge order.
  std::vector<VertexId> order_violations;

  bool valid() const { return sourceless.empty() && order_violations.empty(); }
};

ValidationReport validate(const Graph& graph);
ValidationReport validate_order(const OrderedGraph& og);

/// True iff no directed cycle has all its vertices of in-degree one.
bool every_loop_has_entrance(const Graph& graph);
bool has_loop(const Graph& graph);
bool is_transitive(const Graph& graph);

/// Simple loops as edge words starting at their smallest edge id. Exponential;
/// meant for desk-scale graphs.
std::vector<EdgeWord> simple_loops(const Graph& graph);
/// Length of the longest simple loop, 0 for loop-free graphs.
std::size_t max_simple_loop_length(const Graph& graph);

/// Shortest path p with r(p) = range_vertex and s(p) = source_vertex; an empty
/// word when the vertices coincide.
std::optional<EdgeWord> shortest_path(const Graph& graph, VertexId range_vertex, VertexId source_vertex);

}  // namespace ckstar
