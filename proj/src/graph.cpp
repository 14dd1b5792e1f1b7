#include "ckstar/graph.hpp"

#include "ckstar/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ckstar {

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges)
    : vertex_names_(std::move(vertices)) {
  for (VertexId v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_index_.emplace(vertex_names_[v], v).second) {
      throw Error(ErrorCode::invalid_graph, "duplicate vertex id '" + vertex_names_[v] + "'");
    }
  }
  into_.resize(vertex_names_.size());
  from_.resize(vertex_names_.size());
  for (auto& spec : edges) {
    const auto r = find_vertex(spec.range);
    const auto s = find_vertex(spec.source);
    if (!r || !s) {
      throw Error(ErrorCode::invalid_graph, "edge '" + spec.id + "' references an unknown vertex");
    }
    const auto id = static_cast<EdgeId>(edge_names_.size());
    if (!edge_index_.emplace(spec.id, id).second) {
      throw Error(ErrorCode::invalid_graph, "duplicate edge id '" + spec.id + "'");
    }
    edge_names_.push_back(std::move(spec.id));
    range_.push_back(*r);
    source_.push_back(*s);
    into_[*r].push_back(id);
    from_[*s].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorCode::parse_error, "unknown vertex '" + std::string(name) + "'");
}

EdgeId Graph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorCode::parse_error, "unknown edge '" + std::string(name) + "'");
}

EdgeWord Graph::word(std::initializer_list<std::string_view> names) const {
  EdgeWord w;
  w.reserve(names.size());
  for (auto n : names) w.push_back(edge(n));
  return w;
}

OrderedGraph::OrderedGraph(Graph graph) : graph_(std::move(graph)) {
  rank_.resize(graph_.edge_count());
  for (EdgeId e = 0; e < rank_.size(); ++e) rank_[e] = e;
  index();
}

OrderedGraph::OrderedGraph(Graph graph, const std::vector<EdgeId>& order) : graph_(std::move(graph)) {
  const auto n = graph_.edge_count();
  if (order.size() != n) {
    throw Error(ErrorCode::invalid_graph, "edge order must list every edge exactly once");
  }
  rank_.assign(n, static_cast<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    if (order[i] >= n || rank_[order[i]] != n) {
      throw Error(ErrorCode::invalid_graph, "edge order must list every edge exactly once");
    }
    rank_[order[i]] = i;
  }
  index();
}

void OrderedGraph::index() {
  sorted_.resize(graph_.edge_count());
  for (EdgeId e = 0; e < sorted_.size(); ++e) sorted_[rank_[e]] = e;
  sorted_into_.assign(graph_.vertex_count(), {});
  for (EdgeId e : sorted_) sorted_into_[graph_.range(e)].push_back(e);
}

ValidationReport validate(const Graph& graph) {
  ValidationReport report;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.edges_into(v).empty()) {
      report.sourceless.push_back(v);
      if (graph.edges_from(v).empty()) report.isolated.push_back(v);
    }
  }
  return report;
}

ValidationReport validate_order(const OrderedGraph& og) {
  ValidationReport report = validate(og.graph());
  const Graph& g = og.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto in = og.edges_into(v);
    if (in.empty()) continue;
    if (og.rank(in.back()) - og.rank(in.front()) + 1 != in.size()) report.order_violations.push_back(v);
  }
  return report;
}

bool every_loop_has_entrance(const Graph& graph) {
  // A loop without entrance is a cycle of the partial map
  // v -> s(unique edge into v), restricted to vertices of in-degree one.
  const auto n = graph.vertex_count();
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> walk;
    VertexId v = start;
    while (state[v] == 0 && graph.edges_into(v).size() == 1) {
      state[v] = 1;
      walk.push_back(v);
      v = graph.source(graph.edges_into(v).front());
    }
    if (state[v] == 1) return false;
    for (VertexId w : walk) state[w] = 2;
    if (state[v] == 0) state[v] = 2;
  }
  return true;
}

bool has_loop(const Graph& graph) {
  const auto n = graph.vertex_count();
  std::vector<int> color(n, 0);
  std::function<bool(VertexId)> visit = [&](VertexId v) {
    color[v] = 1;
    for (EdgeId e : graph.edges_into(v)) {
      VertexId w = graph.source(e);
      if (color[w] == 1) return true;
      if (color[w] == 0 && visit(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (VertexId v = 0; v < n; ++v) {
    if (color[v] == 0 && visit(v)) return true;
  }
  return false;
}

bool is_transitive(const Graph& graph) {
  const auto n = graph.vertex_count();
  for (VertexId start = 0; start < n; ++start) {
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : graph.edges_into(v)) {
        VertexId w = graph.source(e);
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push_back(w);
        }
      }
    }
    if (count != n) return false;
  }
  return true;
}

std::vector<EdgeWord> simple_loops(const Graph& graph) {
  std::vector<EdgeWord> loops;
  std::vector<bool> on_loop(graph.vertex_count(), false);
  EdgeWord current;
  std::function<void(EdgeId, VertexId)> extend = [&](EdgeId first, VertexId at) {
    // `at` is the source of the last edge; the next edge must have range `at`.
    if (at == graph.range(first)) {
      loops.push_back(current);
      return;
    }
    if (on_loop[at]) return;
    on_loop[at] = true;
    for (EdgeId e : graph.edges_into(at)) {
      if (e <= first) continue;
      current.push_back(e);
      extend(first, graph.source(e));
      current.pop_back();
    }
    on_loop[at] = false;
  };
  for (EdgeId first = 0; first < graph.edge_count(); ++first) {
    current = {first};
    on_loop[graph.range(first)] = true;
    extend(first, graph.source(first));
    on_loop[graph.range(first)] = false;
  }
  return loops;
}

std::size_t max_simple_loop_length(const Graph& graph) {
  std::size_t best = 0;
  for (const auto& loop : simple_loops(graph)) best = std::max(best, loop.size());
  return best;
}

std::optional<EdgeWord> shortest_path(const Graph& graph, VertexId range_vertex, VertexId source_vertex) {
  if (range_vertex == source_vertex) return EdgeWord{};
  // Breadth-first from the range end: each step appends an edge whose range
  // is the source of the previous one.
  const auto n = graph.vertex_count();
  std::vector<std::optional<EdgeId>> via(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{range_vertex};
  seen[range_vertex] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : graph.edges_into(v)) {
      VertexId w = graph.source(e);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      if (w == source_vertex) {
        EdgeWord path;
        for (VertexId t = w; t != range_vertex; t = graph.range(*via[t])) path.push_back(*via[t]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace ckstar
