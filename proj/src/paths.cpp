#include "ckstar/paths.hpp"

#include "ckstar/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ckstar {

namespace {

void check_composable(const Graph& graph, const EdgeWord& edges) {
  for (EdgeId e : edges) {
    if (e >= graph.edge_count()) throw Error(ErrorCode::invalid_path, "edge index out of range");
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (graph.range(edges[i]) != graph.source(edges[i - 1])) {
      throw Error(ErrorCode::invalid_path, "edges " + graph.edge_name(edges[i - 1]) + " and " +
                                               graph.edge_name(edges[i]) + " do not compose");
    }
  }
}

std::strong_ordering compare_words(const OrderedGraph& og, const EdgeWord& x, const EdgeWord& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return og.rank(x[i]) <=> og.rank(y[i]);
  }
  return std::strong_ordering::equal;
}

// reach[n][v]: some path of length n has range v.
std::vector<std::vector<bool>> reachability(const Graph& graph, std::size_t n) {
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(graph.vertex_count(), false));
  std::fill(reach[0].begin(), reach[0].end(), true);
  for (std::size_t len = 1; len <= n; ++len) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      for (EdgeId e : graph.edges_into(v)) {
        if (reach[len - 1][graph.source(e)]) {
          reach[len][v] = true;
          break;
        }
      }
    }
  }
  return reach;
}

std::optional<EdgeWord> extreme_path(const OrderedGraph& og, VertexId v, std::size_t n, bool want_max) {
  const Graph& graph = og.graph();
  const auto reach = reachability(graph, n);
  if (!reach[n][v]) return std::nullopt;
  EdgeWord word;
  VertexId at = v;
  for (std::size_t left = n; left > 0; --left) {
    auto in = og.edges_into(at);
    auto pick = [&](EdgeId e) { return reach[left - 1][graph.source(e)]; };
    EdgeId chosen = want_max ? *std::find_if(in.rbegin(), in.rend(), pick) : *std::find_if(in.begin(), in.end(), pick);
    word.push_back(chosen);
    at = graph.source(chosen);
  }
  return word;
}

void extend_paths(const OrderedGraph& og, EdgeWord& current, std::size_t n, std::vector<EdgeWord>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (EdgeId e : og.edges_into(og.graph().source(current.back()))) {
    current.push_back(e);
    extend_paths(og, current, n, out);
    current.pop_back();
  }
}

}  // namespace

FinPath FinPath::from_word(const Graph& graph, EdgeWord edges) {
  if (edges.empty()) throw Error(ErrorCode::invalid_path, "an empty path needs an anchor vertex");
  check_composable(graph, edges);
  const VertexId s = graph.source(edges.back());
  return FinPath(std::move(edges), s);
}

FinPath FinPath::from_word(const Graph& graph, EdgeWord edges, VertexId anchor) {
  if (edges.empty()) {
    if (anchor >= graph.vertex_count()) throw Error(ErrorCode::invalid_path, "anchor out of range");
    return empty_at(anchor);
  }
  FinPath p = from_word(graph, std::move(edges));
  if (p.source() != anchor) throw Error(ErrorCode::invalid_path, "anchor does not match the path source");
  return p;
}

FinPath FinPath::take(const Graph& graph, std::size_t n) const {
  if (n >= edges_.size()) return *this;
  if (n == 0) return empty_at(range(graph));
  EdgeWord head(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(n));
  const VertexId s = graph.source(head.back());
  return FinPath(std::move(head), s);
}

FinPath FinPath::drop(std::size_t n) const {
  if (n >= edges_.size()) return empty_at(source_);
  return FinPath(EdgeWord(edges_.begin() + static_cast<std::ptrdiff_t>(n), edges_.end()), source_);
}

bool FinPath::starts_with(const FinPath& prefix, const Graph& graph) const {
  if (prefix.empty()) return prefix.source() == range(graph);
  if (prefix.size() > size()) return false;
  return std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin());
}

FinPath concat(const Graph& graph, const FinPath& alpha, const FinPath& beta) {
  if (alpha.source() != beta.range(graph)) {
    throw Error(ErrorCode::composition_mismatch, "source of the left path differs from range of the right path");
  }
  if (beta.empty()) return alpha;
  if (alpha.empty()) return beta;
  EdgeWord joined = alpha.edges();
  joined.insert(joined.end(), beta.edges().begin(), beta.edges().end());
  return FinPath::from_word(graph, std::move(joined));
}

EvPath::EvPath(EdgeWord prefix, EdgeWord cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  canonicalize();
}

void EvPath::canonicalize() {
  const auto n = cycle_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool period = true;
    for (std::size_t i = d; i < n && period; ++i) period = cycle_[i] == cycle_[i - d];
    if (period) {
      cycle_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

EvPath EvPath::make(const Graph& graph, EdgeWord prefix, EdgeWord cycle) {
  if (cycle.empty()) throw Error(ErrorCode::invalid_path, "cycle must be nonempty");
  check_composable(graph, cycle);
  if (graph.source(cycle.back()) != graph.range(cycle.front())) {
    throw Error(ErrorCode::invalid_path, "cycle is not a loop");
  }
  check_composable(graph, prefix);
  if (!prefix.empty() && graph.source(prefix.back()) != graph.range(cycle.front())) {
    throw Error(ErrorCode::invalid_path, "prefix does not end where the cycle starts");
  }
  return EvPath(std::move(prefix), std::move(cycle));
}

EdgeWord EvPath::take(std::size_t n) const {
  EdgeWord out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

EvPath EvPath::drop(std::size_t n) const {
  if (n <= prefix_.size()) {
    return EvPath(EdgeWord(prefix_.begin() + static_cast<std::ptrdiff_t>(n), prefix_.end()), cycle_);
  }
  EdgeWord rotated = cycle_;
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>((n - prefix_.size()) % cycle_.size()),
              rotated.end());
  return EvPath({}, std::move(rotated));
}

EvPath EvPath::prepend(const Graph& graph, const FinPath& alpha) const {
  if (alpha.source() != range(graph)) {
    throw Error(ErrorCode::composition_mismatch, "path does not end where the infinite path begins");
  }
  EdgeWord prefix = alpha.edges();
  prefix.insert(prefix.end(), prefix_.begin(), prefix_.end());
  return EvPath(std::move(prefix), cycle_);
}

std::strong_ordering lex_compare(const OrderedGraph& og, const EdgeWord& x, const EdgeWord& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::length_mismatch, "lexicographic order needs equal lengths");
  return compare_words(og, x, y);
}

std::strong_ordering lex_compare(const OrderedGraph& og, const FinPath& x, const FinPath& y) {
  return lex_compare(og, x.edges(), y.edges());
}

std::strong_ordering lex_compare(const OrderedGraph& og, const EvPath& x, const EvPath& y) {
  const std::size_t window =
      x.prefix().size() + y.prefix().size() + std::lcm(x.cycle().size(), y.cycle().size());
  for (std::size_t i = 0; i < window; ++i) {
    if (x.at(i) != y.at(i)) return og.rank(x.at(i)) <=> og.rank(y.at(i));
  }
  return std::strong_ordering::equal;
}

std::optional<EdgeWord> lex_min_path(const OrderedGraph& og, VertexId v, std::size_t n) {
  return extreme_path(og, v, n, false);
}

std::optional<EdgeWord> lex_max_path(const OrderedGraph& og, VertexId v, std::size_t n) {
  return extreme_path(og, v, n, true);
}

bool is_s_minimal(const OrderedGraph& og, const FinPath& alpha) {
  auto best = lex_min_path(og, alpha.source(), alpha.size());
  return !best || compare_words(og, alpha.edges(), *best) <= 0;
}

bool is_s_maximal(const OrderedGraph& og, const FinPath& alpha) {
  auto best = lex_max_path(og, alpha.source(), alpha.size());
  return !best || compare_words(og, alpha.edges(), *best) >= 0;
}

bool sim_k(const EvPath& x, std::int64_t k, const EvPath& y) {
  // x_{i+k} = y_i eventually iff S^{k+} x and S^{k-} y have the same periodic tail.
  EvPath xs = x.drop(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)));
  EvPath ys = y.drop(static_cast<std::size_t>(std::max<std::int64_t>(-k, 0)));
  const std::size_t m = std::max(xs.prefix().size(), ys.prefix().size());
  return xs.drop(m) == ys.drop(m);
}

GroupoidPoint GroupoidPoint::make(EvPath x, std::int64_t k, EvPath y) {
  if (!sim_k(x, k, y)) throw Error(ErrorCode::invalid_path, "paths are not shift equivalent with lag " + std::to_string(k));
  return {std::move(x), k, std::move(y)};
}

GroupoidPoint compose(const GroupoidPoint& g1, const GroupoidPoint& g2) {
  if (!(g1.y == g2.x)) throw Error(ErrorCode::non_composable, "g1.y differs from g2.x");
  return {g1.x, g1.k + g2.k, g2.y};
}

GroupoidPoint inverse(const GroupoidPoint& g) { return {g.y, -g.k, g.x}; }

bool in_cylinder(const Graph& graph, const EvPath& x, const FinPath& alpha) {
  if (alpha.empty()) return x.range(graph) == alpha.source();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (x.at(i) != alpha[i]) return false;
  }
  return true;
}

bool point_in_Z(const Graph& graph, const GroupoidPoint& g, const FinPath& alpha, const FinPath& beta) {
  if (alpha.source() != beta.source()) return false;
  if (g.k != static_cast<std::int64_t>(alpha.size()) - static_cast<std::int64_t>(beta.size())) return false;
  if (!in_cylinder(graph, g.x, alpha) || !in_cylinder(graph, g.y, beta)) return false;
  return g.x.drop(alpha.size()) == g.y.drop(beta.size());
}

std::vector<EdgeWord> paths_into(const OrderedGraph& og, VertexId v, std::size_t n) {
  std::vector<EdgeWord> out;
  if (n == 0) return out;
  EdgeWord current;
  for (EdgeId e : og.edges_into(v)) {
    current = {e};
    extend_paths(og, current, n, out);
  }
  return out;
}

std::vector<EdgeWord> paths_of_length(const OrderedGraph& og, std::size_t n) {
  std::vector<EdgeWord> out;
  if (n == 0) return out;
  EdgeWord current;
  for (EdgeId e : og.edges()) {
    current = {e};
    extend_paths(og, current, n, out);
  }
  return out;
}

}  // namespace ckstar
