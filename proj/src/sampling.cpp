#include "ckstar/sampling.hpp"

#include "ckstar/error.hpp"

#include <algorithm>

namespace ckstar {

namespace {

bool comparable(const Graph& graph, const FinPath& x, const FinPath& y) {
  return x.starts_with(y, graph) || y.starts_with(x, graph);
}

}  // namespace

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

FinPath Sampler::path_to_source(VertexId v, std::size_t n) {
  const Graph& graph = og_.graph();
  EdgeWord reversed;
  VertexId at = v;
  for (std::size_t i = 0; i < n; ++i) {
    auto out = graph.edges_from(at);
    if (out.empty()) break;
    const EdgeId e = out[uniform(0, out.size() - 1)];
    reversed.push_back(e);
    at = graph.range(e);
  }
  std::reverse(reversed.begin(), reversed.end());
  return FinPath::from_word(graph, reversed, v);
}

FinPath Sampler::path_from_range(VertexId v, std::size_t n) {
  const Graph& graph = og_.graph();
  EdgeWord word;
  VertexId at = v;
  for (std::size_t i = 0; i < n; ++i) {
    auto in = graph.edges_into(at);
    if (in.empty()) break;
    const EdgeId e = in[uniform(0, in.size() - 1)];
    word.push_back(e);
    at = graph.source(e);
  }
  if (word.empty()) return FinPath::empty_at(v);
  return FinPath::from_word(graph, word);
}

EvPath Sampler::ev_path(std::size_t max_prefix) {
  const Graph& graph = og_.graph();
  const auto loops = simple_loops(graph);
  if (loops.empty()) throw Error(ErrorCode::precondition, "graph has no loop, so no eventually periodic paths");
  EdgeWord cycle = loops[uniform(0, loops.size() - 1)];
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(uniform(0, cycle.size() - 1)), cycle.end());
  const VertexId base = graph.range(cycle.front());
  if (coin()) {
    // Append a second loop through the same vertex, if one exists.
    std::vector<EdgeWord> here;
    for (auto l : loops) {
      for (std::size_t r = 0; r < l.size(); ++r) {
        if (graph.range(l.front()) == base) here.push_back(l);
        std::rotate(l.begin(), l.begin() + 1, l.end());
      }
    }
    const auto& extra = here[uniform(0, here.size() - 1)];
    cycle.insert(cycle.end(), extra.begin(), extra.end());
  }
  const FinPath prefix = path_to_source(base, uniform(0, max_prefix));
  return EvPath::make(graph, prefix.edges(), cycle);
}

EvPath Sampler::periodic_path() {
  EvPath x = ev_path(0);
  return x.drop(x.prefix().size());
}

GroupoidPoint Sampler::point(std::size_t max_len) {
  const Graph& graph = og_.graph();
  if (uniform(0, 4) == 0) {
    const EvPath x = ev_path(max_len);
    const auto p = static_cast<std::int64_t>(x.cycle().size());
    const auto j = static_cast<std::int64_t>(uniform(0, 4)) - 2;
    return GroupoidPoint::make(x, j * p, x);
  }
  const EvPath z = ev_path(max_len);
  const VertexId v = z.range(graph);
  const FinPath alpha = path_to_source(v, uniform(0, max_len));
  const FinPath beta = path_to_source(v, uniform(0, max_len));
  return GroupoidPoint::make(z.prepend(graph, alpha),
                             static_cast<std::int64_t>(alpha.size()) - static_cast<std::int64_t>(beta.size()),
                             z.prepend(graph, beta));
}

std::pair<GroupoidPoint, GroupoidPoint> Sampler::composable_pair(std::size_t max_len) {
  const Graph& graph = og_.graph();
  const GroupoidPoint g1 = point(max_len);
  // Re-split g1.y = delta w and attach a fresh gamma: g2 = (delta w, |delta| - |gamma|, gamma w).
  const std::size_t n = uniform(0, max_len);
  const EvPath w = g1.y.drop(n);
  const FinPath gamma = path_to_source(w.range(graph), uniform(0, max_len));
  const GroupoidPoint g2 = GroupoidPoint::make(
      g1.y, static_cast<std::int64_t>(n) - static_cast<std::int64_t>(gamma.size()), w.prepend(graph, gamma));
  return {g1, g2};
}

CKMono Sampler::mono(std::size_t max_len) {
  const VertexId v = static_cast<VertexId>(uniform(0, og_.graph().vertex_count() - 1));
  FinPath alpha = path_to_source(v, uniform(0, max_len));
  FinPath beta = path_to_source(v, uniform(0, max_len));
  return {std::move(alpha), std::move(beta)};
}

CKMono Sampler::mono_degree(std::size_t max_len, std::int64_t min_degree, std::int64_t max_degree) {
  for (;;) {
    CKMono m = mono(max_len);
    if (m.degree() >= min_degree && m.degree() <= max_degree) return m;
  }
}

Coefficient Sampler::coefficient(bool gaussian) {
  for (;;) {
    const long re_num = static_cast<long>(uniform(0, 8)) - 4;
    const long den = static_cast<long>(uniform(1, 3));
    const long im_num = gaussian && coin() ? static_cast<long>(uniform(0, 6)) - 3 : 0;
    Coefficient c(make_rational(re_num, den), make_rational(im_num, den));
    if (!c.is_zero()) return c;
  }
}

AlgElement Sampler::element(std::size_t max_terms, std::size_t max_len, bool gaussian) {
  AlgElement a;
  const std::size_t n = uniform(1, max_terms);
  for (std::size_t i = 0; i < n; ++i) a.add_term(mono(max_len), coefficient(gaussian));
  return a;
}

AlgElement Sampler::diagonal(std::size_t max_terms, std::size_t max_len) {
  AlgElement d;
  const std::size_t n = uniform(1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = static_cast<VertexId>(uniform(0, og_.graph().vertex_count() - 1));
    d.add_term(CKMono::range_projection(path_to_source(v, uniform(0, max_len))), coefficient(false));
  }
  return d;
}

AlgElement Sampler::diagonal_projection(std::size_t level) {
  const Graph& graph = og_.graph();
  AlgElement p;
  if (level == 0) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      if (coin()) p.add_term(CKMono::vertex(v), Coefficient(1L));
    }
    return p;
  }
  for (const auto& w : paths_of_length(og_, level)) {
    if (coin()) p.add_term(CKMono::range_projection(FinPath::from_word(graph, w)), Coefficient(1L));
  }
  return p;
}

AlgElement Sampler::normalizer(std::size_t max_terms, std::size_t level, std::size_t max_degree) {
  const Graph& graph = og_.graph();
  static const Coefficient units[] = {Coefficient(1L), Coefficient(-1L), Coefficient::imaginary_unit(),
                                      -Coefficient::imaginary_unit()};
  std::vector<CKMono> chosen;
  const std::size_t n = uniform(1, max_terms);
  for (std::size_t attempt = 0; attempt < 50 * n && chosen.size() < n; ++attempt) {
    const VertexId v = static_cast<VertexId>(uniform(0, graph.vertex_count() - 1));
    const std::size_t b = uniform(0, level);
    CKMono m{path_to_source(v, b + uniform(0, max_degree)), path_to_source(v, b)};
    if (coin()) m = m.adjoint();
    const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const CKMono& c) {
      return comparable(graph, c.alpha, m.alpha) || comparable(graph, c.beta, m.beta);
    });
    if (!clash) chosen.push_back(std::move(m));
  }
  AlgElement v;
  for (const auto& m : chosen) v.add_term(m, units[uniform(0, 3)]);
  return v;
}

LocallyConstantFn Sampler::function(std::size_t depth, long max_abs) {
  std::map<EdgeWord, Rational> table;
  auto draw = [&] {
    const long num = static_cast<long>(uniform(0, static_cast<std::size_t>(2 * max_abs))) - max_abs;
    return make_rational(num, static_cast<long>(uniform(1, 3)));
  };
  if (depth == 0) return LocallyConstantFn::constant(draw());
  for (const auto& p : paths_of_length(og_, depth)) table.emplace(p, draw());
  return {depth, std::move(table)};
}

}  // namespace ckstar
