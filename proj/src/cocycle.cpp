#include "ckstar/cocycle.hpp"

#include "ckstar/error.hpp"

#include <algorithm>
#include <set>

namespace ckstar {

namespace {

EdgeWord window_at(const EvPath& x, std::size_t offset, std::size_t n) {
  EdgeWord w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = x.at(offset + i);
  return w;
}

const Rational& f_shift(const LocallyConstantFn& f, const EvPath& x, std::size_t j) {
  return f.value(window_at(x, j, f.depth()));
}

EdgeWord power(const EdgeWord& w, std::size_t times) {
  EdgeWord out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

EdgeWord join(std::initializer_list<EdgeWord> parts) {
  EdgeWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool is_loop(const Graph& graph, const FinPath& p) { return !p.empty() && p.range(graph) == p.source(); }

}  // namespace

LocallyConstantFn LocallyConstantFn::from_edge_weights(const std::vector<Rational>& weights) {
  std::map<EdgeWord, Rational> table;
  for (EdgeId e = 0; e < weights.size(); ++e) table.emplace(EdgeWord{e}, weights[e]);
  return {1, std::move(table)};
}

const Rational& LocallyConstantFn::value(const EdgeWord& word, std::size_t offset) const {
  if (word.size() < offset + depth_) throw Error(ErrorCode::precondition, "word shorter than the function depth");
  const EdgeWord key(word.begin() + static_cast<std::ptrdiff_t>(offset),
                     word.begin() + static_cast<std::ptrdiff_t>(offset + depth_));
  auto it = table_.find(key);
  if (it == table_.end()) throw Error(ErrorCode::precondition, "function table has no entry for a path");
  return it->second;
}

const Rational& LocallyConstantFn::value(const EvPath& x) const { return value(x.take(depth_)); }

void LocallyConstantFn::check_total(const OrderedGraph& og) const {
  if (depth_ == 0) {
    if (table_.size() != 1 || !table_.begin()->first.empty()) {
      throw Error(ErrorCode::precondition, "depth-0 function needs exactly one value");
    }
    return;
  }
  const auto paths = paths_of_length(og, depth_);
  if (paths.size() != table_.size()) throw Error(ErrorCode::precondition, "function table is not total on F_N");
  for (const auto& p : paths) {
    if (!table_.count(p)) throw Error(ErrorCode::precondition, "function table is not total on F_N");
  }
}

std::size_t stabilization_index(const GroupoidPoint& g) {
  if (!sim_k(g.x, g.k, g.y)) throw Error(ErrorCode::precondition, "point is not shift equivalent");
  const std::size_t shift_x = static_cast<std::size_t>(std::max<std::int64_t>(g.k, 0));
  const std::size_t shift_y = static_cast<std::size_t>(std::max<std::int64_t>(-g.k, 0));
  const EvPath xs = g.x.drop(shift_x);
  const EvPath ys = g.y.drop(shift_y);
  std::size_t i = std::max(xs.prefix().size(), ys.prefix().size());
  while (i > 0 && xs.at(i - 1) == ys.at(i - 1)) --i;
  return i + shift_x;
}

Rational eval_cocycle(const LocallyConstantFn& f, const GroupoidPoint& g) {
  if (g.k < 0) return Rational(-eval_cocycle(f, inverse(g)));
  const auto k = static_cast<std::size_t>(g.k);
  const std::size_t n = stabilization_index(g);
  Rational c(0);
  for (std::size_t j = 0; j < k; ++j) c += f_shift(f, g.x, j);
  for (std::size_t j = k; j < n; ++j) c += f_shift(f, g.x, j) - f_shift(f, g.y, j - k);
  return c;
}

Rational eval_cocycle_tailed(const LocallyConstantFn& f, const TailedPair& tp) {
  if (tp.window.size() < f.depth()) {
    throw Error(ErrorCode::window_too_short, "window has " + std::to_string(tp.window.size()) +
                                                 " edges, function depth is " + std::to_string(f.depth()));
  }
  const EdgeWord x = join({tp.prefix_x, tp.window});
  const EdgeWord y = join({tp.prefix_y, tp.window});
  Rational c(0);
  for (std::size_t j = 0; j < tp.prefix_x.size(); ++j) c += f.value(x, j);
  for (std::size_t j = 0; j < tp.prefix_y.size(); ++j) c -= f.value(y, j);
  return c;
}

TailedPair to_tailed(const GroupoidPoint& g, std::size_t depth) {
  const std::size_t n = g.k >= 0 ? stabilization_index(g) : stabilization_index(inverse(g));
  // n indexes x for k >= 0 and y for k < 0; the other side is offset by |k|.
  const std::size_t nx = g.k >= 0 ? n : n - static_cast<std::size_t>(-g.k);
  const std::size_t ny = g.k >= 0 ? n - static_cast<std::size_t>(g.k) : n;
  return {g.x.take(nx), g.y.take(ny), window_at(g.x, nx, depth)};
}

bool reconstructs(const LocallyConstantFn& f, const std::vector<EvPath>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](const EvPath& x) {
    return eval_cocycle(f, GroupoidPoint{x, 1, shift(x)}) == f.value(x);
  });
}

LoopGrowth loop_growth(const LocallyConstantFn& f, const EvPath& x, std::optional<std::size_t> period,
                       std::size_t max_multiple) {
  if (!x.purely_periodic()) throw Error(ErrorCode::precondition, "loop growth needs a purely periodic point");
  const std::size_t p = period.value_or(x.cycle().size());
  if (p == 0 || p % x.cycle().size() != 0) {
    throw Error(ErrorCode::precondition, "period must be a positive multiple of the primitive period");
  }
  LoopGrowth out;
  out.period = p;
  out.base = eval_cocycle(f, GroupoidPoint{x, static_cast<std::int64_t>(p), x});
  out.verified = true;
  for (std::size_t k = 1; k <= max_multiple; ++k) {
    const Rational c = eval_cocycle(f, GroupoidPoint{x, static_cast<std::int64_t>(k * p), x});
    if (c != Rational(static_cast<long>(k)) * out.base) out.verified = false;
  }
  out.unbounded = sgn(out.base) != 0;
  return out;
}

std::vector<Rational> acyclic_weights(std::size_t n) {
  std::vector<Rational> weights;
  weights.reserve(n);
  Rational w = make_rational(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    weights.push_back(w);
    w /= 3;
  }
  return weights;
}

bool dominates(const std::vector<Rational>& weights) {
  for (const auto& w : weights) {
    Rational smaller(0);
    for (const auto& u : weights) {
      if (u < w) smaller += u;
    }
    if (!(w > smaller)) return false;
  }
  return true;
}

ObstructionWitness integer_obstruction_witness(const Graph& graph, const FinPath& alpha, const FinPath& beta,
                                               std::size_t multiplicity) {
  if (!is_loop(graph, alpha) || !is_loop(graph, beta)) {
    throw Error(ErrorCode::precondition, "obstruction witness needs two loops");
  }
  if (multiplicity < 2) throw Error(ErrorCode::precondition, "multiplicity must exceed 1");
  EdgeWord a = alpha.edges();
  EdgeWord b = beta.edges();
  const VertexId base = alpha.source();
  if (beta.source() != base) {
    auto in = shortest_path(graph, base, beta.source());
    auto out = shortest_path(graph, beta.source(), base);
    if (!in || !out) throw Error(ErrorCode::loops_not_equalizable, "loops lie in different components");
    b = join({*in, b, *out});
  }
  if (a.size() != b.size()) {
    const std::size_t la = a.size();
    a = power(a, b.size());
    b = power(b, la);
  }
  const std::set<EdgeId> in_alpha(a.begin(), a.end());
  if (std::all_of(b.begin(), b.end(), [&](EdgeId e) { return in_alpha.count(e) > 0; })) {
    throw Error(ErrorCode::loops_not_equalizable, "second loop has no edge outside the first");
  }
  ObstructionWitness w;
  w.alpha = FinPath::from_word(graph, a);
  w.beta = FinPath::from_word(graph, b);
  w.multiplicity = multiplicity;
  w.depth = multiplicity * a.size();
  const EdgeWord al = power(a, multiplicity);
  w.x = EvPath::make(graph, join({al, a, b, al}), b);
  w.y = EvPath::make(graph, join({al, b, a, al}), b);
  w.span = (multiplicity + 2) * a.size();
  return w;
}

Rational obstruction_sum(const LocallyConstantFn& f, const ObstructionWitness& w) {
  Rational s(0);
  for (std::size_t n = 0; n < w.span; ++n) s += f_shift(f, w.x, n) - f_shift(f, w.y, n);
  return s;
}

std::pair<std::vector<EdgeWord>, std::vector<EdgeWord>> truncation_multisets(const ObstructionWitness& w) {
  std::vector<EdgeWord> xs, ys;
  for (std::size_t n = 0; n < w.span; ++n) {
    xs.push_back(window_at(w.x, n, w.depth));
    ys.push_back(window_at(w.y, n, w.depth));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  return {xs, ys};
}

Z10Report is_z1_0_sampled(const LocallyConstantFn& f, const std::vector<GroupoidPoint>& samples) {
  Z10Report report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool zero = sgn(eval_cocycle(f, samples[i])) == 0;
    if (zero != samples[i].is_unit()) report.failures.push_back(i);
  }
  report.passed = report.failures.empty();
  return report;
}

std::vector<std::pair<CKMono, Rational>> cocycle_pieces(const Graph& graph, const LocallyConstantFn& f,
                                                        const CKMono& m) {
  std::vector<std::pair<CKMono, Rational>> out;
  for (const auto& piece : refine_mono(graph, m, m.level() + f.depth())) {
    const EdgeWord eps(piece.alpha.edges().end() - static_cast<std::ptrdiff_t>(f.depth()), piece.alpha.edges().end());
    TailedPair tp{m.alpha.edges(), m.beta.edges(), eps};
    out.emplace_back(piece, eval_cocycle_tailed(f, tp));
  }
  return out;
}

AlgElement cocycle_graded_projection(const Graph& graph, const LocallyConstantFn& f, const AlgElement& a,
                                     const Rational& value) {
  AlgElement out;
  for (const auto& [m, c] : normalize(graph, a).terms()) {
    for (const auto& [piece, v] : cocycle_pieces(graph, f, m)) {
      if (v == value) out.add_term(piece, c);
    }
  }
  return normalize(graph, out);
}

std::vector<Rational> cocycle_values(const Graph& graph, const LocallyConstantFn& f, const AlgElement& a) {
  std::set<Rational> values;
  for (const auto& [m, c] : normalize(graph, a).terms()) {
    for (const auto& [piece, v] : cocycle_pieces(graph, f, m)) values.insert(v);
  }
  return {values.begin(), values.end()};
}

}  // namespace ckstar
