#include "ckstar/nest.hpp"

#include "ckstar/error.hpp"

#include <algorithm>

namespace ckstar {

namespace {

bool word_starts_with(const EdgeWord& word, const EdgeWord& prefix) {
  return prefix.size() <= word.size() && std::equal(prefix.begin(), prefix.end(), word.begin());
}

EdgeWord head(const EdgeWord& w, std::size_t n) {
  return EdgeWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

EdgeWord tail(const EdgeWord& w, std::size_t n) {
  return EdgeWord(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
}

// Some rotation of cycle^(k / |cycle|) satisfies `pred`.
template <typename Pred>
bool some_block(const Graph& graph, const EdgeWord& cycle, std::size_t k, Pred pred) {
  if (k % cycle.size() != 0) return false;
  EdgeWord block;
  for (std::size_t i = 0; i < k / cycle.size(); ++i) block.insert(block.end(), cycle.begin(), cycle.end());
  for (std::size_t r = 0; r < cycle.size(); ++r) {
    if (pred(FinPath::from_word(graph, block))) return true;
    std::rotate(block.begin(), block.begin() + 1, block.end());
  }
  return false;
}

}  // namespace

std::vector<EdgeWord> nest_atoms(const OrderedGraph& og, std::size_t level) { return paths_of_length(og, level); }

AlgElement nest_projection(const OrderedGraph& og, std::size_t level, std::size_t cut) {
  if (level == 0) throw Error(ErrorCode::out_of_range, "nest levels start at 1");
  const auto atoms = nest_atoms(og, level);
  if (cut > atoms.size()) {
    throw Error(ErrorCode::out_of_range,
                "cut " + std::to_string(cut) + " exceeds the " + std::to_string(atoms.size()) + " atoms of the level");
  }
  AlgElement p;
  for (std::size_t i = 0; i < cut; ++i) {
    p.add_term(CKMono::range_projection(FinPath::from_word(og.graph(), atoms[i])), Coefficient(1L));
  }
  return normalize(og.graph(), p);
}

std::string_view to_string(NestClause clause) {
  switch (clause) {
    case NestClause::equal_length: return "equal_length";
    case NestClause::alpha_head_precedes: return "alpha_head_precedes";
    case NestClause::alpha_min_extension: return "alpha_min_extension";
    case NestClause::beta_head_follows: return "beta_head_follows";
    case NestClause::beta_max_extension: return "beta_max_extension";
  }
  return "unknown";
}

std::optional<NestClause> in_alg_n(const OrderedGraph& og, const CKMono& m) {
  const Graph& graph = og.graph();
  const EdgeWord& a = m.alpha.edges();
  const EdgeWord& b = m.beta.edges();
  if (a.size() == b.size()) {
    if (lex_compare(og, a, b) <= 0) return NestClause::equal_length;
    return std::nullopt;
  }
  // Prefix relations are on edge words: an empty beta is a prefix of alpha
  // whatever the vertices.
  if (a.size() > b.size()) {
    if (lex_compare(og, head(a, b.size()), b) < 0) return NestClause::alpha_head_precedes;
    if (word_starts_with(a, b) && is_s_minimal(og, FinPath::from_word(graph, tail(a, b.size())))) {
      return NestClause::alpha_min_extension;
    }
    return std::nullopt;
  }
  if (lex_compare(og, a, head(b, a.size())) < 0) return NestClause::beta_head_follows;
  if (word_starts_with(b, a) && is_s_maximal(og, FinPath::from_word(graph, tail(b, a.size())))) {
    return NestClause::beta_max_extension;
  }
  return std::nullopt;
}

std::size_t default_oracle_level(const OrderedGraph& og, const CKMono& m) {
  return m.alpha.size() + m.beta.size() + 2 * std::max<std::size_t>(max_simple_loop_length(og.graph()), 1);
}

std::optional<NestViolation> in_alg_n_oracle(const OrderedGraph& og, const CKMono& m, std::size_t max_level) {
  const Graph& graph = og.graph();
  for (std::size_t level = 1; level <= max_level; ++level) {
    const auto atoms = nest_atoms(og, level);
    std::vector<CKMono> projections;
    projections.reserve(atoms.size());
    for (const auto& w : atoms) projections.push_back(CKMono::range_projection(FinPath::from_word(graph, w)));
    for (std::size_t i = 0; i < projections.size(); ++i) {
      auto right = mul_mono(graph, m, projections[i]);
      if (!right) continue;
      for (std::size_t j = i + 1; j < projections.size(); ++j) {
        if (mul_mono(graph, projections[j], *right)) return NestViolation{level, i + 1};
      }
    }
  }
  return std::nullopt;
}

std::optional<NestViolation> in_alg_n_oracle_literal(const OrderedGraph& og, const CKMono& m,
                                                     std::size_t max_level) {
  const Graph& graph = og.graph();
  const AlgElement a(m);
  const AlgElement one = identity(graph);
  for (std::size_t level = 1; level <= max_level; ++level) {
    const std::size_t n = nest_atoms(og, level).size();
    for (std::size_t cut = 1; cut < n; ++cut) {
      const AlgElement p = nest_projection(og, level, cut);
      const AlgElement p_perp = sub(graph, one, p);
      if (!mul(graph, p_perp, mul(graph, a, p)).empty()) return NestViolation{level, cut};
    }
  }
  return std::nullopt;
}

std::string_view to_string(SpectrumClause clause) {
  switch (clause) {
    case SpectrumClause::precedes: return "precedes";
    case SpectrumClause::diagonal: return "diagonal";
    case SpectrumClause::min_loop: return "min_loop";
    case SpectrumClause::max_loop: return "max_loop";
  }
  return "unknown";
}

std::optional<SpectrumClause> point_in_spectrum_alg_n(const OrderedGraph& og, const GroupoidPoint& g) {
  const auto order = lex_compare(og, g.x, g.y);
  if (order < 0) return SpectrumClause::precedes;
  if (order > 0) return std::nullopt;
  if (g.k == 0) return SpectrumClause::diagonal;
  const Graph& graph = og.graph();
  const EdgeWord& cycle = g.x.cycle();
  if (g.k > 0) {
    if (some_block(graph, cycle, static_cast<std::size_t>(g.k), [&](const FinPath& p) { return is_s_minimal(og, p); })) {
      return SpectrumClause::min_loop;
    }
    return std::nullopt;
  }
  if (some_block(graph, cycle, static_cast<std::size_t>(-g.k), [&](const FinPath& p) { return is_s_maximal(og, p); })) {
    return SpectrumClause::max_loop;
  }
  return std::nullopt;
}

bool in_radical_spectrum(const OrderedGraph& og, const GroupoidPoint& g) {
  return point_in_spectrum_alg_n(og, g) == SpectrumClause::precedes;
}

bool cylinder_in_radical(const OrderedGraph& og, const CKMono& m) {
  const EdgeWord& a = m.alpha.edges();
  const EdgeWord& b = m.beta.edges();
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] != b[i]) return og.precedes(a[i], b[i]);
  }
  if (a.size() == b.size()) return false;
  // One path extends the other by gamma; the points are (.. gamma z, .. z)
  // or the reverse, and the comparison of gamma with the next |gamma| edges
  // of z decides, with equality recurring into z = gamma^inf (a unit).
  const bool alpha_longer = a.size() > b.size();
  const EdgeWord gamma = alpha_longer ? tail(a, common) : tail(b, common);
  const auto rivals = paths_into(og, m.anchor(), gamma.size());
  return std::all_of(rivals.begin(), rivals.end(), [&](const EdgeWord& zeta) {
    const auto order = lex_compare(og, gamma, zeta);
    return alpha_longer ? order < 0 : order > 0;
  });
}

AlgElement commutator(const Graph& graph, const AlgElement& a, const AlgElement& b) {
  return sub(graph, mul(graph, a, b), mul(graph, b, a));
}

}  // namespace ckstar
