#include "ckstar/spectrum.hpp"

#include <algorithm>

namespace ckstar {

namespace {

std::optional<CKMono> parent_of(const Graph& graph, const CKMono& m) {
  if (m.alpha.empty() || m.beta.empty() || m.alpha.edges().back() != m.beta.edges().back()) return std::nullopt;
  return CKMono{m.alpha.take(graph, m.alpha.size() - 1), m.beta.take(graph, m.beta.size() - 1)};
}

// Maximal cylinders of one degree. Works level by level: the cylinders of
// level l - 1 inside the union are exactly those whose children all are.
std::set<Cylinder> maximal_cylinders(const Graph& graph, const std::vector<Cylinder>& pieces) {
  std::size_t top = 0;
  for (const auto& c : pieces) top = std::max(top, c.level());
  std::vector<std::set<Cylinder>> inside(top + 1);
  for (const auto& c : pieces) {
    for (auto& leaf : refine_mono(graph, c, top)) inside[top].insert(std::move(leaf));
  }
  for (std::size_t level = top; level > 0; --level) {
    for (const auto& c : inside[level]) {
      auto parent = parent_of(graph, c);
      if (!parent || inside[level - 1].count(*parent)) continue;
      const auto kids = children(graph, *parent);
      if (std::all_of(kids.begin(), kids.end(), [&](const CKMono& k) { return inside[level].count(k) > 0; })) {
        inside[level - 1].insert(*parent);
      }
    }
  }
  std::set<Cylinder> out;
  for (std::size_t level = 0; level <= top; ++level) {
    for (const auto& c : inside[level]) {
      auto parent = parent_of(graph, c);
      if (!parent || (level > 0 && !inside[level - 1].count(*parent))) out.insert(c);
    }
  }
  return out;
}

}  // namespace

SpectrumSet::SpectrumSet(const Graph& graph, const std::vector<Cylinder>& cylinders) {
  std::map<std::int64_t, std::vector<Cylinder>> grouped;
  for (const auto& c : cylinders) grouped[c.degree()].push_back(c);
  for (const auto& [degree, pieces] : grouped) {
    auto maximal = maximal_cylinders(graph, pieces);
    cylinders_.insert(maximal.begin(), maximal.end());
  }
}

SpectrumSet unite(const Graph& graph, const SpectrumSet& a, const SpectrumSet& b) {
  std::vector<Cylinder> all(a.cylinders().begin(), a.cylinders().end());
  all.insert(all.end(), b.cylinders().begin(), b.cylinders().end());
  return SpectrumSet(graph, all);
}

bool member(const Graph& graph, const CKMono& m, const SpectrumSet& s) {
  // Same-degree cylinders are nested or disjoint, so either some member
  // covers m, or m must be covered child by child by members inside it.
  bool some_inside = false;
  for (const auto& c : s.cylinders()) {
    if (cyl_contains(graph, c, m)) return true;
    if (!some_inside && cyl_contains(graph, m, c)) some_inside = true;
  }
  if (!some_inside) return false;
  for (const auto& child : children(graph, m)) {
    if (!member(graph, child, s)) return false;
  }
  return true;
}

bool contains_point(const Graph& graph, const SpectrumSet& s, const GroupoidPoint& g) {
  return std::any_of(s.cylinders().begin(), s.cylinders().end(),
                     [&](const Cylinder& c) { return point_in_Z(graph, g, c.alpha, c.beta); });
}

SpectrumSet support_spectrum(const Graph& graph, const AlgElement& a) {
  std::vector<Cylinder> cylinders;
  for (const auto& [m, c] : normalize(graph, a).terms()) cylinders.push_back(m);
  return SpectrumSet(graph, cylinders);
}

}  // namespace ckstar
