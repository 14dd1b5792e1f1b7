#include "ckstar/bimodule.hpp"

#include "ckstar/error.hpp"

#include <algorithm>

namespace ckstar {

SpectrumSet generated_spectrum(const Graph& graph, const std::vector<AlgElement>& gens) {
  std::vector<Cylinder> cylinders;
  for (const auto& g : gens) {
    // Each graded part of g is a sum of monomials with disjoint supports,
    // so its support is the union of those cylinders.
    for (const auto& [m, c] : normalize(graph, g).terms()) cylinders.push_back(m);
  }
  return SpectrumSet(graph, cylinders);
}

bool bimodule_member(const Graph& graph, const AlgElement& a, const std::vector<AlgElement>& gens) {
  const SpectrumSet spectrum = generated_spectrum(graph, gens);
  const AlgElement n = normalize(graph, a);
  return std::all_of(n.terms().begin(), n.terms().end(),
                     [&](const auto& term) { return member(graph, term.first, spectrum); });
}

bool ck_in_analytic(const Graph& graph, const LocallyConstantFn& f, const CKMono& m) {
  const auto pieces = cocycle_pieces(graph, f, m);
  return std::all_of(pieces.begin(), pieces.end(), [](const auto& piece) { return sgn(piece.second) >= 0; });
}

CounterexampleReport counterexample_demo(const Graph& graph, const FinPath& loop,
                                         const std::vector<AlgElement>& elements) {
  if (loop.empty() || loop.range(graph) != loop.source()) {
    throw Error(ErrorCode::precondition, "counterexample needs a loop");
  }
  const VertexId v = loop.source();
  CounterexampleReport report;
  report.generator.add_term(CKMono::vertex(v), Coefficient(1L));
  report.generator.add_term(CKMono{loop, FinPath::empty_at(v)}, Coefficient(1L));
  report.generator = normalize(graph, report.generator);
  const EvPath x = EvPath::periodic(graph, loop.edges());
  report.unit = GroupoidPoint::unit(x);
  report.loop_point = GroupoidPoint::make(x, static_cast<std::int64_t>(loop.size()), x);
  for (const auto& h : elements) {
    if (!(eval(graph, h, report.unit) == eval(graph, h, report.loop_point))) report.values_agree = false;
  }
  const AlgElement pv(CKMono::vertex(v));
  report.spectrum_element_separates = bimodule_member(graph, pv, {report.generator}) &&
                                      !(eval(graph, pv, report.unit) == eval(graph, pv, report.loop_point));
  return report;
}

}  // namespace ckstar
