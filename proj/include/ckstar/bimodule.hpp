#pragma once

#include "ckstar/cocycle.hpp"
#include "ckstar/spectrum.hpp"

namespace ckstar {

/// Union of the supports of the graded parts of the generators.
SpectrumSet generated_spectrum(const Graph& graph, const std::vector<AlgElement>& gens);

/// Every graded part of a is supported in generated_spectrum(gens), i.e. a
/// lies in the gauge-invariant bimodule the generators span.
bool bimodule_member(const Graph& graph, const AlgElement& a, const std::vector<AlgElement>& gens);

/// c_f >= 0 on all of Z(m).
bool ck_in_analytic(const Graph& graph, const LocallyConstantFn& f, const CKMono& m);

struct CounterexampleReport {
  /// P_v + S_loop.
  AlgElement generator;
  /// x = loop^inf.
  GroupoidPoint unit;
  GroupoidPoint loop_point;
  /// h(x, 0, x) = h(x, k, x) for every supplied h.
  bool values_agree = true;
  /// P_v is supported in the spectrum of the bimodule yet separates the two
  /// points.
  bool spectrum_element_separates = false;
};

/// Evaluates elements of the bimodule generated by P_v + S_loop at
/// (x, 0, x) and (x, |loop|, x) for x = loop^inf. Throws Error(precondition)
/// unless `loop` is a loop.
CounterexampleReport counterexample_demo(const Graph& graph, const FinPath& loop,
                                         const std::vector<AlgElement>& elements);

}  // namespace ckstar
