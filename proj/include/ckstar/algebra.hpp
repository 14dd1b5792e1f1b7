#pragma once

#include "ckstar/coefficient.hpp"
#include "ckstar/monomial.hpp"

#include <map>

namespace ckstar {

/// Finite linear combination of CK monomials. Construction does not
/// normalise; every operation below except add_term returns normal form.
class AlgElement {
 public:
  using Terms = std::map<CKMono, Coefficient>;

  AlgElement() = default;
  explicit AlgElement(const CKMono& m, const Coefficient& c = Coefficient(1L)) { add_term(m, c); }

  /// Adds c * m, dropping the entry if it cancels.
  void add_term(const CKMono& m, const Coefficient& c);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const AlgElement&, const AlgElement&) = default;

 private:
  Terms terms_;
};

/// Sum of all vertex projections.
AlgElement identity(const Graph& graph);

/// Unique normal form. Within each degree all terms sit at one common level
/// (|beta|), which is the smallest level at which that degree's part is
/// expressible; zero coefficients are dropped. Consequently two elements
/// are equal as functions on the groupoid iff their normal forms are equal.
AlgElement normalize(const Graph& graph, const AlgElement& a);
/// Normal form, then every term below `level` refined down to it. Terms of a
/// common degree keep pairwise disjoint cylinders.
AlgElement refine_to_level(const Graph& graph, const AlgElement& a, std::size_t level);

AlgElement add(const Graph& graph, const AlgElement& a, const AlgElement& b);
AlgElement sub(const Graph& graph, const AlgElement& a, const AlgElement& b);
AlgElement scale(const Graph& graph, const AlgElement& a, const Coefficient& c);
AlgElement mul(const Graph& graph, const AlgElement& a, const AlgElement& b);
AlgElement adjoint(const Graph& graph, const AlgElement& a);
bool equal(const Graph& graph, const AlgElement& a, const AlgElement& b);

/// Degree-m part.
AlgElement phi_m(const Graph& graph, const AlgElement& a, std::int64_t m);
/// Degrees present in the normal form, ascending.
std::vector<std::int64_t> degrees(const Graph& graph, const AlgElement& a);
/// gamma_z with z = exp(2 pi i j / n); throws Error(unsupported_root_order)
/// unless n is 1, 2 or 4.
AlgElement gauge(const Graph& graph, const AlgElement& a, int n, long long j);

/// Value of a at g as a function on the groupoid.
Coefficient eval(const Graph& graph, const AlgElement& a, const GroupoidPoint& g);

}  // namespace ckstar
