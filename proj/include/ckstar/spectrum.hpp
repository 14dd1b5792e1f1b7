#pragma once

#include "ckstar/algebra.hpp"

#include <set>

namespace ckstar {

using Cylinder = CKMono;

/// Finite union of cylinders Z(alpha, beta), stored as the set of maximal
/// cylinders contained in the union. That set is an antichain and depends
/// only on the union, so equal unions compare equal.
class SpectrumSet {
 public:
  SpectrumSet() = default;
  SpectrumSet(const Graph& graph, const std::vector<Cylinder>& cylinders);

  const std::set<Cylinder>& cylinders() const& { return cylinders_; }
  std::set<Cylinder> cylinders() && { return std::move(cylinders_); }
  bool empty() const { return cylinders_.empty(); }
  std::size_t size() const { return cylinders_.size(); }

  friend bool operator==(const SpectrumSet&, const SpectrumSet&) = default;

 private:
  std::set<Cylinder> cylinders_;
};

SpectrumSet unite(const Graph& graph, const SpectrumSet& a, const SpectrumSet& b);

/// Z(m) is contained in the union.
bool member(const Graph& graph, const CKMono& m, const SpectrumSet& s);
/// g lies in the union.
bool contains_point(const Graph& graph, const SpectrumSet& s, const GroupoidPoint& g);

/// Union of Z(alpha, beta) over the terms of the normal form.
SpectrumSet support_spectrum(const Graph& graph, const AlgElement& a);

}  // namespace ckstar
