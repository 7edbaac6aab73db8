#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "degmix/decomposition.hpp"
#include "degmix/graph.hpp"
#include "degmix/problem.hpp"

namespace degmix {

/// One coordinate of a composed realization space: its own problem on local
/// ids 0..k-1, and where each local vertex sits in the whole graph.
struct Factor {
  RealizationProblem problem;
  std::vector<Vertex> to_global;
};

/// Realizations of `whole` correspond one-to-one with tuples of factor
/// realizations: each whole realization is the union of the factor parts and
/// the forced edges, which are present in every realization and never swapped.
class CompositionPlan {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// Throws InvalidInput when factor degrees plus forced edges do not add up
  /// to the whole degrees, or when factors overlap.
  CompositionPlan(RealizationProblem whole, std::vector<Factor> factors, std::vector<Edge> forced);

  /// Single factor equal to the whole problem.
  static CompositionPlan trivial(RealizationProblem whole);

  /// Canonical decomposition: each split factor walks its splitted bipartite
  /// part; the tail is a simple problem. Throws NotGraphical.
  static CompositionPlan for_simple(const DegreeSequence& d);
  /// Splitted bipartite decomposition with u as the primary class.
  static CompositionPlan for_bipartite(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden = {});
  /// Gale representation decomposed as a restricted splitted bipartite sequence.
  static CompositionPlan for_directed(const DirectedDegreeSequence& dd);

  /// ⟨U,W⟩ ∘ G with the split factor as a simple problem on U ∪ W.
  static CompositionPlan compose(const SplitSequence& s, const DegreeSequence& g);
  /// Ψ⁻¹(s) ∘ G with the first factor walking the splitted bipartite part.
  static CompositionPlan compose(const SplittedBipartiteSequence& s, const DegreeSequence& g);
  static CompositionPlan compose(const SplittedBipartiteSequence& a, const SplittedBipartiteSequence& b);
  static CompositionPlan compose(const RestrictedSplittedSequence& a, const RestrictedSplittedSequence& b);

  const RealizationProblem& whole() const noexcept { return whole_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  const std::vector<Edge>& forced_edges() const noexcept { return forced_; }

  std::size_t factor_of(Vertex v) const { return owner_[v]; }
  Vertex local_id(Vertex v) const { return local_[v]; }

  Graph assemble(std::span<const Graph> parts) const;
  /// Factor parts of a whole realization: edges inside a factor that are
  /// chords of that factor's problem.
  std::vector<Graph> restrict(const Graph& whole) const;

 private:
  RealizationProblem whole_;
  std::vector<Factor> factors_;
  std::vector<Edge> forced_;
  std::vector<std::size_t> owner_;
  std::vector<Vertex> local_;
};

}  // namespace degmix
