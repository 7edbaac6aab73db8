#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "degmix/composition_plan.hpp"
#include "degmix/graph.hpp"
#include "degmix/swap_chain.hpp"

namespace degmix {

/// columns[v][i - 1] is the number of neighbors of v with degree i, for
/// i = 1..delta.
struct DegreeSpectraMatrix {
  int delta = 0;
  std::vector<std::vector<int>> columns;

  std::size_t vertex_count() const noexcept { return columns.size(); }
  /// Column sums.
  std::vector<int> degrees() const;
  bool operator==(const DegreeSpectraMatrix&) const = default;
};

/// Edges between the degree-i and degree-j vertices, i >= j. For i > j the
/// primary class is the degree-i vertices with their degree-j neighbor
/// counts, the secondary class the reverse. For i == j only the primary class
/// is used and holds a simple degree sequence.
struct ComponentSequence {
  int i = 0;
  int j = 0;
  std::vector<Vertex> primary_vertices;
  std::vector<Vertex> secondary_vertices;
  std::vector<int> primary;
  std::vector<int> secondary;

  bool simple() const noexcept { return i == j; }
};

DegreeSpectraMatrix degree_spectra(const Graph& g);
/// One sequence per degree-class pair with at least one edge, ordered by
/// (i, j) descending. Throws InconsistentMatrix.
std::vector<ComponentSequence> component_sequences(const DegreeSpectraMatrix& m);
/// Every component graphical; false on an inconsistent matrix.
bool dsm_graphical(const DegreeSpectraMatrix& m);
/// Union of independently realized components. Throws NotGraphical.
Graph dsm_realize(const DegreeSpectraMatrix& m);
/// Components as factors on a disjoint copy of the vertex set, one block per
/// component in component_sequences order, with no forced edges.
/// Throws NotGraphical.
CompositionPlan dsm_plan(const DegreeSpectraMatrix& m);
/// Maps a graph on the dsm_plan copy back onto the matrix's vertices.
Graph dsm_fold(const DegreeSpectraMatrix& m, const Graph& copy);
/// Product chain over the components. Throws NotGraphical.
std::vector<Graph> dsm_sample(const DegreeSpectraMatrix& m, const SampleOptions& options);
/// Edge counts between degree classes, keyed (i, j) with i >= j.
std::map<std::pair<int, int>, std::int64_t> joint_degree_matrix(const DegreeSpectraMatrix& m);

}  // namespace degmix
