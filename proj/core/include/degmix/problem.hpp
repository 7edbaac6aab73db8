#pragma once

#include <cstddef>
#include <vector>

#include "degmix/graph.hpp"
#include "degmix/sequences.hpp"

namespace degmix {

enum class GraphKind { simple, bipartite };

/// One realization space: a vertex set, a target degree per vertex, and the
/// chords (pairs allowed to carry an edge). Bipartite problems place the
/// primary class U at ids [0, primary_count) and W after it; forbidden pairs
/// are stored by global id.
class RealizationProblem {
 public:
  RealizationProblem() = default;

  static RealizationProblem simple(const DegreeSequence& d);
  static RealizationProblem bipartite(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden = {});
  /// Gale representation with the diagonal 1-factor forbidden; C6 swaps on.
  static RealizationProblem directed(const DirectedDegreeSequence& dd);

  GraphKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return degrees_.size(); }
  std::size_t primary_count() const noexcept { return primary_count_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool is_forbidden(Vertex a, Vertex b) const;
  bool is_chord(Vertex a, Vertex b) const;
  /// All chords in ascending order.
  std::vector<Edge> chords() const;

  bool c6_enabled() const noexcept { return c6_enabled_; }
  void set_c6_enabled(bool on) noexcept { c6_enabled_ = on; }
  /// The directed kernel (C4 and C6 proposals) is in effect.
  bool uses_c6() const noexcept { return c6_enabled_ && !forbidden_.empty(); }
  const std::vector<Edge>& forbidden() const noexcept { return forbidden_; }

  bool graphical() const;
  /// Throws NotGraphical when no realization exists.
  Graph realize() const;
  /// Degree recount plus chord check.
  bool is_realization(const Graph& g) const;

  /// Problem on the given vertices with the given degrees; chords are those of
  /// `kind` between the listed vertices, minus `forbidden`. Used by
  /// composition plans for factors.
  static RealizationProblem make(GraphKind kind, std::vector<int> degrees, std::size_t primary_count,
                                 std::vector<Edge> forbidden, bool c6_enabled);

 private:
  GraphKind kind_ = GraphKind::simple;
  std::vector<int> degrees_;
  std::size_t primary_count_ = 0;
  std::vector<Edge> forbidden_;
  std::vector<bool> forbidden_matrix_;
  std::size_t edge_count_ = 0;
  bool c6_enabled_ = false;
};

}  // namespace degmix
