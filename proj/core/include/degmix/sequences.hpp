#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace degmix {

class Graph;

/// Degree sequence of a simple graph in the caller's vertex labeling, with the
/// non-increasing canonical view kept alongside as a stable permutation.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Throws InvalidInput on a negative entry.
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  int operator[](std::size_t i) const { return degrees_[i]; }

  /// order()[k] is the original label of the vertex at canonical position k.
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::vector<int> canonical() const;

  int max_degree() const noexcept;
  std::int64_t degree_sum() const noexcept;

  bool operator==(const DegreeSequence& other) const { return degrees_ == other.degrees_; }

 private:
  std::vector<int> degrees_;
  std::vector<std::size_t> order_;
};

/// Degrees of the two classes U and W of a bipartite graph.
struct BipartiteDegreeSequence {
  std::vector<int> u;
  std::vector<int> w;

  /// Throws InvalidInput on a negative entry.
  void validate() const;
  bool operator==(const BipartiteDegreeSequence&) const = default;
};

/// Out- and in-degrees over the same vertex indexing.
struct DirectedDegreeSequence {
  std::vector<int> out;
  std::vector<int> in;

  /// Throws InvalidInput on negative entries or unequal lengths.
  void validate() const;
  bool operator==(const DirectedDegreeSequence&) const = default;
};

/// Excluded (u, w) chords of a bipartite problem, 0-based class indices.
class ForbiddenSet {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  ForbiddenSet() = default;
  ForbiddenSet(std::initializer_list<Pair> pairs) : pairs_(pairs) {}
  explicit ForbiddenSet(std::set<Pair> pairs) : pairs_(std::move(pairs)) {}

  /// The diagonal 1-factor {(i, i)} of the Gale representation.
  static ForbiddenSet diagonal(std::size_t n);

  void insert(std::size_t u, std::size_t w) { pairs_.emplace(u, w); }
  bool contains(std::size_t u, std::size_t w) const { return pairs_.count({u, w}) != 0; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::set<Pair>& pairs() const noexcept { return pairs_; }

  /// At most one pair per u-index and per w-index.
  bool is_partial_matching() const;

  bool operator==(const ForbiddenSet&) const = default;

 private:
  std::set<Pair> pairs_;
};

bool erdos_gallai(std::span<const int> degrees);
bool erdos_gallai(const DegreeSequence& d);
bool gale_ryser(const BipartiteDegreeSequence& bd);
/// Max-flow feasibility on the chord bipartite graph.
bool restricted_bipartite_graphical(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden);
bool directed_graphical(const DirectedDegreeSequence& dd);

/// Bipartite (out-copies, in-copies) representation of a directed sequence.
BipartiteDegreeSequence gale_representation(const DirectedDegreeSequence& dd);

/// Havel-Hakimi realization on vertices 0..n-1 in the caller's labeling.
Graph realize(const DegreeSequence& d);
/// Realization on U = 0..|U|-1, W = |U|..|U|+|W|-1 avoiding the forbidden chords.
Graph realize(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden = {});
/// Realization in Gale form: arc x->y is the edge (x, n + y).
Graph realize(const DirectedDegreeSequence& dd);

}  // namespace degmix
