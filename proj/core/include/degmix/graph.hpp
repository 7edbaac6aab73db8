#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace degmix {

using Vertex = std::uint32_t;

/// Undirected vertex pair, normalized so that a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple labeled graph with O(1) edge lookup and O(1) edge replacement, the
/// state a swap chain walks over. Bipartite and Gale-form directed
/// realizations use the same type with class-segregated vertex ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  bool has_edge(Vertex a, Vertex b) const { return index_.count(key(Edge(a, b))) != 0; }
  /// Throws InvalidInput on loops, duplicates, or out-of-range ids.
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  /// Overwrites edge slot i in place; the new pair must be absent.
  void replace_edge(std::size_t i, Edge e);

  std::vector<int> degrees() const;
  std::vector<std::vector<Vertex>> adjacency() const;
  /// Edges in ascending order; two graphs are equal iff these agree.
  std::vector<Edge> sorted_edges() const;

  bool operator==(const Graph& other) const;

 private:
  static std::uint64_t key(Edge e) noexcept {
    return (static_cast<std::uint64_t>(e.a) << 32) | e.b;
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace degmix
