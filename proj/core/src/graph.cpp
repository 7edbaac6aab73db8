#include "degmix/graph.hpp"

#include <algorithm>
#include <string>

#include "degmix/errors.hpp"

namespace degmix {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges) : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.a, e.b);
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
  if (a >= vertex_count_ || b >= vertex_count_) throw InvalidInput("edge endpoint out of range");
  const Edge e(a, b);
  auto [it, inserted] = index_.emplace(key(e), edges_.size());
  if (!inserted) throw InvalidInput("duplicate edge");
  edges_.push_back(e);
}

void Graph::remove_edge(Vertex a, Vertex b) {
  auto it = index_.find(key(Edge(a, b)));
  if (it == index_.end()) return;
  const std::size_t slot = it->second;
  index_.erase(it);
  if (slot + 1 != edges_.size()) {
    edges_[slot] = edges_.back();
    index_[key(edges_[slot])] = slot;
  }
  edges_.pop_back();
}

void Graph::replace_edge(std::size_t i, Edge e) {
  index_.erase(key(edges_[i]));
  edges_[i] = e;
  index_[key(e)] = i;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_count_ == other.vertex_count_ && sorted_edges() == other.sorted_edges();
}

}  // namespace degmix
