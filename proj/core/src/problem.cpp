#include "degmix/problem.hpp"

#include <algorithm>
#include <numeric>

#include "degmix/errors.hpp"

namespace degmix {

namespace {

BipartiteDegreeSequence split_classes(const std::vector<int>& degrees, std::size_t primary_count) {
  return {std::vector<int>(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(primary_count)),
          std::vector<int>(degrees.begin() + static_cast<std::ptrdiff_t>(primary_count), degrees.end())};
}

}  // namespace

RealizationProblem RealizationProblem::make(GraphKind kind, std::vector<int> degrees, std::size_t primary_count,
                                            std::vector<Edge> forbidden, bool c6_enabled) {
  RealizationProblem p;
  p.kind_ = kind;
  p.degrees_ = std::move(degrees);
  for (int d : p.degrees_) {
    if (d < 0) throw InvalidInput("negative degree");
  }
  const std::size_t n = p.degrees_.size();
  p.primary_count_ = kind == GraphKind::bipartite ? primary_count : 0;
  if (p.primary_count_ > n) throw InvalidInput("primary class larger than vertex set");
  p.forbidden_matrix_.assign(n * n, false);
  for (const Edge& e : forbidden) {
    if (e.b >= n) throw InvalidInput("forbidden pair out of range");
    if (kind == GraphKind::bipartite && !(e.a < p.primary_count_ && e.b >= p.primary_count_)) {
      throw InvalidInput("forbidden pair does not join the two classes");
    }
    if (p.forbidden_matrix_[e.a * n + e.b]) continue;
    p.forbidden_matrix_[e.a * n + e.b] = true;
    p.forbidden_matrix_[e.b * n + e.a] = true;
    p.forbidden_.push_back(e);
  }
  std::sort(p.forbidden_.begin(), p.forbidden_.end());
  p.edge_count_ = static_cast<std::size_t>(std::accumulate(p.degrees_.begin(), p.degrees_.end(), std::int64_t{0}) / 2);
  p.c6_enabled_ = c6_enabled;
  return p;
}

RealizationProblem RealizationProblem::simple(const DegreeSequence& d) {
  return make(GraphKind::simple, d.degrees(), 0, {}, false);
}

RealizationProblem RealizationProblem::bipartite(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden) {
  bd.validate();
  std::vector<int> degrees = bd.u;
  degrees.insert(degrees.end(), bd.w.begin(), bd.w.end());
  const auto offset = static_cast<Vertex>(bd.u.size());
  std::vector<Edge> global;
  for (const auto& [u, w] : forbidden.pairs()) {
    if (u >= bd.u.size() || w >= bd.w.size()) throw InvalidInput("forbidden pair out of range");
    global.emplace_back(static_cast<Vertex>(u), offset + static_cast<Vertex>(w));
  }
  return make(GraphKind::bipartite, std::move(degrees), bd.u.size(), std::move(global), true);
}

RealizationProblem RealizationProblem::directed(const DirectedDegreeSequence& dd) {
  return bipartite(gale_representation(dd), ForbiddenSet::diagonal(dd.out.size()));
}

bool RealizationProblem::is_forbidden(Vertex a, Vertex b) const {
  const std::size_t n = vertex_count();
  if (a >= n || b >= n) return false;
  return forbidden_matrix_[a * n + b];
}

bool RealizationProblem::is_chord(Vertex a, Vertex b) const {
  const std::size_t n = vertex_count();
  if (a == b || a >= n || b >= n) return false;
  if (kind_ == GraphKind::bipartite && ((a < primary_count_) == (b < primary_count_))) return false;
  return !forbidden_matrix_[a * n + b];
}

std::vector<Edge> RealizationProblem::chords() const {
  std::vector<Edge> out;
  const auto n = static_cast<Vertex>(vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (is_chord(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool RealizationProblem::graphical() const {
  if (kind_ == GraphKind::simple) return erdos_gallai(degrees_);
  ForbiddenSet local;
  for (const Edge& e : forbidden_) local.insert(e.a, e.b - primary_count_);
  return restricted_bipartite_graphical(split_classes(degrees_, primary_count_), local);
}

Graph RealizationProblem::realize() const {
  if (kind_ == GraphKind::simple) return degmix::realize(DegreeSequence(degrees_));
  ForbiddenSet local;
  for (const Edge& e : forbidden_) local.insert(e.a, e.b - primary_count_);
  return degmix::realize(split_classes(degrees_, primary_count_), local);
}

bool RealizationProblem::is_realization(const Graph& g) const {
  if (g.vertex_count() != vertex_count()) return false;
  for (const Edge& e : g.edges()) {
    if (!is_chord(e.a, e.b)) return false;
  }
  return g.degrees() == degrees_;
}

}  // namespace degmix
