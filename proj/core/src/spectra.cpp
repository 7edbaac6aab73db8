#include "degmix/spectra.hpp"

#include <algorithm>
#include <numeric>

#include "degmix/errors.hpp"

namespace degmix {

std::vector<int> DegreeSpectraMatrix::degrees() const {
  std::vector<int> d;
  d.reserve(columns.size());
  for (const auto& c : columns) d.push_back(std::accumulate(c.begin(), c.end(), 0));
  return d;
}

DegreeSpectraMatrix degree_spectra(const Graph& g) {
  const auto deg = g.degrees();
  DegreeSpectraMatrix m;
  m.delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  m.columns.assign(g.vertex_count(), std::vector<int>(static_cast<std::size_t>(m.delta), 0));
  for (const Edge& e : g.edges()) {
    ++m.columns[e.a][static_cast<std::size_t>(deg[e.b] - 1)];
    ++m.columns[e.b][static_cast<std::size_t>(deg[e.a] - 1)];
  }
  return m;
}

std::vector<ComponentSequence> component_sequences(const DegreeSpectraMatrix& m) {
  if (m.delta < 0) throw InconsistentMatrix("negative delta");
  for (const auto& c : m.columns) {
    if (c.size() != static_cast<std::size_t>(m.delta)) throw InconsistentMatrix("column length differs from delta");
    for (int x : c) {
      if (x < 0) throw InconsistentMatrix("negative entry");
    }
  }
  const auto deg = m.degrees();
  std::map<int, std::vector<Vertex>> classes;
  for (std::size_t v = 0; v < deg.size(); ++v) classes[deg[v]].push_back(static_cast<Vertex>(v));
  for (std::size_t v = 0; v < deg.size(); ++v) {
    for (int i = 1; i <= m.delta; ++i) {
      if (m.columns[v][static_cast<std::size_t>(i - 1)] > 0 && !classes.count(i)) {
        throw InconsistentMatrix("vertex " + std::to_string(v) + " has neighbors of an absent degree");
      }
    }
  }
  const auto entry = [&](Vertex v, int i) { return m.columns[v][static_cast<std::size_t>(i - 1)]; };
  std::vector<ComponentSequence> out;
  for (auto hi = classes.rbegin(); hi != classes.rend(); ++hi) {
    const int i = hi->first;
    if (i == 0) continue;
    for (auto lo = hi; lo != classes.rend(); ++lo) {
      const int j = lo->first;
      if (j == 0) continue;
      ComponentSequence c;
      c.i = i;
      c.j = j;
      c.primary_vertices = hi->second;
      for (Vertex v : c.primary_vertices) c.primary.push_back(entry(v, j));
      std::int64_t a = std::accumulate(c.primary.begin(), c.primary.end(), std::int64_t{0});
      if (i != j) {
        c.secondary_vertices = lo->second;
        for (Vertex v : c.secondary_vertices) c.secondary.push_back(entry(v, i));
        const std::int64_t b = std::accumulate(c.secondary.begin(), c.secondary.end(), std::int64_t{0});
        if (a != b) throw InconsistentMatrix("edge totals between degree classes disagree");
      } else if (a % 2 != 0) {
        throw InconsistentMatrix("odd total inside a degree class");
      }
      if (a > 0) out.push_back(std::move(c));
    }
  }
  return out;
}

bool dsm_graphical(const DegreeSpectraMatrix& m) {
  std::vector<ComponentSequence> comps;
  try {
    comps = component_sequences(m);
  } catch (const InconsistentMatrix&) {
    return false;
  }
  return std::all_of(comps.begin(), comps.end(), [](const ComponentSequence& c) {
    return c.simple() ? erdos_gallai(c.primary) : gale_ryser({c.primary, c.secondary});
  });
}

CompositionPlan dsm_plan(const DegreeSpectraMatrix& m) {
  if (!dsm_graphical(m)) throw NotGraphical("degree spectra matrix is not graphical");
  // A vertex lies in several components, so the factors live on a disjoint
  // copy of the vertex set; dsm_fold maps assembled graphs back.
  std::vector<int> copy_degrees;
  std::vector<Factor> factors;
  for (const ComponentSequence& c : component_sequences(m)) {
    std::vector<int> d = c.primary;
    d.insert(d.end(), c.secondary.begin(), c.secondary.end());
    Factor f;
    f.problem = c.simple() ? RealizationProblem::make(GraphKind::simple, d, 0, {}, false)
                           : RealizationProblem::make(GraphKind::bipartite, d, c.primary.size(), {}, false);
    for (int x : d) {
      f.to_global.push_back(static_cast<Vertex>(copy_degrees.size()));
      copy_degrees.push_back(x);
    }
    factors.push_back(std::move(f));
  }
  return CompositionPlan(RealizationProblem::make(GraphKind::simple, copy_degrees, 0, {}, false), std::move(factors),
                         {});
}

Graph dsm_fold(const DegreeSpectraMatrix& m, const Graph& copy) {
  std::vector<Vertex> original;
  for (const ComponentSequence& c : component_sequences(m)) {
    original.insert(original.end(), c.primary_vertices.begin(), c.primary_vertices.end());
    original.insert(original.end(), c.secondary_vertices.begin(), c.secondary_vertices.end());
  }
  Graph g(m.vertex_count());
  for (const Edge& e : copy.edges()) g.add_edge(original[e.a], original[e.b]);
  return g;
}

Graph dsm_realize(const DegreeSpectraMatrix& m) {
  const CompositionPlan plan = dsm_plan(m);
  std::vector<Graph> parts;
  for (const Factor& f : plan.factors()) parts.push_back(f.problem.realize());
  return dsm_fold(m, plan.assemble(parts));
}

std::vector<Graph> dsm_sample(const DegreeSpectraMatrix& m, const SampleOptions& options) {
  std::vector<Graph> out;
  for (const Graph& copy : sample(dsm_plan(m), options)) out.push_back(dsm_fold(m, copy));
  return out;
}

std::map<std::pair<int, int>, std::int64_t> joint_degree_matrix(const DegreeSpectraMatrix& m) {
  std::map<std::pair<int, int>, std::int64_t> jdm;
  for (const ComponentSequence& c : component_sequences(m)) {
    const std::int64_t total = std::accumulate(c.primary.begin(), c.primary.end(), std::int64_t{0});
    jdm[{c.i, c.j}] = c.simple() ? total / 2 : total;
  }
  return jdm;
}

}  // namespace degmix
