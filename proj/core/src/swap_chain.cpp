#include "degmix/swap_chain.hpp"

#include "degmix/errors.hpp"

namespace degmix {

namespace {

bool distinct4(const Edge& x, const Edge& y) { return x.a != y.a && x.a != y.b && x.b != y.a && x.b != y.b; }

bool free_chord(const RealizationProblem& p, const Graph& g, Vertex a, Vertex b) {
  return p.is_chord(a, b) && !g.has_edge(a, b);
}

// Edges of a bipartite problem are stored with the U end first.
bool c6_valid(const RealizationProblem& p, const Graph& g, const Edge& e1, const Edge& e2, const Edge& e3) {
  if (e1.a == e2.a || e1.a == e3.a || e2.a == e3.a) return false;
  if (e1.b == e2.b || e1.b == e3.b || e2.b == e3.b) return false;
  return free_chord(p, g, e1.a, e2.b) && free_chord(p, g, e2.a, e3.b) && free_chord(p, g, e3.a, e1.b) &&
         p.is_forbidden(e1.a, e3.b) && p.is_forbidden(e2.a, e1.b) && p.is_forbidden(e3.a, e2.b);
}

SwapMove c6_move(const Edge& e1, const Edge& e2, const Edge& e3) {
  SwapMove m;
  m.kind = SwapKind::c6;
  m.removed = {e1, e2, e3};
  m.added = {Edge(e1.a, e2.b), Edge(e2.a, e3.b), Edge(e3.a, e1.b)};
  return m;
}

}  // namespace

std::vector<SwapMove> enumerate_swaps(const RealizationProblem& problem, const Graph& g) {
  std::vector<SwapMove> moves;
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& x = edges[i];
      const Edge& y = edges[j];
      if (!distinct4(x, y)) continue;
      const Edge alternatives[2][2] = {{Edge(x.a, y.a), Edge(x.b, y.b)}, {Edge(x.a, y.b), Edge(x.b, y.a)}};
      for (const auto& alt : alternatives) {
        if (free_chord(problem, g, alt[0].a, alt[0].b) && free_chord(problem, g, alt[1].a, alt[1].b)) {
          SwapMove mv;
          mv.removed = {x, y, Edge{}};
          mv.added = {alt[0], alt[1], Edge{}};
          moves.push_back(mv);
        }
      }
    }
  }
  if (!problem.uses_c6()) return moves;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (c6_valid(problem, g, edges[i], edges[j], edges[k])) moves.push_back(c6_move(edges[i], edges[j], edges[k]));
        if (c6_valid(problem, g, edges[i], edges[k], edges[j])) moves.push_back(c6_move(edges[i], edges[k], edges[j]));
      }
    }
  }
  return moves;
}

void apply(Graph& g, const SwapMove& move) {
  for (const Edge& e : move.removed_edges()) g.remove_edge(e.a, e.b);
  for (const Edge& e : move.added_edges()) g.add_edge(e.a, e.b);
}

KernelWeights kernel_weights(const RealizationProblem& problem) {
  const double E = static_cast<double>(problem.edge_count());
  KernelWeights w;
  const double pairs = E * (E - 1.0) / 2.0;
  const double triples = E * (E - 1.0) * (E - 2.0);
  if (problem.uses_c6()) {
    if (pairs > 0) w.c4 = 0.25 / pairs;
    if (triples > 0) w.c6 = 0.25 * 3.0 / triples;
  } else if (pairs > 0) {
    w.c4 = (problem.kind() == GraphKind::simple ? 0.25 : 0.5) / pairs;
  }
  return w;
}

ChainState::ChainState(std::shared_ptr<const RealizationProblem> problem, Graph start, std::uint64_t seed)
    : problem_(std::move(problem)), graph_(std::move(start)), rng_(seed) {
  if (!problem_->is_realization(graph_)) throw InvalidInput("start graph is not a realization");
}

ChainState::ChainState(const RealizationProblem& problem, std::uint64_t seed)
    : ChainState(std::make_shared<const RealizationProblem>(problem), problem.realize(), seed) {}

void ChainState::step() {
  ++steps_;
  if (rng_.coin()) return;
  if (problem_->uses_c6() && rng_.coin()) {
    propose_c6();
  } else {
    propose_c4();
  }
}

void ChainState::propose_c4() {
  const std::size_t m = graph_.edge_count();
  if (m < 2) return;
  const std::size_t i = rng_.index(m);
  std::size_t j = rng_.index(m - 1);
  if (j >= i) ++j;
  const Edge x = graph_.edge(i);
  const Edge y = graph_.edge(j);
  // Simple graphs have two other matchings on the four endpoints; a
  // bipartite pair has one, and it is always the crossed one.
  const bool crossed = problem_->kind() == GraphKind::bipartite || rng_.coin();
  if (!distinct4(x, y)) return;
  const Edge n1 = crossed ? Edge(x.a, y.b) : Edge(x.a, y.a);
  const Edge n2 = crossed ? Edge(x.b, y.a) : Edge(x.b, y.b);
  if (!free_chord(*problem_, graph_, n1.a, n1.b) || !free_chord(*problem_, graph_, n2.a, n2.b)) return;
  graph_.replace_edge(i, n1);
  graph_.replace_edge(j, n2);
}

void ChainState::propose_c6() {
  const std::size_t m = graph_.edge_count();
  if (m < 3) return;
  const std::size_t i = rng_.index(m);
  std::size_t j = rng_.index(m - 1);
  if (j >= i) ++j;
  std::size_t k = rng_.index(m - 2);
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  if (k >= lo) ++k;
  if (k >= hi) ++k;
  const Edge e1 = graph_.edge(i);
  const Edge e2 = graph_.edge(j);
  const Edge e3 = graph_.edge(k);
  if (!c6_valid(*problem_, graph_, e1, e2, e3)) return;
  graph_.replace_edge(i, Edge(e1.a, e2.b));
  graph_.replace_edge(j, Edge(e2.a, e3.b));
  graph_.replace_edge(k, Edge(e3.a, e1.b));
}

ProductChain::ProductChain(std::vector<ChainState> coordinates, std::uint64_t seed)
    : coordinates_(std::move(coordinates)), rng_(seed) {}

void ProductChain::step() {
  ++steps_;
  if (coordinates_.empty()) return;
  coordinates_[rng_.index(coordinates_.size())].step();
}

ProductChain Sampler::make_chain(const CompositionPlan& plan, std::uint64_t seed, std::vector<std::size_t>& mobile,
                                 std::vector<Graph>& frozen) {
  std::vector<ChainState> coords;
  for (std::size_t f = 0; f < plan.factors().size(); ++f) {
    const RealizationProblem& p = plan.factors()[f].problem;
    Graph start = p.realize();
    if (start.edge_count() >= 2) {
      coords.emplace_back(std::make_shared<const RealizationProblem>(p), std::move(start),
                          derive_seed(seed, coords.size() + 1));
      mobile.push_back(f);
      frozen.emplace_back();
    } else {
      frozen.push_back(std::move(start));
    }
  }
  return ProductChain(std::move(coords), derive_seed(seed, 0));
}

Sampler::Sampler(CompositionPlan plan, std::uint64_t seed)
    : plan_(std::move(plan)), chain_(make_chain(plan_, seed, mobile_, parts_)) {}

std::vector<Graph> Sampler::current_parts() const {
  std::vector<Graph> parts = parts_;
  for (std::size_t c = 0; c < mobile_.size(); ++c) parts[mobile_[c]] = chain_.coordinate(c).graph();
  return parts;
}

Graph Sampler::current() const {
  const auto parts = current_parts();
  return plan_.assemble(parts);
}

std::vector<Graph> Sampler::draw(std::uint64_t burn_in, std::uint64_t thin, std::size_t count) {
  std::vector<Graph> out;
  out.reserve(count);
  run(burn_in);
  for (std::size_t s = 0; s < count; ++s) {
    if (s > 0) run(thin);
    out.push_back(current());
  }
  return out;
}

std::vector<Graph> sample(const CompositionPlan& plan, const SampleOptions& options) {
  Sampler sampler(plan, options.seed);
  return sampler.draw(options.burn_in, options.thin, options.count);
}

std::vector<Graph> sample(const DegreeSequence& d, const SampleOptions& options, bool factorize) {
  if (!erdos_gallai(d)) throw NotGraphical("degree sequence is not graphical");
  return sample(factorize ? CompositionPlan::for_simple(d) : CompositionPlan::trivial(RealizationProblem::simple(d)),
                options);
}

std::vector<Graph> sample(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden,
                          const SampleOptions& options, bool factorize) {
  RealizationProblem whole = RealizationProblem::bipartite(bd, forbidden);
  if (!whole.graphical()) throw NotGraphical("bipartite sequence is not graphical");
  return sample(factorize ? CompositionPlan::for_bipartite(bd, forbidden) : CompositionPlan::trivial(std::move(whole)),
                options);
}

std::vector<Graph> sample(const DirectedDegreeSequence& dd, const SampleOptions& options, bool factorize) {
  RealizationProblem whole = RealizationProblem::directed(dd);
  if (!whole.graphical()) throw NotGraphical("directed sequence is not graphical");
  return sample(factorize ? CompositionPlan::for_directed(dd) : CompositionPlan::trivial(std::move(whole)), options);
}

}  // namespace degmix
