#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "degmix/composition_plan.hpp"
#include "degmix/graph.hpp"
#include "degmix/problem.hpp"
#include "degmix/rng.hpp"

namespace degmix {

enum class SwapKind { c4, c6 };

/// ac, bd => bc, ad (C4), or the alternating-hexagon exchange
/// u1w4, u2w5, u3w6 => u1w5, u2w6, u3w4 whose three remaining pairs are
/// forbidden (C6).
struct SwapMove {
  SwapKind kind = SwapKind::c4;
  std::array<Edge, 3> removed{};
  std::array<Edge, 3> added{};

  std::size_t arity() const noexcept { return kind == SwapKind::c4 ? 2 : 3; }
  std::span<const Edge> removed_edges() const { return {removed.data(), arity()}; }
  std::span<const Edge> added_edges() const { return {added.data(), arity()}; }
  bool operator==(const SwapMove&) const = default;
};

/// Every valid swap from g; C6 moves only when the problem uses them.
std::vector<SwapMove> enumerate_swaps(const RealizationProblem& problem, const Graph& g);
void apply(Graph& g, const SwapMove& move);

/// Probability of each individual move under the lazy kernel. The stay
/// probability is whatever remains.
///
/// simple:        1/2 * 1/C(E,2) * 1/2  (two alternative matchings)
/// bipartite:     1/2 * 1/C(E,2)
/// with C6:       C4 as bipartite times 1/2; C6 = 1/2 * 1/2 * 3/(E(E-1)(E-2))
struct KernelWeights {
  double c4 = 0.0;
  double c6 = 0.0;
};
KernelWeights kernel_weights(const RealizationProblem& problem);

/// One swap chain. Exclusively owned; copies are independent chains.
class ChainState {
 public:
  ChainState(std::shared_ptr<const RealizationProblem> problem, Graph start, std::uint64_t seed);
  /// Starts from problem.realize(). Throws NotGraphical.
  ChainState(const RealizationProblem& problem, std::uint64_t seed);

  /// One lazy transition: stay with probability 1/2, else propose. Invalid
  /// proposals leave the state unchanged.
  void step();
  void run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }

  const Graph& graph() const noexcept { return graph_; }
  const RealizationProblem& problem() const noexcept { return *problem_; }
  std::uint64_t step_count() const noexcept { return steps_; }

 private:
  void propose_c4();
  void propose_c6();

  std::shared_ptr<const RealizationProblem> problem_;
  Graph graph_;
  Rng rng_;
  std::uint64_t steps_ = 0;
};

/// Each transition picks one coordinate uniformly and steps it.
class ProductChain {
 public:
  ProductChain(std::vector<ChainState> coordinates, std::uint64_t seed);

  void step();
  void run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
  }

  std::size_t size() const noexcept { return coordinates_.size(); }
  const ChainState& coordinate(std::size_t i) const { return coordinates_[i]; }
  std::uint64_t step_count() const noexcept { return steps_; }

 private:
  std::vector<ChainState> coordinates_;
  Rng rng_;
  std::uint64_t steps_ = 0;
};

struct SampleOptions {
  std::uint64_t burn_in = 1000;
  std::uint64_t thin = 100;
  std::size_t count = 1;
  std::uint64_t seed = 1;
};

/// Product chain over a composition plan. Factors with fewer than two edges
/// cannot move and are held fixed; every other factor is a coordinate.
/// Coordinate i is seeded with derive_seed(seed, i + 1), coordinate
/// selection with derive_seed(seed, 0).
class Sampler {
 public:
  Sampler(CompositionPlan plan, std::uint64_t seed);

  void step() { chain_.step(); }
  void run(std::uint64_t steps) { chain_.run(steps); }
  Graph current() const;
  std::vector<Graph> current_parts() const;
  const CompositionPlan& plan() const noexcept { return plan_; }
  std::size_t coordinate_count() const noexcept { return chain_.size(); }

  /// burn_in steps, then count samples each thin steps apart.
  std::vector<Graph> draw(std::uint64_t burn_in, std::uint64_t thin, std::size_t count);

 private:
  static ProductChain make_chain(const CompositionPlan& plan, std::uint64_t seed,
                                 std::vector<std::size_t>& mobile, std::vector<Graph>& frozen);

  CompositionPlan plan_;
  std::vector<std::size_t> mobile_;
  std::vector<Graph> parts_;
  ProductChain chain_;
};

std::vector<Graph> sample(const CompositionPlan& plan, const SampleOptions& options);
/// Factorized through the canonical decomposition unless factorize is false.
/// Throws NotGraphical.
std::vector<Graph> sample(const DegreeSequence& d, const SampleOptions& options, bool factorize = true);
std::vector<Graph> sample(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden,
                          const SampleOptions& options, bool factorize = true);
std::vector<Graph> sample(const DirectedDegreeSequence& dd, const SampleOptions& options, bool factorize = true);

}  // namespace degmix
