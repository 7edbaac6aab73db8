#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "degmix/composition_plan.hpp"
#include "degmix/graph.hpp"
#include "degmix/problem.hpp"
#include "degmix/swap_chain.hpp"

namespace degmix {

struct EnumerationLimits {
  /// Problems with more chords than this are refused. Values above 64 are
  /// treated as 64, the width of a realization mask.
  std::size_t max_chords = 24;
  std::size_t max_realizations = 2'000'000;

  std::size_t chord_cap() const noexcept { return max_chords < 64 ? max_chords : 64; }
};

/// All realizations of one problem, each stored as a bit mask over the
/// ascending chord list. Masks are sorted ascending.
class RealizationSet {
 public:
  RealizationSet(RealizationProblem problem, std::vector<Edge> chords, std::vector<std::uint64_t> masks);

  const RealizationProblem& problem() const noexcept { return problem_; }
  const std::vector<Edge>& chords() const noexcept { return chords_; }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }
  std::size_t size() const noexcept { return masks_.size(); }

  std::optional<std::size_t> index_of(std::uint64_t mask) const;
  std::optional<std::size_t> index_of(const Graph& g) const;
  /// Throws InvalidInput when g has an edge that is not a chord.
  std::uint64_t encode(const Graph& g) const;
  Graph graph(std::size_t i) const;
  /// Chord index of (a, b), or -1.
  int chord_index(Vertex a, Vertex b) const { return chord_index_[a * problem_.vertex_count() + b]; }

 private:
  RealizationProblem problem_;
  std::vector<Edge> chords_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> chord_index_;
};

/// Depth-first search over chords with degree pruning. Throws TooLarge when
/// a limit is exceeded; an ungraphical problem yields an empty set.
RealizationSet enumerate_realizations(const RealizationProblem& problem, const EnumerationLimits& limits = {});

struct Transition {
  std::size_t to = 0;
  double probability = 0.0;
  SwapKind kind = SwapKind::c4;
};

/// The swap chain restricted to the realization set: one transition per
/// valid move, weighted by the kernel.
class RealizationGraph {
 public:
  RealizationGraph(RealizationSet states, std::vector<std::vector<Transition>> out);

  const RealizationSet& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<Transition>& transitions(std::size_t i) const { return out_[i]; }
  double stay_probability(std::size_t i) const { return stay_[i]; }
  /// Undirected adjacencies {i, j} with i < j.
  std::size_t edge_count() const noexcept { return edge_count_; }
  Eigen::MatrixXd transition_matrix() const;
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

 private:
  RealizationSet states_;
  std::vector<std::vector<Transition>> out_;
  std::vector<double> stay_;
  std::size_t edge_count_ = 0;
};

RealizationGraph build_realization_graph(const RealizationProblem& problem, const EnumerationLimits& limits = {});
/// Valid moves from one realization, computed on masks.
std::vector<SwapMove> mask_moves(const RealizationSet& set, std::uint64_t mask);

struct SpectralReport {
  std::size_t realization_count = 0;
  /// Second largest eigenvalue; 0 for a single realization.
  double lambda2 = 0.0;
  double relaxation_time = 1.0;
  /// Exact over all subsets when at most exact_conductance_limit states.
  std::optional<double> conductance;
  bool trivial = false;
  /// phi^2 / 2 <= 1 - lambda2 <= 2 phi, checked when the conductance is known.
  bool cheeger_holds = true;
};

inline constexpr std::size_t exact_conductance_limit = 20;

/// Largest eigenvalue below the top one of a symmetric matrix.
double second_eigenvalue(const Eigen::MatrixXd& symmetric);
/// min over 0 < |S| <= N/2 of sum_{x in S, y not in S} P(x, y) / |S|.
double exact_conductance(const Eigen::MatrixXd& transition);
/// Throws Disconnected when the chain is not irreducible.
SpectralReport spectral_report(const RealizationGraph& rg);

/// Total variation distance to uniform after exactly k steps from `start`.
double exact_tv_distance(const RealizationGraph& rg, std::size_t start, std::uint64_t steps);
/// TV between uniform and the occupancy of one simulated chain over `steps`
/// steps, starting at problem.realize().
double empirical_tv_distance(const RealizationGraph& rg, std::uint64_t steps, std::uint64_t seed);
/// Exact k-step row from problem.realize() when seed is empty, otherwise the
/// empirical occupancy of a chain seeded with it. Throws TooLarge.
double tv_distance_audit(const RealizationProblem& problem, std::uint64_t steps, std::optional<std::uint64_t> seed,
                         const EnumerationLimits& limits = {});

struct ProductCheck {
  std::size_t whole_count = 0;
  std::vector<std::size_t> factor_counts;
  std::size_t whole_edges = 0;
  /// sum_i |E(G_i)| prod_{j != i} |V(G_j)|
  std::size_t expected_edges = 0;
  /// Whole-kernel probability over factor-kernel probability, per factor and
  /// move kind; constant on every move.
  std::vector<double> c4_ratio;
  std::vector<double> c6_ratio;
};

/// Enumerates the whole space and every factor space and confirms the
/// realization graph is the Cartesian product. Throws ProductMismatch with a
/// witness on the first discrepancy.
ProductCheck verify_cartesian_product(const CompositionPlan& plan, const EnumerationLimits& limits = {});

struct LocalityReport {
  std::size_t realizations = 0;
  std::size_t moves = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

/// Every swap of every whole realization removes and adds edges inside one
/// factor, as chords of that factor.
LocalityReport check_swap_locality(const CompositionPlan& plan, const EnumerationLimits& limits = {});

struct ProductSpectrum {
  std::vector<double> factor_lambda2;
  /// (K - 1 + max_i lambda2_i) / K
  double predicted = 0.0;
  double measured = 0.0;
};

/// Transition matrix of the product chain that picks one of the K factor
/// chains uniformly; states are tuples with the last factor varying fastest.
Eigen::MatrixXd product_transition_matrix(const std::vector<Eigen::MatrixXd>& factors);

/// Second eigenvalue of the product chain over the plan's factors (uniform
/// coordinate choice) against the closed form.
ProductSpectrum product_chain_spectrum(const CompositionPlan& plan, const EnumerationLimits& limits = {});

}  // namespace degmix
