#include "degmix/realization_space.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "degmix/errors.hpp"

namespace degmix {

namespace {

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Edge& e : g.sorted_edges()) {
    os << (first ? "" : " ") << e.a << "-" << e.b;
    first = false;
  }
  os << "}";
  return os.str();
}

class Enumerator {
 public:
  Enumerator(const RealizationProblem& p, const std::vector<Edge>& chords, std::size_t cap)
      : chords_(chords), residual_(p.degrees()), remaining_(p.vertex_count(), 0), cap_(cap) {
    for (const Edge& e : chords_) {
      ++remaining_[e.a];
      ++remaining_[e.b];
    }
  }

  std::vector<std::uint64_t> run() {
    for (std::size_t v = 0; v < residual_.size(); ++v) {
      if (residual_[v] > remaining_[v]) return {};
    }
    visit(0, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void visit(std::size_t k, std::uint64_t mask) {
    if (k == chords_.size()) {
      out_.push_back(mask);
      if (out_.size() > cap_) throw TooLarge("realization count exceeds the configured cap");
      return;
    }
    const Edge e = chords_[k];
    --remaining_[e.a];
    --remaining_[e.b];
    if (residual_[e.a] > 0 && residual_[e.b] > 0) {
      --residual_[e.a];
      --residual_[e.b];
      if (residual_[e.a] <= remaining_[e.a] && residual_[e.b] <= remaining_[e.b]) {
        visit(k + 1, mask | (std::uint64_t{1} << k));
      }
      ++residual_[e.a];
      ++residual_[e.b];
    }
    if (residual_[e.a] <= remaining_[e.a] && residual_[e.b] <= remaining_[e.b]) visit(k + 1, mask);
    ++remaining_[e.a];
    ++remaining_[e.b];
  }

  const std::vector<Edge>& chords_;
  std::vector<int> residual_;
  std::vector<int> remaining_;
  std::size_t cap_;
  std::vector<std::uint64_t> out_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

std::uint64_t bits_of(const RealizationSet& set, std::span<const Edge> edges) {
  std::uint64_t m = 0;
  for (const Edge& e : edges) m |= std::uint64_t{1} << set.chord_index(e.a, e.b);
  return m;
}

double tv_to_uniform(const std::vector<double>& p) {
  const double u = 1.0 / static_cast<double>(p.size());
  double s = 0.0;
  for (double x : p) s += std::abs(x - u);
  return 0.5 * s;
}

}  // namespace

RealizationSet::RealizationSet(RealizationProblem problem, std::vector<Edge> chords, std::vector<std::uint64_t> masks)
    : problem_(std::move(problem)), chords_(std::move(chords)), masks_(std::move(masks)) {
  const std::size_t n = problem_.vertex_count();
  chord_index_.assign(n * n, -1);
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    chord_index_[chords_[i].a * n + chords_[i].b] = static_cast<int>(i);
    chord_index_[chords_[i].b * n + chords_[i].a] = static_cast<int>(i);
  }
}

std::optional<std::size_t> RealizationSet::index_of(std::uint64_t mask) const {
  const auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) return std::nullopt;
  return static_cast<std::size_t>(it - masks_.begin());
}

std::optional<std::size_t> RealizationSet::index_of(const Graph& g) const {
  if (g.vertex_count() != problem_.vertex_count()) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (chord_index(e.a, e.b) < 0) return std::nullopt;
  }
  return index_of(encode(g));
}

std::uint64_t RealizationSet::encode(const Graph& g) const {
  std::uint64_t m = 0;
  for (const Edge& e : g.edges()) {
    if (e.b >= problem_.vertex_count() || chord_index(e.a, e.b) < 0) throw InvalidInput("edge is not a chord");
    m |= std::uint64_t{1} << chord_index(e.a, e.b);
  }
  return m;
}

Graph RealizationSet::graph(std::size_t i) const {
  Graph g(problem_.vertex_count());
  for (std::uint64_t m = masks_[i]; m != 0; m &= m - 1) {
    const Edge& e = chords_[static_cast<std::size_t>(std::countr_zero(m))];
    g.add_edge(e.a, e.b);
  }
  return g;
}

RealizationSet enumerate_realizations(const RealizationProblem& problem, const EnumerationLimits& limits) {
  std::vector<Edge> chords = problem.chords();
  if (chords.size() > limits.chord_cap()) {
    throw TooLarge("instance has " + std::to_string(chords.size()) + " chords, cap is " +
                   std::to_string(limits.chord_cap()));
  }
  Enumerator en(problem, chords, limits.max_realizations);
  auto masks = en.run();
  return RealizationSet(problem, std::move(chords), std::move(masks));
}

std::vector<SwapMove> mask_moves(const RealizationSet& set, std::uint64_t mask) {
  const RealizationProblem& p = set.problem();
  std::vector<Edge> edges;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) edges.push_back(set.chords()[std::countr_zero(m)]);
  const auto free = [&](Edge e) {
    const int c = set.chord_index(e.a, e.b);
    return c >= 0 && (mask >> c & 1U) == 0;
  };
  std::vector<SwapMove> moves;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge x = edges[i];
      const Edge y = edges[j];
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) continue;
      const Edge alt[2][2] = {{Edge(x.a, y.a), Edge(x.b, y.b)}, {Edge(x.a, y.b), Edge(x.b, y.a)}};
      for (const auto& a : alt) {
        if (free(a[0]) && free(a[1])) moves.push_back({SwapKind::c4, {x, y, Edge{}}, {a[0], a[1], Edge{}}});
      }
    }
  }
  if (!p.uses_c6()) return moves;
  const auto hexagon = [&](Edge e1, Edge e2, Edge e3) {
    if (e1.a == e2.a || e1.a == e3.a || e2.a == e3.a || e1.b == e2.b || e1.b == e3.b || e2.b == e3.b) return;
    const Edge n1(e1.a, e2.b), n2(e2.a, e3.b), n3(e3.a, e1.b);
    if (!free(n1) || !free(n2) || !free(n3)) return;
    if (!p.is_forbidden(e1.a, e3.b) || !p.is_forbidden(e2.a, e1.b) || !p.is_forbidden(e3.a, e2.b)) return;
    moves.push_back({SwapKind::c6, {e1, e2, e3}, {n1, n2, n3}});
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (std::size_t k = j + 1; k < edges.size(); ++k) {
        hexagon(edges[i], edges[j], edges[k]);
        hexagon(edges[i], edges[k], edges[j]);
      }
    }
  }
  return moves;
}

RealizationGraph::RealizationGraph(RealizationSet states, std::vector<std::vector<Transition>> out)
    : states_(std::move(states)), out_(std::move(out)), stay_(out_.size(), 1.0) {
  for (std::size_t i = 0; i < out_.size(); ++i) {
    for (const Transition& t : out_[i]) {
      stay_[i] -= t.probability;
      if (i < t.to) ++edge_count_;
    }
  }
}

Eigen::MatrixXd RealizationGraph::transition_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    P(r, r) = stay_[i];
    for (const Transition& t : out_[i]) P(r, static_cast<Eigen::Index>(t.to)) += t.probability;
  }
  return P;
}

std::vector<std::size_t> RealizationGraph::component_labels() const {
  UnionFind uf(size());
  for (std::size_t i = 0; i < out_.size(); ++i) {
    for (const Transition& t : out_[i]) uf.unite(i, t.to);
  }
  std::vector<std::size_t> labels(size());
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < size(); ++i) labels[i] = ids.try_emplace(uf.find(i), ids.size()).first->second;
  return labels;
}

std::size_t RealizationGraph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

RealizationGraph build_realization_graph(const RealizationProblem& problem, const EnumerationLimits& limits) {
  RealizationSet set = enumerate_realizations(problem, limits);
  const KernelWeights w = kernel_weights(problem);
  std::vector<std::vector<Transition>> out(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const std::uint64_t mask = set.masks()[i];
    for (const SwapMove& mv : mask_moves(set, mask)) {
      const std::uint64_t next = (mask & ~bits_of(set, mv.removed_edges())) | bits_of(set, mv.added_edges());
      const auto j = set.index_of(next);
      if (!j) throw Error("swap left the realization set");
      out[i].push_back({*j, mv.kind == SwapKind::c4 ? w.c4 : w.c6, mv.kind});
    }
  }
  return RealizationGraph(std::move(set), std::move(out));
}

double second_eigenvalue(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() < 2) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed");
  return solver.eigenvalues()(symmetric.rows() - 2);
}

double exact_conductance(const Eigen::MatrixXd& P) {
  const auto n = static_cast<std::size_t>(P.rows());
  if (n < 2) throw InvalidInput("conductance needs at least two states");
  if (n > exact_conductance_limit) throw TooLarge("too many states for exact conductance");
  std::uint32_t set = 0;
  double cut = 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto v = static_cast<Eigen::Index>(std::countr_zero(k));
    const std::uint32_t bit = std::uint32_t{1} << v;
    // Moving v across the cut flips the sign of its pairs with both sides.
    double to_in = 0.0;
    double to_out = 0.0;
    for (Eigen::Index y = 0; y < static_cast<Eigen::Index>(n); ++y) {
      if (y == v) continue;
      if (set >> y & 1U) {
        to_in += P(y, v);
      } else {
        to_out += P(v, y);
      }
    }
    if (set & bit) {
      cut += to_in - to_out;
    } else {
      cut += to_out - to_in;
    }
    set ^= bit;
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (2 * size <= n) best = std::min(best, cut / static_cast<double>(size));
  }
  return best;
}

SpectralReport spectral_report(const RealizationGraph& rg) {
  SpectralReport r;
  r.realization_count = rg.size();
  if (rg.size() == 0) throw NotGraphical("no realizations");
  if (rg.size() == 1) {
    r.trivial = true;
    return r;
  }
  if (!rg.connected()) throw Disconnected("realization graph has " + std::to_string(rg.component_count()) + " components");
  const Eigen::MatrixXd P = rg.transition_matrix();
  r.lambda2 = second_eigenvalue(P);
  r.relaxation_time = 1.0 / (1.0 - r.lambda2);
  if (rg.size() <= exact_conductance_limit) {
    const double phi = exact_conductance(P);
    r.conductance = phi;
    const double gap = 1.0 - r.lambda2;
    r.cheeger_holds = phi * phi / 2.0 <= gap + 1e-12 && gap <= 2.0 * phi + 1e-12;
  }
  return r;
}

double exact_tv_distance(const RealizationGraph& rg, std::size_t start, std::uint64_t steps) {
  if (start >= rg.size()) throw InvalidInput("start state out of range");
  std::vector<double> p(rg.size(), 0.0);
  p[start] = 1.0;
  std::vector<double> next(rg.size());
  for (std::uint64_t s = 0; s < steps; ++s) {
    for (std::size_t i = 0; i < p.size(); ++i) next[i] = p[i] * rg.stay_probability(i);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0.0) continue;
      for (const Transition& t : rg.transitions(i)) next[t.to] += p[i] * t.probability;
    }
    p.swap(next);
  }
  return tv_to_uniform(p);
}

double empirical_tv_distance(const RealizationGraph& rg, std::uint64_t steps, std::uint64_t seed) {
  const RealizationSet& set = rg.states();
  ChainState chain(set.problem(), seed);
  std::vector<double> freq(set.size(), 0.0);
  for (std::uint64_t s = 0; s < steps; ++s) {
    chain.step();
    const auto i = set.index_of(chain.graph());
    if (!i) throw Error("chain left the realization set");
    freq[*i] += 1.0;
  }
  for (double& f : freq) f /= static_cast<double>(steps);
  return tv_to_uniform(freq);
}

double tv_distance_audit(const RealizationProblem& problem, std::uint64_t steps, std::optional<std::uint64_t> seed,
                         const EnumerationLimits& limits) {
  const RealizationGraph rg = build_realization_graph(problem, limits);
  if (rg.size() == 0) throw NotGraphical("no realizations");
  if (seed) return empirical_tv_distance(rg, steps, *seed);
  const auto start = rg.states().index_of(problem.realize());
  return exact_tv_distance(rg, *start, steps);
}

ProductCheck verify_cartesian_product(const CompositionPlan& plan, const EnumerationLimits& limits) {
  const RealizationGraph whole = build_realization_graph(plan.whole(), limits);
  std::vector<RealizationGraph> parts;
  for (const Factor& f : plan.factors()) parts.push_back(build_realization_graph(f.problem, limits));

  ProductCheck check;
  check.whole_count = whole.size();
  check.whole_edges = whole.edge_count();
  std::size_t product = 1;
  for (const auto& p : parts) {
    check.factor_counts.push_back(p.size());
    product *= p.size();
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t others = 1;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) others *= parts[j].size();
    }
    check.expected_edges += parts[i].edge_count() * others;
  }
  if (check.whole_count != product) {
    throw ProductMismatch("whole space has " + std::to_string(check.whole_count) +
                          " realizations, factor product has " + std::to_string(product));
  }

  // Tuple of factor indices for each whole realization.
  std::vector<std::vector<std::size_t>> tuple(whole.size());
  std::vector<bool> seen(product, false);
  for (std::size_t x = 0; x < whole.size(); ++x) {
    const Graph g = whole.states().graph(x);
    const auto restricted = plan.restrict(g);
    if (!(plan.assemble(restricted) == g)) {
      throw ProductMismatch("realization " + describe(g) + " is not its factor parts plus the forced edges");
    }
    std::size_t code = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto idx = parts[i].states().index_of(restricted[i]);
      if (!idx) {
        throw ProductMismatch("realization " + describe(g) + " restricts to a non-realization of factor " +
                              std::to_string(i));
      }
      tuple[x].push_back(*idx);
      code = code * parts[i].size() + *idx;
    }
    if (seen[code]) throw ProductMismatch("two realizations share the factor tuple of " + describe(g));
    seen[code] = true;
  }

  std::vector<std::unordered_map<std::uint64_t, Transition>> factor_moves(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t a = 0; a < parts[i].size(); ++a) {
      for (const Transition& t : parts[i].transitions(a)) factor_moves[i].emplace(a * parts[i].size() + t.to, t);
    }
  }
  check.c4_ratio.assign(parts.size(), 0.0);
  check.c6_ratio.assign(parts.size(), 0.0);
  for (std::size_t x = 0; x < whole.size(); ++x) {
    for (const Transition& t : whole.transitions(x)) {
      std::size_t differing = parts.size();
      std::size_t count = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (tuple[x][i] != tuple[t.to][i]) {
          differing = i;
          ++count;
        }
      }
      const auto witness = [&] { return describe(whole.states().graph(x)) + " -> " + describe(whole.states().graph(t.to)); };
      if (count != 1) throw ProductMismatch("swap changes " + std::to_string(count) + " factors: " + witness());
      const auto& fm = factor_moves[differing];
      const auto it = fm.find(tuple[x][differing] * parts[differing].size() + tuple[t.to][differing]);
      if (it == fm.end() || it->second.kind != t.kind) {
        throw ProductMismatch("swap has no counterpart in factor " + std::to_string(differing) + ": " + witness());
      }
      double& ratio = (t.kind == SwapKind::c4 ? check.c4_ratio : check.c6_ratio)[differing];
      const double r = t.probability / it->second.probability;
      if (ratio == 0.0) {
        ratio = r;
      } else if (std::abs(r - ratio) > 1e-12 * ratio) {
        throw ProductMismatch("transition weights are not proportional: " + witness());
      }
    }
  }
  if (check.whole_edges != check.expected_edges) {
    throw ProductMismatch("whole graph has " + std::to_string(check.whole_edges) + " adjacencies, product has " +
                          std::to_string(check.expected_edges));
  }
  return check;
}

LocalityReport check_swap_locality(const CompositionPlan& plan, const EnumerationLimits& limits) {
  const RealizationSet set = enumerate_realizations(plan.whole(), limits);
  LocalityReport report;
  report.realizations = set.size();
  for (std::size_t x = 0; x < set.size(); ++x) {
    for (const SwapMove& mv : mask_moves(set, set.masks()[x])) {
      ++report.moves;
      const std::size_t f = plan.factor_of(mv.removed[0].a);
      const auto inside = [&](std::span<const Edge> edges) {
        return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
          return plan.factor_of(e.a) == f && plan.factor_of(e.b) == f &&
                 plan.factors()[f].problem.is_chord(plan.local_id(e.a), plan.local_id(e.b));
        });
      };
      if (!inside(mv.removed_edges()) || !inside(mv.added_edges())) {
        if (report.violations++ == 0) report.first_violation = describe(set.graph(x));
      }
    }
  }
  return report;
}

Eigen::MatrixXd product_transition_matrix(const std::vector<Eigen::MatrixXd>& factors) {
  const std::size_t K = factors.size();
  std::size_t N = 1;
  for (const auto& m : factors) N *= static_cast<std::size_t>(m.rows());
  if (K == 0) return Eigen::MatrixXd::Identity(1, 1);
  if (N > 5000) throw TooLarge("product chain too large for a dense matrix");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  std::vector<std::size_t> stride(K, 1);
  for (std::size_t i = K; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(factors[i].rows());
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t i = 0; i < K; ++i) {
      const auto n = static_cast<std::size_t>(factors[i].rows());
      const std::size_t xi = x / stride[i] % n;
      for (std::size_t yi = 0; yi < n; ++yi) {
        const std::size_t y = x - xi * stride[i] + yi * stride[i];
        M(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) +=
            factors[i](static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(yi)) / static_cast<double>(K);
      }
    }
  }
  return M;
}

ProductSpectrum product_chain_spectrum(const CompositionPlan& plan, const EnumerationLimits& limits) {
  ProductSpectrum out;
  std::vector<Eigen::MatrixXd> P;
  for (const Factor& f : plan.factors()) {
    const RealizationGraph rg = build_realization_graph(f.problem, limits);
    if (rg.size() == 0) throw NotGraphical("factor has no realizations");
    if (!rg.connected()) throw Disconnected("factor realization graph is disconnected");
    P.push_back(rg.transition_matrix());
    out.factor_lambda2.push_back(second_eigenvalue(P.back()));
  }
  const Eigen::MatrixXd M = product_transition_matrix(P);
  const double K = static_cast<double>(P.size());
  const double top = *std::max_element(out.factor_lambda2.begin(), out.factor_lambda2.end());
  out.predicted = (K - 1.0 + top) / K;
  out.measured = second_eigenvalue(M);
  return out;
}

}  // namespace degmix
