#include "degmix/composition_plan.hpp"

#include <algorithm>
#include <numeric>

#include "degmix/errors.hpp"

namespace degmix {

namespace {

std::vector<std::size_t> descending_order(const std::vector<int>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  return order;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Vertex> range(std::size_t begin, std::size_t end) {
  std::vector<Vertex> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(static_cast<Vertex>(i));
  return out;
}

// Forbidden pairs of `whole` with both ends in the factor, in local ids.
std::vector<Edge> local_forbidden(const RealizationProblem& whole, const std::vector<Vertex>& to_global) {
  std::vector<Vertex> local(whole.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < to_global.size(); ++i) local[to_global[i]] = static_cast<Vertex>(i);
  std::vector<Edge> out;
  for (const Edge& e : whole.forbidden()) {
    if (local[e.a] != static_cast<Vertex>(-1) && local[e.b] != static_cast<Vertex>(-1)) {
      out.emplace_back(local[e.a], local[e.b]);
    }
  }
  return out;
}

std::vector<Edge> global_forbidden(const ForbiddenSet& f, std::size_t primary_count) {
  std::vector<Edge> out;
  for (const auto& [u, w] : f.pairs()) {
    out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(primary_count + w));
  }
  return out;
}

}  // namespace

CompositionPlan::CompositionPlan(RealizationProblem whole, std::vector<Factor> factors, std::vector<Edge> forced)
    : whole_(std::move(whole)), factors_(std::move(factors)), forced_(std::move(forced)) {
  const std::size_t n = whole_.vertex_count();
  owner_.assign(n, npos);
  local_.assign(n, 0);
  std::vector<int> expected(n, 0);
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const Factor& factor = factors_[f];
    if (factor.to_global.size() != factor.problem.vertex_count()) throw InvalidInput("factor size mismatch");
    for (std::size_t i = 0; i < factor.to_global.size(); ++i) {
      const Vertex v = factor.to_global[i];
      if (v >= n || owner_[v] != npos) throw InvalidInput("factors overlap or leave the vertex range");
      owner_[v] = f;
      local_[v] = static_cast<Vertex>(i);
      expected[v] += factor.problem.degrees()[i];
    }
  }
  if (std::find(owner_.begin(), owner_.end(), npos) != owner_.end()) throw InvalidInput("factors do not cover the vertex set");
  std::sort(forced_.begin(), forced_.end());
  if (std::adjacent_find(forced_.begin(), forced_.end()) != forced_.end()) throw InvalidInput("duplicate forced edge");
  for (const Edge& e : forced_) {
    if (e.a == e.b || e.b >= n) throw InvalidInput("forced edge out of range");
    if (owner_[e.a] == owner_[e.b] && factors_[owner_[e.a]].problem.is_chord(local_[e.a], local_[e.b])) {
      throw InvalidInput("forced edge is a factor chord");
    }
    ++expected[e.a];
    ++expected[e.b];
  }
  if (expected != whole_.degrees()) throw InvalidInput("factor degrees and forced edges do not add up");
}

CompositionPlan CompositionPlan::trivial(RealizationProblem whole) {
  Factor f{whole, range(0, whole.vertex_count())};
  return CompositionPlan(std::move(whole), {std::move(f)}, {});
}

CompositionPlan CompositionPlan::for_simple(const DegreeSequence& d) {
  RealizationProblem whole = RealizationProblem::simple(d);
  if (!erdos_gallai(d)) throw NotGraphical("degree sequence is not graphical");
  if (d.empty()) return trivial(std::move(whole));
  const CanonicalDecomposition dec = canonical_decompose(d);
  const auto& order = d.order();
  const auto at = [&](std::size_t pos) { return static_cast<Vertex>(order[pos]); };

  std::vector<Factor> factors;
  std::vector<Edge> forced;
  const auto blocks = dec.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    const SplittedBipartiteSequence part = psi(dec.components[i]);
    Factor f;
    for (std::size_t k = b.primary_begin; k < b.primary_end; ++k) f.to_global.push_back(at(k));
    for (std::size_t k = b.secondary_begin; k < b.secondary_end; ++k) f.to_global.push_back(at(k));
    f.problem = RealizationProblem::make(GraphKind::bipartite, concat(part.primary, part.secondary),
                                         part.primary.size(), {}, false);
    factors.push_back(std::move(f));
    for (std::size_t x = b.primary_begin; x < b.primary_end; ++x) {
      for (std::size_t y = x + 1; y < b.primary_end; ++y) forced.emplace_back(at(x), at(y));
      for (std::size_t y = b.primary_end; y < b.secondary_begin; ++y) forced.emplace_back(at(x), at(y));
    }
  }
  Factor tail;
  const std::size_t tb = dec.tail_begin();
  for (std::size_t k = tb; k < tb + dec.tail.size(); ++k) tail.to_global.push_back(at(k));
  tail.problem = RealizationProblem::make(GraphKind::simple, dec.tail, 0, {}, false);
  factors.push_back(std::move(tail));
  return CompositionPlan(std::move(whole), std::move(factors), std::move(forced));
}

CompositionPlan CompositionPlan::for_bipartite(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden) {
  RealizationProblem whole = RealizationProblem::bipartite(bd, forbidden);
  if (!whole.graphical()) throw NotGraphical("bipartite sequence is not graphical");
  if (bd.u.empty() || bd.w.empty()) return trivial(std::move(whole));
  const auto uorder = descending_order(bd.u);
  const auto worder = descending_order(bd.w);
  SplittedBipartiteSequence sorted;
  for (std::size_t i : uorder) sorted.primary.push_back(bd.u[i]);
  for (std::size_t i : worder) sorted.secondary.push_back(bd.w[i]);
  const BipartiteDecomposition dec = canonical_decompose_bipartite(sorted);
  const std::size_t P = bd.u.size();
  const auto u_at = [&](std::size_t pos) { return static_cast<Vertex>(uorder[pos]); };
  const auto w_at = [&](std::size_t pos) { return static_cast<Vertex>(P + worder[pos]); };

  std::vector<Factor> factors;
  std::vector<Edge> forced;
  const auto blocks = dec.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    const auto& part = dec.factors[i];
    Factor f;
    for (std::size_t k = b.primary_begin; k < b.primary_end; ++k) f.to_global.push_back(u_at(k));
    for (std::size_t k = b.secondary_begin; k < b.secondary_end; ++k) f.to_global.push_back(w_at(k));
    f.problem = RealizationProblem::make(GraphKind::bipartite, concat(part.primary, part.secondary),
                                         part.primary.size(), local_forbidden(whole, f.to_global),
                                         whole.c6_enabled());
    factors.push_back(std::move(f));
    for (std::size_t x = b.primary_begin; x < b.primary_end; ++x) {
      for (std::size_t y = 0; y < b.secondary_begin; ++y) {
        if (whole.is_forbidden(u_at(x), w_at(y))) throw NotGraphical("forced edge is forbidden");
        forced.emplace_back(u_at(x), w_at(y));
      }
    }
  }
  return CompositionPlan(std::move(whole), std::move(factors), std::move(forced));
}

CompositionPlan CompositionPlan::for_directed(const DirectedDegreeSequence& dd) {
  dd.validate();
  return for_bipartite(gale_representation(dd), ForbiddenSet::diagonal(dd.out.size()));
}

CompositionPlan CompositionPlan::compose(const SplitSequence& s, const DegreeSequence& g) {
  const DegreeSequence total = degmix::compose(s, g);
  const std::size_t u = s.primary.size();
  const std::size_t k = s.size();
  const std::size_t n = total.size();
  Factor first{RealizationProblem::make(GraphKind::simple, s.concatenated(), 0, {}, false), range(0, k)};
  Factor second{RealizationProblem::simple(g), range(k, n)};
  std::vector<Edge> forced;
  for (std::size_t x = 0; x < u; ++x) {
    for (std::size_t y = k; y < n; ++y) forced.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  return CompositionPlan(RealizationProblem::simple(total), {std::move(first), std::move(second)}, std::move(forced));
}

CompositionPlan CompositionPlan::compose(const SplittedBipartiteSequence& s, const DegreeSequence& g) {
  const SplitSequence split = psi_inverse(s);
  const DegreeSequence total = degmix::compose(split, g);
  const std::size_t u = s.primary.size();
  const std::size_t k = split.size();
  const std::size_t n = total.size();
  Factor first{RealizationProblem::make(GraphKind::bipartite, concat(s.primary, s.secondary), u, {}, false),
               range(0, k)};
  Factor second{RealizationProblem::simple(g), range(k, n)};
  std::vector<Edge> forced;
  for (std::size_t x = 0; x < u; ++x) {
    for (std::size_t y = x + 1; y < u; ++y) forced.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    for (std::size_t y = k; y < n; ++y) forced.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  return CompositionPlan(RealizationProblem::simple(total), {std::move(first), std::move(second)}, std::move(forced));
}

namespace {

CompositionPlan compose_restricted(const RestrictedSplittedSequence& a, const RestrictedSplittedSequence& b,
                                   const ForbiddenSet& merged, bool c6) {
  const SplittedBipartiteSequence total = compose_bipartite(a.sequence, b.sequence);
  const std::size_t au = a.sequence.primary.size();
  const std::size_t aw = a.sequence.secondary.size();
  const std::size_t bu = b.sequence.primary.size();
  const std::size_t bw = b.sequence.secondary.size();
  const std::size_t P = au + bu;
  const auto part = [&](const RestrictedSplittedSequence& s, std::size_t u0, std::size_t w0) {
    Factor f;
    for (std::size_t i = 0; i < s.sequence.primary.size(); ++i) f.to_global.push_back(static_cast<Vertex>(u0 + i));
    for (std::size_t i = 0; i < s.sequence.secondary.size(); ++i) {
      f.to_global.push_back(static_cast<Vertex>(P + w0 + i));
    }
    f.problem = RealizationProblem::make(GraphKind::bipartite, concat(s.sequence.primary, s.sequence.secondary),
                                         s.sequence.primary.size(),
                                         global_forbidden(s.forbidden, s.sequence.primary.size()), c6);
    return f;
  };
  std::vector<Factor> factors{part(a, 0, 0), part(b, au, aw)};
  std::vector<Edge> forced;
  for (std::size_t x = 0; x < au; ++x) {
    for (std::size_t y = aw; y < aw + bw; ++y) forced.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(P + y));
  }
  RealizationProblem whole = RealizationProblem::make(GraphKind::bipartite, concat(total.primary, total.secondary), P,
                                                      global_forbidden(merged, P), c6);
  return CompositionPlan(std::move(whole), std::move(factors), std::move(forced));
}

}  // namespace

CompositionPlan CompositionPlan::compose(const SplittedBipartiteSequence& a, const SplittedBipartiteSequence& b) {
  return compose_restricted({a, {}}, {b, {}}, {}, true);
}

CompositionPlan CompositionPlan::compose(const RestrictedSplittedSequence& a, const RestrictedSplittedSequence& b) {
  const RestrictedSplittedSequence merged = compose_directed(a, b);
  return compose_restricted(a, b, merged.forbidden, true);
}

Graph CompositionPlan::assemble(std::span<const Graph> parts) const {
  if (parts.size() != factors_.size()) throw InvalidInput("wrong number of factor realizations");
  Graph g(whole_.vertex_count());
  for (std::size_t f = 0; f < parts.size(); ++f) {
    const auto& map = factors_[f].to_global;
    for (const Edge& e : parts[f].edges()) g.add_edge(map[e.a], map[e.b]);
  }
  for (const Edge& e : forced_) g.add_edge(e.a, e.b);
  return g;
}

std::vector<Graph> CompositionPlan::restrict(const Graph& whole) const {
  std::vector<Graph> parts;
  parts.reserve(factors_.size());
  for (const Factor& f : factors_) parts.emplace_back(f.problem.vertex_count());
  for (const Edge& e : whole.edges()) {
    const std::size_t f = owner_[e.a];
    if (f != owner_[e.b]) continue;
    if (factors_[f].problem.is_chord(local_[e.a], local_[e.b])) parts[f].add_edge(local_[e.a], local_[e.b]);
  }
  return parts;
}

}  // namespace degmix
