#include "doctest.h"
#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include "degmix/errors.hpp"
#include "degmix/realization_space.hpp"
#include "degmix/spectra.hpp"

using namespace degmix;

namespace {

Graph from_mask(int n, std::uint64_t mask) {
  const auto pairs = oracle::all_pairs(n);
  Graph g(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (mask >> k & 1U) g.add_edge(static_cast<Vertex>(pairs[k].first), static_cast<Vertex>(pairs[k].second));
  }
  return g;
}

std::map<std::pair<int, int>, std::int64_t> edges_by_degree(const Graph& g) {
  const auto d = g.degrees();
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const Edge& e : g.edges()) ++out[{std::max(d[e.a], d[e.b]), std::min(d[e.a], d[e.b])}];
  return out;
}

}  // namespace

TEST_CASE("degree spectra of small graphs") {
  const auto tri = degree_spectra(Graph(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}));
  CHECK(tri.delta == 2);
  CHECK(tri.columns == std::vector<std::vector<int>>{{0, 2}, {0, 2}, {0, 2}});

  const auto star = degree_spectra(Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}));
  CHECK(star.columns == std::vector<std::vector<int>>{{3, 0, 0}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}});
  const auto comps = component_sequences(star);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].i == 3);
  CHECK(comps[0].j == 1);
  CHECK(comps[0].primary == std::vector<int>{3});
  CHECK(comps[0].secondary == std::vector<int>{1, 1, 1});

  const auto p3 = degree_spectra(Graph(3, {Edge(0, 1), Edge(1, 2)}));
  CHECK(p3.columns == std::vector<std::vector<int>>{{0, 1}, {2, 0}, {0, 1}});
  CHECK(p3.degrees() == std::vector<int>{1, 2, 1});
}

TEST_CASE("matrix consistency and graphicality") {
  CHECK_FALSE(dsm_graphical({2, {{1, 1}, {0, 2}, {0, 2}}}));
  CHECK_THROWS_AS(component_sequences({2, {{1, 1}, {0, 2}, {0, 2}}}), InconsistentMatrix);
  CHECK_FALSE(dsm_graphical({1, {{1}, {1}, {1}}}));
  CHECK_THROWS_AS(component_sequences({2, {{1}, {1}}}), InconsistentMatrix);
  CHECK_THROWS_AS(component_sequences({1, {{-1}, {1}}}), InconsistentMatrix);
  // A lone degree-1 vertex claims a degree-1 neighbor.
  CHECK_THROWS_AS(component_sequences({2, {{0, 2}, {1, 0}}}), InconsistentMatrix);
  // Consistent totals but two vertices cannot carry degree 3 among themselves.
  const DegreeSpectraMatrix dense{3, {{0, 0, 3}, {0, 0, 3}}};
  CHECK_NOTHROW(component_sequences(dense));
  CHECK_FALSE(dsm_graphical(dense));
  CHECK_THROWS_AS(dsm_realize(dense), NotGraphical);
  CHECK(dsm_graphical({0, {}}));
  CHECK(dsm_graphical({0, {{}, {}}}));
  CHECK(dsm_realize({0, {{}, {}}}).edge_count() == 0);
}

TEST_CASE("realizing the degree spectra of every graph on at most 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = from_mask(n, mask);
      const auto m = degree_spectra(g);
      REQUIRE(dsm_graphical(m));
      const Graph h = dsm_realize(m);
      CHECK(degree_spectra(h) == m);
      CHECK(joint_degree_matrix(m) == edges_by_degree(g));
    }
  }
}

TEST_CASE("graphs sharing a degree spectra matrix form the product of the component spaces") {
  for (int n = 4; n <= 5; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::map<std::vector<std::vector<int>>, std::size_t> classes;
    for (std::uint64_t mask = 0; mask < total; ++mask) ++classes[degree_spectra(from_mask(n, mask)).columns];
    for (const auto& [cols, count] : classes) {
      int delta = 0;
      for (const auto& c : cols) delta = std::max(delta, static_cast<int>(c.size()));
      const DegreeSpectraMatrix m{delta, cols};
      std::size_t product = 1;
      const auto plan = dsm_plan(m);
      for (const Factor& f : plan.factors()) product *= enumerate_realizations(f.problem).size();
      CHECK(product == count);
    }
  }
}

TEST_CASE("sampling preserves the matrix and is uniform") {
  // Double star: the leaves can be shared out between the two centers in six ways.
  const Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(1, 4)});
  const auto m = degree_spectra(g);
  std::map<std::vector<Edge>, std::size_t> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
    const Graph h = from_mask(6, mask);
    if (degree_spectra(h) == m) members.emplace(h.sorted_edges(), members.size());
  }
  REQUIRE(members.size() == 6);
  SampleOptions o;
  o.count = 150 * members.size();
  o.burn_in = 300;
  o.thin = 40;
  o.seed = 8;
  std::vector<double> freq(members.size(), 0.0);
  const auto jdm = joint_degree_matrix(m);
  for (const Graph& h : dsm_sample(m, o)) {
    REQUIRE(degree_spectra(h) == m);
    CHECK(edges_by_degree(h) == jdm);
    freq[members.at(h.sorted_edges())] += 1.0;
  }
  const double expected = static_cast<double>(o.count) / static_cast<double>(members.size());
  double stat = 0.0;
  for (double f : freq) stat += (f - expected) * (f - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(members.size() - 1));
  CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 1e-3);
}

TEST_CASE("component sequences of small graphs") {
  const auto tri = component_sequences(degree_spectra(Graph(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)})));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].simple());
  CHECK(tri[0].primary == std::vector<int>{2, 2, 2});
  CHECK(component_sequences(degree_spectra(Graph(4))).empty());
}

TEST_CASE("rigid matrices sample a constant graph") {
  // A star is the only graph with its matrix.
  const Graph star(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)});
  SampleOptions o;
  o.count = 10;
  o.thin = 5;
  for (const Graph& g : dsm_sample(degree_spectra(star), o)) CHECK(g.sorted_edges() == star.sorted_edges());
}

TEST_CASE("C5 plus a disjoint triangle keeps its matrix") {
  const Graph g(8, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(0, 4), Edge(5, 6), Edge(6, 7), Edge(5, 7)});
  const auto m = degree_spectra(g);
  SampleOptions o;
  o.count = 200;
  o.burn_in = 200;
  o.thin = 20;
  o.seed = 17;
  std::set<std::vector<Edge>> seen;
  for (const Graph& h : dsm_sample(m, o)) {
    CHECK(degree_spectra(h) == m);
    seen.insert(h.sorted_edges());
  }
  CHECK(seen.size() > 100);
}

TEST_CASE("component marginals are close to uniform") {
  // Double star again: the (3,1) component is the only one that moves.
  const Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(1, 4)});
  const auto m = degree_spectra(g);
  const auto plan = dsm_plan(m);
  std::vector<RealizationSet> sets;
  for (const Factor& f : plan.factors()) sets.push_back(enumerate_realizations(f.problem));
  SampleOptions o;
  o.count = 3000;
  o.burn_in = 200;
  o.thin = 20;
  o.seed = 23;
  std::vector<std::vector<double>> freq;
  for (const auto& s : sets) freq.emplace_back(s.size(), 0.0);
  for (const Graph& h : sample(plan, o)) {
    const auto parts = plan.restrict(h);
    for (std::size_t i = 0; i < sets.size(); ++i) freq[i][*sets[i].index_of(parts[i])] += 1.0;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    double tv = 0.0;
    for (double f : freq[i]) tv += std::abs(f / static_cast<double>(o.count) - 1.0 / static_cast<double>(sets[i].size()));
    CHECK(tv / 2 < 0.05);
  }
}
