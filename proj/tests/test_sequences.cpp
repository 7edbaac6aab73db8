#include "doctest.h"
#include "oracles.hpp"

#include "degmix/errors.hpp"
#include "degmix/graph.hpp"
#include "degmix/problem.hpp"
#include "degmix/sequences.hpp"

using namespace degmix;

namespace {

// All integer vectors of the given length with entries in [0, max].
std::vector<std::vector<int>> all_vectors(std::size_t length, int max) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out) {
      for (int x = 0; x <= max; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> graph_degrees(const Graph& g, std::size_t from, std::size_t to) {
  const auto d = g.degrees();
  return {d.begin() + static_cast<std::ptrdiff_t>(from), d.begin() + static_cast<std::ptrdiff_t>(to)};
}

}  // namespace

TEST_CASE("erdos_gallai examples") {
  CHECK(erdos_gallai(DegreeSequence({2, 2, 2})));
  CHECK(erdos_gallai(DegreeSequence({0, 0, 0})));
  CHECK_FALSE(erdos_gallai(DegreeSequence({3, 3, 1, 1})));
  CHECK(erdos_gallai(DegreeSequence{}));
}

TEST_CASE("erdos_gallai agrees with exhaustive graph listing for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto counts = oracle::simple_counts(n);
    for (const auto& v : all_vectors(static_cast<std::size_t>(n), n)) {
      const bool brute = counts.count(v) != 0;
      CAPTURE(v);
      CHECK(erdos_gallai(DegreeSequence(v)) == brute);
      if (brute) {
        const Graph g = realize(DegreeSequence(v));
        CHECK(g.degrees() == v);
      } else {
        CHECK_THROWS_AS(realize(DegreeSequence(v)), NotGraphical);
      }
    }
  }
}

TEST_CASE("gale_ryser examples") {
  CHECK(gale_ryser({{1, 1}, {1, 1}}));
  CHECK(gale_ryser({{2, 2, 1}, {3, 1, 1}}));
  CHECK_FALSE(gale_ryser({{2, 2}, {1, 1, 1}}));
  const Graph g = realize(BipartiteDegreeSequence{{2, 2, 1}, {3, 1, 1}});
  CHECK(graph_degrees(g, 0, 3) == std::vector<int>{2, 2, 1});
  CHECK(graph_degrees(g, 3, 6) == std::vector<int>{3, 1, 1});
}

TEST_CASE("gale_ryser agrees with exhaustive listing up to 4+4") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto counts = oracle::bipartite_counts(a, b);
      for (const auto& u : all_vectors(static_cast<std::size_t>(a), b)) {
        for (const auto& w : all_vectors(static_cast<std::size_t>(b), a)) {
          CAPTURE(u);
          CAPTURE(w);
          CHECK(gale_ryser({u, w}) == (counts.count({u, w}) != 0));
        }
      }
    }
  }
}

TEST_CASE("restricted graphicality examples") {
  CHECK(restricted_bipartite_graphical({{1, 1}, {1, 1}}, ForbiddenSet{{0, 0}, {1, 1}}));
  CHECK_FALSE(restricted_bipartite_graphical({{1, 1}, {1, 1}}, ForbiddenSet{{0, 0}, {0, 1}}));
  CHECK(restricted_bipartite_graphical({{2, 1, 1}, {2, 1, 1}}, ForbiddenSet::diagonal(3)));
}

TEST_CASE("restricted graphicality and realization agree with brute force") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int shift = 0; shift < b; ++shift) {
        // Partial matching (i, (i + shift) mod b) for i < min(a, b).
        ForbiddenSet f;
        std::set<std::pair<int, int>> pairs;
        for (int i = 0; i < std::min(a, b); ++i) {
          f.insert(static_cast<std::size_t>(i), static_cast<std::size_t>((i + shift) % b));
          pairs.emplace(i, (i + shift) % b);
        }
        REQUIRE(f.is_partial_matching());
        for (const auto& u : all_vectors(static_cast<std::size_t>(a), b)) {
          for (const auto& w : all_vectors(static_cast<std::size_t>(b), a)) {
            const bool brute = oracle::bipartite_count(u, w, pairs) > 0;
            CAPTURE(u);
            CAPTURE(w);
            CHECK(restricted_bipartite_graphical({u, w}, f) == brute);
            if (!brute) continue;
            const Graph g = realize(BipartiteDegreeSequence{u, w}, f);
            CHECK(graph_degrees(g, 0, u.size()) == u);
            for (const Edge& e : g.edges()) {
              CHECK(pairs.count({static_cast<int>(e.a), static_cast<int>(e.b) - a}) == 0);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("directed graphicality examples") {
  CHECK(directed_graphical({{1, 1, 1}, {1, 1, 1}}));
  CHECK_FALSE(directed_graphical({{2, 0}, {0, 2}}));
  CHECK(directed_graphical({{2, 2, 1, 1}, {2, 2, 1, 1}}));
}

TEST_CASE("directed graphicality agrees with brute force for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto counts = oracle::directed_counts(n);
    for (const auto& o : all_vectors(static_cast<std::size_t>(n), n - 1)) {
      for (const auto& i : all_vectors(static_cast<std::size_t>(n), n - 1)) {
        const bool brute = counts.count({o, i}) != 0;
        CAPTURE(o);
        CAPTURE(i);
        REQUIRE(directed_graphical({o, i}) == brute);
        if (!brute) continue;
        const Graph g = realize(DirectedDegreeSequence{o, i});
        CHECK(graph_degrees(g, 0, o.size()) == o);
        CHECK(graph_degrees(g, o.size(), 2 * o.size()) == i);
        for (const Edge& e : g.edges()) CHECK(e.b != e.a + static_cast<Vertex>(n));
      }
    }
  }
}

TEST_CASE("realize examples") {
  const Graph g = realize(DegreeSequence({1, 1}));
  CHECK(g.sorted_edges() == std::vector<Edge>{Edge(0, 1)});
  CHECK_THROWS_AS(realize(DegreeSequence({3, 3, 1, 1})), NotGraphical);
}

TEST_CASE("degree sequence canonical order is stable") {
  const DegreeSequence d({1, 3, 1, 2});
  CHECK(d.canonical() == std::vector<int>{3, 2, 1, 1});
  CHECK(d.order() == std::vector<std::size_t>{1, 3, 0, 2});
  CHECK_THROWS_AS(DegreeSequence({1, -1}), InvalidInput);
  CHECK(d.degree_sum() == 7);
  CHECK(d.max_degree() == 3);
}

TEST_CASE("forbidden sets") {
  CHECK(ForbiddenSet::diagonal(3).is_partial_matching());
  CHECK_FALSE((ForbiddenSet{{0, 0}, {0, 1}}).is_partial_matching());
  CHECK(ForbiddenSet::diagonal(3).size() == 3);
}

TEST_CASE("graph edge bookkeeping") {
  Graph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  CHECK(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(0, 2), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
  g.replace_edge(0, Edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 0));
  g.remove_edge(0, 1);
  CHECK(g.sorted_edges() == std::vector<Edge>{Edge(1, 3)});
  CHECK(g.degrees() == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("realization problems") {
  const auto p = RealizationProblem::directed({{1, 1, 1}, {1, 1, 1}});
  CHECK(p.kind() == GraphKind::bipartite);
  CHECK(p.uses_c6());
  CHECK(p.is_forbidden(0, 3));
  CHECK_FALSE(p.is_chord(0, 3));
  CHECK(p.is_chord(0, 4));
  CHECK_FALSE(p.is_chord(0, 1));
  CHECK(p.chords().size() == 6);
  CHECK(p.is_realization(p.realize()));
  const auto s = RealizationProblem::simple(DegreeSequence({1, 1, 1, 1}));
  CHECK(s.chords().size() == 6);
  CHECK_FALSE(s.uses_c6());
}
