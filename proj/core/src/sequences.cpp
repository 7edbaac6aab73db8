#include "degmix/sequences.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>
#include <numeric>
#include <string>

#include "degmix/errors.hpp"
#include "degmix/graph.hpp"

namespace degmix {

namespace {

void require_non_negative(std::span<const int> values, const char* what) {
  for (int v : values) {
    if (v < 0) throw InvalidInput(std::string(what) + ": negative degree " + std::to_string(v));
  }
}

std::int64_t sum_of(std::span<const int> values) {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

// Chord-graph flow network: source -> u (cap d(u)), u -> w (cap 1 per chord),
// w -> sink (cap d(w)). Realizations are exactly the saturating flows.
class ChordFlow {
 public:
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Network = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::directedS, boost::no_property,
      boost::property<boost::edge_capacity_t, long,
                      boost::property<boost::edge_residual_capacity_t, long,
                                      boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
  using EdgeDesc = Traits::edge_descriptor;

  ChordFlow(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden)
      : nu_(bd.u.size()), nw_(bd.w.size()), network_(nu_ + nw_ + 2) {
    source_ = nu_ + nw_;
    sink_ = source_ + 1;
    for (std::size_t i = 0; i < nu_; ++i) add_arc(source_, i, bd.u[i]);
    for (std::size_t i = 0; i < nu_; ++i) {
      for (std::size_t j = 0; j < nw_; ++j) {
        if (forbidden.contains(i, j)) continue;
        chords_.push_back({i, j, add_arc(i, nu_ + j, 1)});
      }
    }
    for (std::size_t j = 0; j < nw_; ++j) add_arc(nu_ + j, sink_, bd.w[j]);
  }

  long max_flow() { return boost::push_relabel_max_flow(network_, source_, sink_); }

  /// Chords carrying flow, after max_flow().
  std::vector<std::pair<std::size_t, std::size_t>> used_chords() const {
    auto capacity = boost::get(boost::edge_capacity, network_);
    auto residual = boost::get(boost::edge_residual_capacity, network_);
    std::vector<std::pair<std::size_t, std::size_t>> used;
    for (const auto& c : chords_) {
      if (capacity[c.arc] - residual[c.arc] > 0) used.emplace_back(c.u, c.w);
    }
    return used;
  }

 private:
  struct ChordArc {
    std::size_t u;
    std::size_t w;
    EdgeDesc arc;
  };

  EdgeDesc add_arc(std::size_t from, std::size_t to, long cap) {
    auto capacity = boost::get(boost::edge_capacity, network_);
    auto reverse = boost::get(boost::edge_reverse, network_);
    EdgeDesc fwd = boost::add_edge(from, to, network_).first;
    EdgeDesc back = boost::add_edge(to, from, network_).first;
    capacity[fwd] = cap;
    capacity[back] = 0;
    reverse[fwd] = back;
    reverse[back] = fwd;
    return fwd;
  }

  std::size_t nu_;
  std::size_t nw_;
  Network network_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
  std::vector<ChordArc> chords_;
};

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  require_non_negative(degrees_, "degree sequence");
  order_.resize(degrees_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t a, std::size_t b) { return degrees_[a] > degrees_[b]; });
}

std::vector<int> DegreeSequence::canonical() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (std::size_t i : order_) out.push_back(degrees_[i]);
  return out;
}

int DegreeSequence::max_degree() const noexcept {
  return degrees_.empty() ? 0 : degrees_[order_.front()];
}

std::int64_t DegreeSequence::degree_sum() const noexcept { return sum_of(degrees_); }

void BipartiteDegreeSequence::validate() const {
  require_non_negative(u, "bipartite sequence (u)");
  require_non_negative(w, "bipartite sequence (w)");
}

void DirectedDegreeSequence::validate() const {
  require_non_negative(out, "directed sequence (out)");
  require_non_negative(in, "directed sequence (in)");
  if (out.size() != in.size()) throw InvalidInput("directed sequence: out and in differ in length");
}

ForbiddenSet ForbiddenSet::diagonal(std::size_t n) {
  ForbiddenSet f;
  for (std::size_t i = 0; i < n; ++i) f.insert(i, i);
  return f;
}

bool ForbiddenSet::is_partial_matching() const {
  std::set<std::size_t> us;
  std::set<std::size_t> ws;
  for (const auto& [u, w] : pairs_) {
    if (!us.insert(u).second || !ws.insert(w).second) return false;
  }
  return true;
}

bool erdos_gallai(std::span<const int> degrees) {
  std::vector<std::int64_t> d(degrees.begin(), degrees.end());
  if (std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x < 0; })) return false;
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto n = static_cast<std::int64_t>(d.size());
  std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  if (total % 2 != 0) return false;
  std::int64_t prefix = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (prefix > rhs) return false;
  }
  return true;
}

bool erdos_gallai(const DegreeSequence& d) { return erdos_gallai(d.degrees()); }

bool gale_ryser(const BipartiteDegreeSequence& bd) {
  if (std::any_of(bd.u.begin(), bd.u.end(), [](int x) { return x < 0; }) ||
      std::any_of(bd.w.begin(), bd.w.end(), [](int x) { return x < 0; })) {
    return false;
  }
  if (sum_of(bd.u) != sum_of(bd.w)) return false;
  std::vector<int> u = bd.u;
  std::sort(u.begin(), u.end(), std::greater<>());
  std::int64_t prefix = 0;
  for (std::size_t k = 1; k <= u.size(); ++k) {
    prefix += u[k - 1];
    std::int64_t capacity = 0;
    for (int x : bd.w) capacity += std::min<std::int64_t>(x, static_cast<std::int64_t>(k));
    if (prefix > capacity) return false;
  }
  return true;
}

bool restricted_bipartite_graphical(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden) {
  for (const auto& [u, w] : forbidden.pairs()) {
    if (u >= bd.u.size() || w >= bd.w.size()) throw InvalidInput("forbidden pair out of range");
  }
  if (std::any_of(bd.u.begin(), bd.u.end(), [](int x) { return x < 0; }) ||
      std::any_of(bd.w.begin(), bd.w.end(), [](int x) { return x < 0; })) {
    return false;
  }
  const std::int64_t total = sum_of(bd.u);
  if (total != sum_of(bd.w)) return false;
  ChordFlow flow(bd, forbidden);
  return flow.max_flow() == total;
}

BipartiteDegreeSequence gale_representation(const DirectedDegreeSequence& dd) {
  dd.validate();
  return {dd.out, dd.in};
}

bool directed_graphical(const DirectedDegreeSequence& dd) {
  dd.validate();
  return restricted_bipartite_graphical(gale_representation(dd), ForbiddenSet::diagonal(dd.out.size()));
}

Graph realize(const DegreeSequence& d) {
  if (!erdos_gallai(d)) throw NotGraphical("degree sequence is not graphical");
  const std::size_t n = d.size();
  Graph g(n);
  std::vector<int> residual = d.degrees();
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  for (std::size_t round = 0; round < n; ++round) {
    std::stable_sort(ids.begin(), ids.end(),
                     [&](std::size_t a, std::size_t b) { return residual[a] > residual[b]; });
    const std::size_t v = ids.front();
    const int need = residual[v];
    if (need == 0) break;
    for (int k = 1; k <= need; ++k) {
      const std::size_t x = ids[static_cast<std::size_t>(k)];
      if (residual[x] == 0) throw NotGraphical("Havel-Hakimi ran out of partners");
      g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(x));
      --residual[x];
    }
    residual[v] = 0;
  }
  return g;
}

Graph realize(const BipartiteDegreeSequence& bd, const ForbiddenSet& forbidden) {
  bd.validate();
  if (!restricted_bipartite_graphical(bd, forbidden)) {
    throw NotGraphical("bipartite degree sequence is not graphical");
  }
  ChordFlow flow(bd, forbidden);
  flow.max_flow();
  Graph g(bd.u.size() + bd.w.size());
  const auto offset = static_cast<Vertex>(bd.u.size());
  for (const auto& [u, w] : flow.used_chords()) {
    g.add_edge(static_cast<Vertex>(u), offset + static_cast<Vertex>(w));
  }
  return g;
}

Graph realize(const DirectedDegreeSequence& dd) {
  dd.validate();
  return realize(gale_representation(dd), ForbiddenSet::diagonal(dd.out.size()));
}

}  // namespace degmix
