#include "degmix/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "degmix/errors.hpp"

namespace degmix {

namespace {

std::vector<int> shifted(std::vector<int> v, int by) {
  for (int& x : v) x += by;
  return v;
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<int> slice(const std::vector<int>& v, std::size_t begin, std::size_t end) {
  return {v.begin() + static_cast<std::ptrdiff_t>(begin), v.begin() + static_cast<std::ptrdiff_t>(end)};
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int as_int(std::size_t n) { return static_cast<int>(n); }

// Eq. (d(U) + |V(G)|, d(W), d(V(G)) + |U|) without validation.
std::vector<int> compose_unchecked(const SplitSequence& s, const std::vector<int>& g) {
  std::vector<int> out = shifted(s.primary, as_int(g.size()));
  out.insert(out.end(), s.secondary.begin(), s.secondary.end());
  const std::vector<int> rest = shifted(g, as_int(s.primary.size()));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

SplittedBipartiteSequence compose_bipartite_unchecked(const SplittedBipartiteSequence& a,
                                                      const SplittedBipartiteSequence& b) {
  return {concat(shifted(a.primary, as_int(b.secondary.size())), b.primary),
          concat(a.secondary, shifted(b.secondary, as_int(a.primary.size())))};
}

void require_matching(const RestrictedSplittedSequence& r) {
  if (!r.forbidden.is_partial_matching()) {
    throw ForbiddenSetNotMatching("forbidden set is not a partial 1-factor");
  }
  for (const auto& [u, w] : r.forbidden.pairs()) {
    if (u >= r.sequence.primary.size() || w >= r.sequence.secondary.size()) {
      throw InvalidInput("forbidden pair out of range");
    }
  }
}

}  // namespace

SplitSequence SplitSequence::canonical() const { return {sorted_desc(primary), sorted_desc(secondary)}; }

std::vector<int> SplitSequence::concatenated() const { return concat(primary, secondary); }

SplittedBipartiteSequence SplittedBipartiteSequence::canonical() const {
  return {sorted_desc(primary), sorted_desc(secondary)};
}

std::vector<CanonicalDecomposition::Block> CanonicalDecomposition::blocks() const {
  std::size_t n = tail.size();
  for (const auto& c : components) n += c.size();
  std::vector<Block> out;
  std::size_t lo = 0;
  std::size_t hi = n;
  for (const GoodPair& step : steps) {
    out.push_back({lo, lo + step.p, hi - step.q, hi});
    lo += step.p;
    hi -= step.q;
  }
  return out;
}

std::size_t CanonicalDecomposition::tail_begin() const {
  std::size_t lo = 0;
  for (const GoodPair& step : steps) lo += step.p;
  return lo;
}

std::vector<BipartiteDecomposition::Block> BipartiteDecomposition::blocks() const {
  std::size_t primaries = 0;
  std::size_t secondaries = 0;
  if (!factors.empty()) {
    const auto total = recompose_bipartite(factors);
    primaries = total.primary.size();
    secondaries = total.secondary.size();
  }
  std::vector<Block> out;
  std::size_t lo = 0;
  std::size_t hi = secondaries;
  for (const GoodPair& step : steps) {
    out.push_back({lo, lo + step.p, step.q, hi});
    lo += step.p;
    hi = step.q;
  }
  if (!factors.empty()) out.push_back({lo, primaries, 0, hi});
  return out;
}

bool is_valid_split(const SplitSequence& s) {
  if (s.primary.empty() && s.secondary.empty()) return false;
  const int k = as_int(s.primary.size());
  std::vector<int> reduced;
  reduced.reserve(s.primary.size());
  for (int x : s.primary) {
    if (x < k - 1) return false;
    reduced.push_back(x - (k - 1));
  }
  return gale_ryser({reduced, s.secondary});
}

std::optional<SplitSequence> is_split(const DegreeSequence& d) {
  if (!erdos_gallai(d)) throw NotGraphical("degree sequence is not graphical");
  const std::vector<int> c = d.canonical();
  if (c.empty()) return std::nullopt;
  std::size_t m = 0;
  while (m < c.size() && c[m] >= as_int(m)) ++m;  // c[m] is d_{m+1} >= m
  const std::int64_t head = std::accumulate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(m), std::int64_t{0});
  const std::int64_t rest = std::accumulate(c.begin() + static_cast<std::ptrdiff_t>(m), c.end(), std::int64_t{0});
  const auto mm = static_cast<std::int64_t>(m);
  if (head != mm * (mm - 1) + rest) return std::nullopt;
  return SplitSequence{slice(c, 0, m), slice(c, m, c.size())};
}

std::vector<GoodPair> good_pairs(const std::vector<int>& d) {
  const std::size_t n = d.size();
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
  std::vector<GoodPair> out;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; p + q < n; ++q) {
      if (p + q == 0) continue;
      const auto pp = static_cast<std::int64_t>(p);
      const auto rhs = pp * static_cast<std::int64_t>(n - q - 1) + (prefix[n] - prefix[n - q]);
      if (prefix[p] == rhs) out.push_back({p, q});
    }
  }
  return out;
}

CanonicalDecomposition canonical_decompose(const DegreeSequence& d) {
  if (!erdos_gallai(d)) throw NotGraphical("degree sequence is not graphical");
  CanonicalDecomposition out;
  std::vector<int> cur = d.canonical();
  while (!cur.empty()) {
    const auto pairs = good_pairs(cur);
    if (pairs.empty()) break;
    const GoodPair pq = pairs.front();
    const std::size_t n = cur.size();
    const std::size_t middle = n - pq.p - pq.q;
    out.components.push_back({shifted(slice(cur, 0, pq.p), -as_int(middle)), slice(cur, n - pq.q, n)});
    out.steps.push_back(pq);
    cur = shifted(slice(cur, pq.p, n - pq.q), -as_int(pq.p));
  }
  out.tail = std::move(cur);
  return out;
}

DegreeSequence compose(const SplitSequence& s, const DegreeSequence& g) {
  if (!is_valid_split(s)) throw InvalidSplit("left operand is not a valid split sequence");
  if (!erdos_gallai(g)) throw NotGraphical("right operand is not graphical");
  return DegreeSequence(compose_unchecked(s, g.degrees()));
}

SplitSequence compose(const SplitSequence& s, const SplitSequence& t) {
  if (!is_valid_split(s) || !is_valid_split(t)) throw InvalidSplit("operand is not a valid split sequence");
  const int shift_u = as_int(t.size());
  const int shift_t = as_int(s.primary.size());
  return {concat(shifted(s.primary, shift_u), shifted(t.primary, shift_t)),
          concat(s.secondary, shifted(t.secondary, shift_t))};
}

std::vector<int> recompose(const CanonicalDecomposition& decomposition) {
  std::vector<int> cur = decomposition.tail;
  for (auto it = decomposition.components.rbegin(); it != decomposition.components.rend(); ++it) {
    cur = compose_unchecked(*it, cur);
  }
  return sorted_desc(std::move(cur));
}

SplittedBipartiteSequence psi(const SplitSequence& s) {
  if (!is_valid_split(s)) throw InvalidSplit("not a valid split sequence");
  const int k = as_int(s.primary.size());
  return {shifted(s.primary, -(k - 1)), s.secondary};
}

SplitSequence psi_inverse(const SplittedBipartiteSequence& b) {
  if (b.primary.empty() && b.secondary.empty()) throw InvalidSplit("both classes empty");
  const int secondary_size = as_int(b.secondary.size());
  for (int x : b.primary) {
    if (x < 0 || x > secondary_size) throw InvalidSplit("primary degree exceeds the secondary class size");
  }
  const int k = as_int(b.primary.size());
  return {shifted(b.primary, k - 1), b.secondary};
}

SplittedBipartiteSequence compose_bipartite(const SplittedBipartiteSequence& a, const SplittedBipartiteSequence& b) {
  if (!gale_ryser(a.as_bipartite()) || !gale_ryser(b.as_bipartite())) {
    throw NotGraphical("operand is not a graphical bipartite sequence");
  }
  return compose_bipartite_unchecked(a, b);
}

std::vector<GoodPair> bipartite_decomposable(const SplittedBipartiteSequence& sb) {
  const std::size_t nu = sb.primary.size();
  const std::size_t nw = sb.secondary.size();
  std::vector<std::int64_t> prefix(nu + 1, 0);
  for (std::size_t i = 0; i < nu; ++i) prefix[i + 1] = prefix[i] + sb.primary[i];
  std::vector<std::int64_t> suffix(nw + 1, 0);  // suffix[q] = sum_{i>q} w_i
  for (std::size_t i = nw; i-- > 0;) suffix[i] = suffix[i + 1] + sb.secondary[i];
  std::vector<GoodPair> out;
  for (std::size_t p = 1; p < nu; ++p) {
    for (std::size_t q = 1; q < nw; ++q) {
      if (prefix[p] == static_cast<std::int64_t>(p * q) + suffix[q]) out.push_back({p, q});
    }
  }
  return out;
}

BipartiteDecomposition canonical_decompose_bipartite(const SplittedBipartiteSequence& sb) {
  if (!gale_ryser(sb.as_bipartite())) throw NotGraphical("bipartite sequence is not graphical");
  BipartiteDecomposition out;
  SplittedBipartiteSequence cur = sb.canonical();
  for (;;) {
    const auto pairs = bipartite_decomposable(cur);
    if (pairs.empty()) break;
    const GoodPair pq = pairs.front();
    const std::size_t nu = cur.primary.size();
    const std::size_t nw = cur.secondary.size();
    out.factors.push_back({shifted(slice(cur.primary, 0, pq.p), -as_int(pq.q)), slice(cur.secondary, pq.q, nw)});
    out.steps.push_back(pq);
    cur = {slice(cur.primary, pq.p, nu), shifted(slice(cur.secondary, 0, pq.q), -as_int(pq.p))};
  }
  out.factors.push_back(std::move(cur));
  return out;
}

SplittedBipartiteSequence recompose_bipartite(const std::vector<SplittedBipartiteSequence>& factors) {
  if (factors.empty()) return {};
  SplittedBipartiteSequence cur = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) cur = compose_bipartite_unchecked(cur, factors[i]);
  return cur.canonical();
}

RestrictedSplittedSequence compose_directed(const RestrictedSplittedSequence& a, const RestrictedSplittedSequence& b) {
  require_matching(a);
  require_matching(b);
  if (!restricted_bipartite_graphical(a.sequence.as_bipartite(), a.forbidden) ||
      !restricted_bipartite_graphical(b.sequence.as_bipartite(), b.forbidden)) {
    throw NotGraphical("operand has no realization avoiding its forbidden set");
  }
  RestrictedSplittedSequence out;
  out.sequence = compose_bipartite_unchecked(a.sequence, b.sequence);
  out.forbidden = a.forbidden;
  const std::size_t du = a.sequence.primary.size();
  const std::size_t dw = a.sequence.secondary.size();
  for (const auto& [u, w] : b.forbidden.pairs()) out.forbidden.insert(u + du, w + dw);
  return out;
}

bool greenhill_condition(const DegreeSequence& d) {
  const std::int64_t dmax = d.max_degree();
  return dmax >= 3 && 16 * dmax * dmax <= d.degree_sum();
}

}  // namespace degmix
