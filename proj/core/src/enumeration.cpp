#include "degmix/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "degmix/errors.hpp"

namespace degmix {

namespace {

void extend(std::vector<int>& cur, std::size_t length, int max, std::vector<std::vector<int>>& out) {
  if (cur.size() == length) {
    out.push_back(cur);
    return;
  }
  for (int x = max; x >= 0; --x) {
    cur.push_back(x);
    extend(cur, length, x, out);
    cur.pop_back();
  }
}

// Conjugate partition truncated to `length` parts: c[k-1] = #{j : w_j >= k}.
// Gale-Ryser for non-increasing u then reads
// sum_{i<=k} u_i <= sum_j min(w_j, k) = sum_{t<=k} c[t-1].
std::vector<int> min_prefix(const std::vector<int>& w, std::size_t length) {
  std::vector<int> c(length, 0);
  for (int x : w) {
    for (int k = 1; k <= x && static_cast<std::size_t>(k) <= length; ++k) ++c[static_cast<std::size_t>(k - 1)];
  }
  std::partial_sum(c.begin(), c.end(), c.begin());
  return c;
}

bool dominated(const std::vector<int>& u, const std::vector<int>& cap) {
  int prefix = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    prefix += u[k];
    if (prefix > cap[k]) return false;
  }
  return true;
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool almost_regular(const std::vector<int>& v) { return v.empty() || v.front() - v.back() <= 1; }

}  // namespace

std::vector<std::vector<int>> nonincreasing_sequences(std::size_t length, int max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend(cur, length, max, out);
  return out;
}

BigInt count_almost_half_regular(std::size_t m) {
  if (m == 0) throw InvalidInput("m must be positive");
  BigInt binom = 1;
  for (std::size_t i = 1; i <= m; ++i) binom = binom * (m + i) / i;
  return 2 * binom - BigInt(m) * m - 1;
}

BigInt count_almost_half_regular_exhaustive(std::size_t m, std::size_t max_m) {
  if (m == 0) throw InvalidInput("m must be positive");
  if (m > max_m) throw TooLarge("m exceeds the exhaustive cap");
  const auto seqs = nonincreasing_sequences(m, static_cast<int>(m));
  std::vector<std::vector<int>> caps;
  for (const auto& w : seqs) caps.push_back(min_prefix(w, m));
  BigInt count = 0;
  for (const auto& u : seqs) {
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      const auto& w = seqs[j];
      if (!almost_regular(u) && !almost_regular(w)) continue;
      if (sum(u) == sum(w) && dominated(u, caps[j])) ++count;
    }
  }
  return count;
}

BigInt count_bipartite_graphical(std::size_t n, unsigned jobs, std::size_t max_n) {
  if (n > max_n) throw TooLarge("n exceeds the census cap");
  if (n == 0) return 1;
  const auto seqs = nonincreasing_sequences(n, static_cast<int>(n));
  std::map<int, std::vector<std::vector<int>>> caps_by_sum;
  for (const auto& w : seqs) caps_by_sum[sum(w)].push_back(min_prefix(w, n));
  jobs = std::max(1U, jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  const auto work = [&](unsigned t) {
    for (std::size_t i = t; i < seqs.size(); i += jobs) {
      for (const auto& cap : caps_by_sum.at(sum(seqs[i]))) {
        if (dominated(seqs[i], cap)) ++partial[t];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  BigInt total = 0;
  for (std::uint64_t x : partial) total += x;
  return total;
}

BigInt count_composed_class(std::size_t n, std::size_t block, unsigned jobs) {
  if (block == 0 || n % block != 0) throw DivisibilityError("block size must divide n");
  return boost::multiprecision::pow(count_bipartite_graphical(block, jobs), static_cast<unsigned>(n / block));
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace degmix
