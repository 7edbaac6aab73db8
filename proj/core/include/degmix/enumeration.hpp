#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace degmix {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { formula, exhaustive };

struct CountReport {
  std::size_t parameter = 0;
  BigInt count;
  CountMethod method = CountMethod::formula;
};

/// Non-increasing sequences of the given length with entries in [0, max].
std::vector<std::vector<int>> nonincreasing_sequences(std::size_t length, int max);

/// Graphical bipartite pairs (u, w) on m+m, both non-increasing, where at
/// least one class has all degrees within 1 of each other:
/// 2 C(2m, m) - m^2 - 1. Throws InvalidInput for m = 0.
BigInt count_almost_half_regular(std::size_t m);
/// The same count by listing. Throws TooLarge above max_m.
BigInt count_almost_half_regular_exhaustive(std::size_t m, std::size_t max_m = 8);

/// Non-increasing pairs (u, w) on n+n with entries <= n, equal sums, passing
/// Gale-Ryser. Work is split over `jobs` threads; the result does not depend
/// on it. Throws TooLarge above max_n.
BigInt count_bipartite_graphical(std::size_t n, unsigned jobs = 1, std::size_t max_n = 10);

/// count_bipartite_graphical(block)^(n / block). Throws DivisibilityError
/// unless block divides n.
BigInt count_composed_class(std::size_t n, std::size_t block, unsigned jobs = 1);

std::string to_string(const BigInt& x);

}  // namespace degmix
