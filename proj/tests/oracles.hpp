#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// under test except for plain value types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<int, int>>;
using Seq = std::vector<int>;

inline Pairs all_pairs(int n) {
  Pairs p;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) p.emplace_back(a, b);
  }
  return p;
}

inline Seq sorted_desc(Seq s) {
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

/// Calls f(mask, degrees) for every labeled simple graph on n vertices;
/// bit k of mask is pair all_pairs(n)[k].
inline void for_each_graph(int n, const std::function<void(std::uint64_t, const Seq&)>& f) {
  const Pairs pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  Seq deg(static_cast<std::size_t>(n));
  for (std::uint64_t m = 0; m < total; ++m) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (m >> k & 1U) {
        ++deg[static_cast<std::size_t>(pairs[k].first)];
        ++deg[static_cast<std::size_t>(pairs[k].second)];
      }
    }
    f(m, deg);
  }
}

/// Labeled realization counts of every degree vector on n vertices.
inline std::map<Seq, std::uint64_t> simple_counts(int n) {
  std::map<Seq, std::uint64_t> out;
  for_each_graph(n, [&](std::uint64_t, const Seq& d) { ++out[d]; });
  return out;
}

/// Non-increasing graphical sequences on n vertices.
inline std::set<Seq> graphical_sorted(int n) {
  std::set<Seq> out;
  for (const auto& [d, c] : simple_counts(n)) out.insert(sorted_desc(d));
  return out;
}

/// Bipartite graphs on a + b vertices (U first); cross pair (i, j) is bit
/// i * b + j. Calls f(mask, u-degrees, w-degrees).
inline void for_each_bipartite(int a, int b, const std::function<void(std::uint64_t, const Seq&, const Seq&)>& f) {
  const int bits = a * b;
  Seq du(static_cast<std::size_t>(a)), dw(static_cast<std::size_t>(b));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
    std::fill(du.begin(), du.end(), 0);
    std::fill(dw.begin(), dw.end(), 0);
    for (int k = 0; k < bits; ++k) {
      if (m >> k & 1U) {
        ++du[static_cast<std::size_t>(k / b)];
        ++dw[static_cast<std::size_t>(k % b)];
      }
    }
    f(m, du, dw);
  }
}

inline std::map<std::pair<Seq, Seq>, std::uint64_t> bipartite_counts(int a, int b) {
  std::map<std::pair<Seq, Seq>, std::uint64_t> out;
  for_each_bipartite(a, b, [&](std::uint64_t, const Seq& u, const Seq& w) { ++out[{u, w}]; });
  return out;
}

/// Realizations avoiding the forbidden (i, j) cross pairs.
inline std::uint64_t bipartite_count(const Seq& u, const Seq& w, const std::set<std::pair<int, int>>& forbidden = {}) {
  const int a = static_cast<int>(u.size());
  const int b = static_cast<int>(w.size());
  std::uint64_t count = 0;
  for_each_bipartite(a, b, [&](std::uint64_t m, const Seq& du, const Seq& dw) {
    if (du != u || dw != w) return;
    for (const auto& [i, j] : forbidden) {
      if (m >> (i * b + j) & 1U) return;
    }
    ++count;
  });
  return count;
}

/// Digraphs without loops on n vertices; counts per (out, in).
inline std::map<std::pair<Seq, Seq>, std::uint64_t> directed_counts(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) arcs.emplace_back(x, y);
    }
  }
  std::map<std::pair<Seq, Seq>, std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << arcs.size()); ++m) {
    Seq o(static_cast<std::size_t>(n), 0), i(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (m >> k & 1U) {
        ++o[static_cast<std::size_t>(arcs[k].first)];
        ++i[static_cast<std::size_t>(arcs[k].second)];
      }
    }
    ++out[{o, i}];
  }
  return out;
}

/// ⟨U, W⟩ is realizable with U a clique and W independent: the cross part
/// (U - (|U| - 1), W) has a bipartite realization.
inline bool split_valid_uncached(const Seq& U, const Seq& W) {
  if (U.empty() && W.empty()) return false;
  Seq cross;
  for (int x : U) {
    const int c = x - (static_cast<int>(U.size()) - 1);
    if (c < 0 || c > static_cast<int>(W.size())) return false;
    cross.push_back(c);
  }
  for (int x : W) {
    if (x > static_cast<int>(U.size())) return false;
  }
  if (U.empty()) return std::all_of(W.begin(), W.end(), [](int x) { return x == 0; });
  if (W.empty()) return std::all_of(cross.begin(), cross.end(), [](int x) { return x == 0; });
  return bipartite_count(cross, W) > 0;
}

inline bool split_valid(const Seq& U, const Seq& W) {
  static std::map<std::pair<Seq, Seq>, bool> cache;
  const auto key = std::make_pair(sorted_desc(U), sorted_desc(W));
  const auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache[key] = split_valid_uncached(key.first, key.second);
}

/// Every way to split the multiset d into three labeled sub-multisets, each
/// returned sorted non-increasingly (duplicates removed).
inline std::set<std::array<Seq, 3>> three_way_splits(const Seq& d) {
  std::set<std::array<Seq, 3>> out;
  const std::size_t n = d.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::array<Seq, 3> parts;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      parts[c % 3].push_back(d[i]);
      c /= 3;
    }
    for (auto& p : parts) p = sorted_desc(p);
    out.insert(parts);
  }
  return out;
}

struct SplitFactor {
  Seq U;
  Seq W;
  auto operator<=>(const SplitFactor&) const = default;
};

/// d = ⟨U, W⟩ ∘ G over all multiset splits; returns (factor, G) with G
/// non-empty and graphical.
class Factorizer {
 public:
  explicit Factorizer(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      for (const Seq& s : graphical_sorted(n)) graphical_.insert(s);
    }
  }

  bool graphical(const Seq& s) const { return graphical_.count(sorted_desc(s)) != 0; }

  std::vector<std::pair<SplitFactor, Seq>> splittings(const Seq& d) const {
    std::vector<std::pair<SplitFactor, Seq>> out;
    for (const auto& [U, W, G] : three_way_splits(d)) {
      if (G.empty() || (U.empty() && W.empty())) continue;
      SplitFactor f{U, W};
      Seq g = G;
      bool ok = true;
      for (int& x : f.U) {
        x -= static_cast<int>(G.size());
        ok = ok && x >= 0;
      }
      for (int& x : g) {
        x -= static_cast<int>(U.size());
        ok = ok && x >= 0;
      }
      if (!ok || !split_valid(f.U, f.W) || !graphical(g)) continue;
      out.emplace_back(f, sorted_desc(g));
    }
    return out;
  }

  /// ⟨U, W⟩ = ⟨A, B⟩ ∘ ⟨C, D⟩ for some non-empty split factors.
  bool split_decomposable(const SplitFactor& s) const {
    const std::size_t nu = s.U.size(), nw = s.W.size();
    for (std::size_t mu = 0; mu < (std::size_t{1} << nu); ++mu) {
      for (std::size_t mw = 0; mw < (std::size_t{1} << nw); ++mw) {
        Seq A, B, C, D;
        for (std::size_t i = 0; i < nu; ++i) (mu >> i & 1U ? A : C).push_back(s.U[i]);
        for (std::size_t i = 0; i < nw; ++i) (mw >> i & 1U ? B : D).push_back(s.W[i]);
        if ((A.empty() && B.empty()) || (C.empty() && D.empty())) continue;
        const int second = static_cast<int>(C.size() + D.size());
        bool ok = true;
        for (int& x : A) {
          x -= second;
          ok = ok && x >= 0;
        }
        for (int& x : C) {
          x -= static_cast<int>(A.size());
          ok = ok && x >= 0;
        }
        for (int& x : D) {
          x -= static_cast<int>(A.size());
          ok = ok && x >= 0;
        }
        if (ok && split_valid(sorted_desc(A), sorted_desc(B)) && split_valid(sorted_desc(C), sorted_desc(D))) {
          return true;
        }
      }
    }
    return false;
  }

  /// All factorizations d = S_1 ∘ ... ∘ S_k ∘ T with every S_i an
  /// indecomposable split factor and T not decomposable.
  std::set<std::pair<std::vector<SplitFactor>, Seq>> factorizations(const Seq& d) const {
    const auto key = sorted_desc(d);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::pair<std::vector<SplitFactor>, Seq>> out;
    const auto splits = splittings(d);
    if (splits.empty()) out.insert({{}, sorted_desc(d)});
    for (const auto& [f, g] : splits) {
      if (split_decomposable(f)) continue;
      for (auto [rest, tail] : factorizations(g)) {
        rest.insert(rest.begin(), f);
        out.insert({rest, tail});
      }
    }
    memo_[key] = out;
    return out;
  }

 private:
  std::set<Seq> graphical_;
  mutable std::map<Seq, std::set<std::pair<std::vector<SplitFactor>, Seq>>> memo_;
};

}  // namespace oracle

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<std::vector<int>> {
  static String convert(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return (s + ")").c_str();
  }
};
}  // namespace doctest
#endif
