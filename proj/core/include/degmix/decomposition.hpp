#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "degmix/sequences.hpp"

namespace degmix {

/// Degree sequence of a split graph as ⟨U, W⟩: U induces a clique and W an
/// independent set. Degrees are those in the full split graph. The notation
/// is ordered; either class may be empty but not both.
struct SplitSequence {
  std::vector<int> primary;
  std::vector<int> secondary;

  std::size_t size() const noexcept { return primary.size() + secondary.size(); }
  /// Both classes sorted non-increasingly.
  SplitSequence canonical() const;
  std::vector<int> concatenated() const;
  bool operator==(const SplitSequence&) const = default;
};

/// Bipartite sequence with designated primary and secondary classes. The
/// primary class may contain zeros.
struct SplittedBipartiteSequence {
  std::vector<int> primary;
  std::vector<int> secondary;

  SplittedBipartiteSequence canonical() const;
  BipartiteDegreeSequence as_bipartite() const { return {primary, secondary}; }
  bool operator==(const SplittedBipartiteSequence&) const = default;
};

/// Splitted bipartite sequence whose realizations avoid a partial 1-factor.
struct RestrictedSplittedSequence {
  SplittedBipartiteSequence sequence;
  ForbiddenSet forbidden;

  bool operator==(const RestrictedSplittedSequence&) const = default;
};

struct GoodPair {
  std::size_t p = 0;
  std::size_t q = 0;
  auto operator<=>(const GoodPair&) const = default;
};

/// d = S_1 ∘ S_2 ∘ ... ∘ S_k ∘ tail. steps[i] is the good pair that split off
/// S_i from the sequence remaining at that point; S_i's primary degrees are
/// already reduced by the size of everything to its right, and every later
/// factor's degrees by the sizes of the primaries to its left.
struct CanonicalDecomposition {
  std::vector<SplitSequence> components;
  std::vector<int> tail;
  std::vector<GoodPair> steps;

  /// Canonical-order position ranges of each factor, [begin, end).
  struct Block {
    std::size_t primary_begin;
    std::size_t primary_end;
    std::size_t secondary_begin;
    std::size_t secondary_end;
  };
  std::vector<Block> blocks() const;
  std::size_t tail_begin() const;
};

/// d = B_1 ∘ ... ∘ B_k for a splitted bipartite sequence, each B_i
/// indecomposable. Factor i's primaries occupy a contiguous range of the
/// sorted primary class, its secondaries a contiguous range of the sorted
/// secondary class.
struct BipartiteDecomposition {
  std::vector<SplittedBipartiteSequence> factors;
  std::vector<GoodPair> steps;

  struct Block {
    std::size_t primary_begin;
    std::size_t primary_end;
    std::size_t secondary_begin;
    std::size_t secondary_end;
  };
  std::vector<Block> blocks() const;
};

/// ⟨U, W⟩ admits a realization with U a clique and W independent.
bool is_valid_split(const SplitSequence& s);

/// Hammer-Simeone recognition. U is the first m canonical vertices, m the
/// largest i with d_i >= i - 1. Throws NotGraphical.
std::optional<SplitSequence> is_split(const DegreeSequence& d);

/// All (p, q) with 0 < p + q < n and
/// sum_{i<=p} d_i = p (n - q - 1) + sum_{i>n-q} d_i, ascending.
/// Expects a non-increasing sequence.
std::vector<GoodPair> good_pairs(const std::vector<int>& d);

/// Throws NotGraphical.
CanonicalDecomposition canonical_decompose(const DegreeSequence& d);

/// (d(U) + |V(G)|, d(W), d(V(G)) + |U|) in that literal order.
/// Throws InvalidSplit or NotGraphical.
DegreeSequence compose(const SplitSequence& s, const DegreeSequence& g);
/// Split ∘ split is split: ⟨U ∪ X, W ∪ Y⟩.
SplitSequence compose(const SplitSequence& s, const SplitSequence& t);
/// Right fold of compose over the factors; the non-increasing sequence.
std::vector<int> recompose(const CanonicalDecomposition& decomposition);

SplittedBipartiteSequence psi(const SplitSequence& s);
/// Throws InvalidSplit when a primary degree exceeds |W| or both classes are empty.
SplitSequence psi_inverse(const SplittedBipartiteSequence& b);

/// Primary = U ∪ X, secondary = W ∪ Y, plus K_{U,Y}: U gains |Y|, Y gains |U|.
/// Literal (unsorted) order. Throws NotGraphical.
SplittedBipartiteSequence compose_bipartite(const SplittedBipartiteSequence& a, const SplittedBipartiteSequence& b);
/// All (p, q) with 0 < p < |U|, 0 < q < |W| and
/// sum_{i<=p} u_i = p q + sum_{i>q} w_i. Expects non-increasing classes.
std::vector<GoodPair> bipartite_decomposable(const SplittedBipartiteSequence& sb);
/// Throws NotGraphical.
BipartiteDecomposition canonical_decompose_bipartite(const SplittedBipartiteSequence& sb);
/// Left fold of compose_bipartite; canonical form.
SplittedBipartiteSequence recompose_bipartite(const std::vector<SplittedBipartiteSequence>& factors);

/// Bipartite composition with merged forbidden 1-factors (b's indices shifted
/// past a's). Throws ForbiddenSetNotMatching.
RestrictedSplittedSequence compose_directed(const RestrictedSplittedSequence& a, const RestrictedSplittedSequence& b);

/// 3 <= d_max <= sqrt(M) / 4, evaluated exactly as 16 d_max^2 <= M.
bool greenhill_condition(const DegreeSequence& d);

}  // namespace degmix
