#pragma once

// Shared helpers for the test suites: seeded instance generators, unlabeled
// digraph enumeration, and independent oracles kept deliberately separate
// from the library implementations they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seqdig/seqdig.hpp"

namespace testsupport {

using namespace seqdig;

inline Digraph random_digraph(int n, SplitMix64& rng, int arc_percent = 40) {
  uint64_t mask = 0;
  for (int b = 0; b < n * (n - 1); ++b)
    if (rng.below(100) < static_cast<uint64_t>(arc_percent)) mask |= uint64_t{1} << b;
  return detail::digraph_from_mask(n, mask);
}

inline Digraph random_tournament(int n, SplitMix64& rng) {
  uint64_t mask = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.below(2))
        mask |= uint64_t{1} << detail::mask_bit(n, i, j);
      else
        mask |= uint64_t{1} << detail::mask_bit(n, j, i);
    }
  return detail::digraph_from_mask(n, mask);
}

inline Digraph random_semicomplete(int n, SplitMix64& rng) {
  uint64_t mask = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      switch (rng.below(3)) {
        case 0: mask |= uint64_t{1} << detail::mask_bit(n, i, j); break;
        case 1: mask |= uint64_t{1} << detail::mask_bit(n, j, i); break;
        default:
          mask |= uint64_t{1} << detail::mask_bit(n, i, j);
          mask |= uint64_t{1} << detail::mask_bit(n, j, i);
      }
    }
  return detail::digraph_from_mask(n, mask);
}

inline SequenceSet random_sequences(SplitMix64& rng, int max_k, int max_len, int max_types) {
  int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_k)));
  int types = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_types)));
  std::vector<std::vector<std::string>> items(static_cast<size_t>(k));
  for (auto& s : items) {
    int len = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_len)));
    for (int i = 0; i < len; ++i)
      s.push_back("t" + std::to_string(rng.below(static_cast<uint64_t>(types)) + 1));
  }
  return make_sequences(items);
}

inline Sequence random_sequence(SplitMix64& rng, int max_len, int max_types) {
  return random_sequences(rng, 1, max_len, max_types).seq(0);
}

/// Canonical representatives of all unlabeled digraphs on n vertices.
inline const std::vector<uint64_t>& unlabeled_digraphs(int n) {
  static std::map<int, std::vector<uint64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto perms = detail::all_permutations(n);
  std::vector<uint64_t> reps;
  uint64_t limit = uint64_t{1} << (n * (n - 1));
  for (uint64_t mask = 0; mask < limit; ++mask)
    if (detail::canonical_mask(n, mask, perms) == mask) reps.push_back(mask);
  return cache.emplace(n, std::move(reps)).first->second;
}

// ---- independent oracles ----

/// Number of Hamiltonian paths, by DP over (subset, last vertex).
inline long long hamiltonian_path_count(const Digraph& g) {
  int n = g.order();
  if (n == 0) return 0;
  std::vector<std::vector<long long>> dp(
      size_t{1} << n, std::vector<long long>(static_cast<size_t>(n), 0));
  for (int v = 0; v < n; ++v) dp[size_t{1} << v][static_cast<size_t>(v)] = 1;
  for (size_t s = 1; s < (size_t{1} << n); ++s)
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1) || dp[s][static_cast<size_t>(v)] == 0) continue;
      g.out(v).for_each([&](int w) {
        if (!(s >> w & 1)) dp[s | size_t{1} << w][static_cast<size_t>(w)] += dp[s][static_cast<size_t>(v)];
      });
    }
  long long total = 0;
  for (int v = 0; v < n; ++v) total += dp[(size_t{1} << n) - 1][static_cast<size_t>(v)];
  return total;
}

/// Quadratic check of the interleaving condition
/// first(t) < first(t') < last(t) < last(t').
inline bool simple_oracle(const Sequence& q) {
  std::map<std::string, std::pair<int, int>> span;
  for (int p = 1; p <= q.length(); ++p) {
    auto [it, fresh] = span.try_emplace(q.items[static_cast<size_t>(p - 1)], p, p);
    if (!fresh) it->second.second = p;
  }
  for (const auto& [t, a] : span)
    for (const auto& [t2, b] : span)
      if (t != t2 && a.first < b.first && b.first < a.second && a.second < b.second)
        return false;
  return true;
}

/// Maximum point overlap of the per-type intervals, counted position by
/// position.
inline int interval_omega_oracle(const Sequence& q) {
  std::map<std::string, std::pair<int, int>> span;
  for (int p = 1; p <= q.length(); ++p) {
    auto [it, fresh] = span.try_emplace(q.items[static_cast<size_t>(p - 1)], p, p);
    if (!fresh) it->second.second = p;
  }
  int best = 0;
  for (int p = 1; p <= q.length(); ++p) {
    int cover = 0;
    for (const auto& [t, fl] : span)
      if (fl.first <= p && p <= fl.second) ++cover;
    best = std::max(best, cover);
  }
  return best;
}

inline DirectedPathDecomposition bags(std::vector<std::vector<std::string>> b) {
  DirectedPathDecomposition x;
  x.bags = std::move(b);
  return x;
}

}  // namespace testsupport
