#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "build.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "prng.hpp"
#include "sequences.hpp"

namespace seqdig {

struct PatternEmbedding {
  std::string pattern;
  // pattern vertex -> host vertex, ordered by pattern vertex label
  std::vector<std::pair<std::string, std::string>> map;
};

struct ClassDecision {
  bool member = false;
  std::optional<SequenceSet> sequences;       // positive witness, g(sequences) = input
  std::optional<PatternEmbedding> forbidden;  // negative witness, verified embedding
};

/// Induced-subdigraph search: an injective map realizing h inside g such that
/// arcs match exactly in both directions. Exhaustive backtracking with
/// in/out-degree pruning; first embedding in canonical order.
inline std::optional<std::vector<int>> contains_induced(const Digraph& g, const Digraph& h) {
  if (h.order() > 6) fail(errc::pattern_too_large, "pattern has more than 6 vertices");
  int p = h.order(), n = g.order();
  if (p > n) return std::nullopt;
  std::vector<int> map(static_cast<size_t>(p), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  auto feasible = [&](int d, int x) {
    if (g.outdeg(x) < h.outdeg(d) || g.indeg(x) < h.indeg(d)) return false;
    for (int e = 0; e < d; ++e) {
      int y = map[static_cast<size_t>(e)];
      if (g.has_arc(y, x) != h.has_arc(e, d)) return false;
      if (g.has_arc(x, y) != h.has_arc(d, e)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int d) -> bool {
    if (d == p) return true;
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<size_t>(x)] || !feasible(d, x)) continue;
      used[static_cast<size_t>(x)] = true;
      map[static_cast<size_t>(d)] = x;
      if (self(self, d + 1)) return true;
      used[static_cast<size_t>(x)] = false;
      map[static_cast<size_t>(d)] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int mask_bit(int n, int i, int j) { return i * (n - 1) + (j - (j > i ? 1 : 0)); }

inline uint64_t permute_mask(int n, uint64_t mask, const std::vector<int>& perm) {
  uint64_t r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> mask_bit(n, i, j)) & 1u)
        r |= uint64_t{1} << mask_bit(n, perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  return r;
}

inline uint64_t canonical_mask(int n, uint64_t mask, const std::vector<std::vector<int>>& perms) {
  uint64_t best = ~uint64_t{0};
  for (const auto& p : perms) best = std::min(best, permute_mask(n, mask, p));
  return best;
}

inline uint64_t canonical_mask(int n, uint64_t mask) {
  return canonical_mask(n, mask, all_permutations(n));
}

}  // namespace detail

inline const Digraph& pattern_C3() {
  static const Digraph d =
      Digraph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  return d;
}

inline const Digraph& pattern_twoK1() {
  static const Digraph d = Digraph::make({"a", "b"}, {});
  return d;
}

inline const Digraph& pattern_K2_bi() {
  static const Digraph d = Digraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  return d;
}

inline const Digraph& pattern_twoP2() {
  static const Digraph d =
      Digraph::make({"a", "b", "c", "d"}, {{"c", "a"}, {"d", "b"}});
  return d;
}

inline const Digraph& pattern_co_twoP2() {
  static const Digraph d = complement(pattern_twoP2());
  return d;
}

inline const Digraph& pattern_D0() {
  static const Digraph d = sequence_digraph(make_sequences({{"c", "a", "b", "c"}}));
  return d;
}

inline const Digraph& pattern_D6() {
  static const Digraph d =
      sequence_digraph(make_sequences({{"a", "b", "a", "c", "b", "d", "c", "d"}}));
  return d;
}

namespace detail {

inline PatternEmbedding embedding_of(const std::string& name, const Digraph& g,
                                     const Digraph& h, const std::vector<int>& map) {
  PatternEmbedding e;
  e.pattern = name;
  for (int i = 0; i < h.order(); ++i)
    e.map.emplace_back(h.label(i), g.label(map[static_cast<size_t>(i)]));
  return e;
}

/// First forbidden pattern found among the given (name, pattern) probes.
inline std::optional<PatternEmbedding> find_forbidden(
    const Digraph& g, const std::vector<std::pair<std::string, const Digraph*>>& probes) {
  for (const auto& [name, h] : probes)
    if (auto m = contains_induced(g, *h)) return embedding_of(name, g, *h, *m);
  return std::nullopt;
}

inline bool is_transitive_tournament(const Digraph& g) {
  auto p = structural_predicates(g);
  return p.tournament && p.transitive;
}

/// Greedy peel of a vertex with all out-arcs present among the remaining
/// vertices; succeeds exactly when a spanning transitive tournament exists.
/// When two vertices are simultaneously full-out, extracting either leaves
/// the other full-out, so the lexicographically smallest choice cannot
/// dead-end.
inline bool spanning_transitive_tournament_exists(const Digraph& g) {
  int n = g.order();
  Bitset remaining(n);
  for (int v = 0; v < n; ++v) remaining.set(v);
  for (int step = n; step > 0; --step) {
    int pick = -1;
    remaining.for_each([&](int v) {
      if (pick != -1) return;
      int deg = 0;
      remaining.for_each([&](int u) {
        if (u != v && g.has_arc(v, u)) ++deg;
      });
      if (deg == step - 1) pick = v;
    });
    if (pick == -1) return false;
    remaining.reset(pick);
  }
  return true;
}

inline bool s12_constructive(const Digraph& g) {
  if (g.order() == 0) return true;
  auto p = structural_predicates(g);
  if (!p.semicomplete) return false;
  Digraph co = complement(g);
  if (!structural_predicates(co).transitive) return false;
  if (contains_induced(co, pattern_twoP2())) return false;
  return spanning_transitive_tournament_exists(g);
}

}  // namespace detail

/// Sequence for a transitive tournament by repeatedly extracting the
/// out-dominating source; g({q}) = input with one item per type.
inline Sequence reconstruct_S11(const Digraph& g) {
  int n = g.order();
  Sequence q{"q1", {}};
  Bitset remaining(n);
  for (int v = 0; v < n; ++v) remaining.set(v);
  for (int step = n; step > 0; --step) {
    int pick = -1;
    remaining.for_each([&](int v) {
      if (pick != -1) return;
      int od = 0, id = 0;
      remaining.for_each([&](int u) {
        if (u == v) return;
        if (g.has_arc(v, u)) ++od;
        if (g.has_arc(u, v)) ++id;
      });
      if (od == step - 1 && id == 0) pick = v;
    });
    if (pick == -1)
      fail(errc::not_in_class, "digraph is not a transitive tournament");
    q.items.push_back(g.label(pick));
    remaining.reset(pick);
  }
  if (sequence_digraph(SequenceSet({q})) != g)
    fail(errc::not_in_class, "digraph is not a transitive tournament");
  return q;
}

/// Membership in the one-sequence one-item-per-type class: transitive
/// tournaments. With crosscheck on, the equivalent characterizations
/// (C3-free tournament, pairwise distinct outdegrees, forbidden patterns)
/// are evaluated as well and must agree.
inline ClassDecision is_S11(const Digraph& g, bool crosscheck = true) {
  int n = g.order();
  bool constructive = detail::is_transitive_tournament(g);
  if (crosscheck) {
    auto p = structural_predicates(g);
    bool c3_free_tournament = p.tournament && !contains_induced(g, pattern_C3());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    bool distinct = p.tournament;
    if (distinct)
      for (int v = 0; v < n; ++v) {
        int od = g.outdeg(v);
        if (od >= n || seen[static_cast<size_t>(od)]) {
          distinct = false;
          break;
        }
        seen[static_cast<size_t>(od)] = true;
      }
    bool forbidden_free = !contains_induced(g, pattern_twoK1()) &&
                          !contains_induced(g, pattern_K2_bi()) &&
                          !contains_induced(g, pattern_C3());
    if (constructive != c3_free_tournament || constructive != distinct ||
        constructive != forbidden_free)
      fail(errc::cross_check_failed, "S_{1,1} characterizations disagree");
  }
  ClassDecision d;
  d.member = constructive;
  if (d.member) {
    if (n == 0)
      d.sequences = SequenceSet{};
    else
      d.sequences = SequenceSet({reconstruct_S11(g)});
  } else {
    d.forbidden = detail::find_forbidden(
        g, {{"2K1", &pattern_twoK1()}, {"K2_bi", &pattern_K2_bi()}, {"C3", &pattern_C3()}});
  }
  return d;
}

struct Sk1Result {
  std::optional<int> k;  // minimal k when member of some S_{k,1}
  SequenceSet sequences;
  std::optional<PatternEmbedding> forbidden;
};

/// Decides membership in S_{k,1} for minimal k: every weakly connected
/// component must be a transitive tournament.
inline Sk1Result classify_Sk1(const Digraph& g) {
  Sk1Result r;
  std::vector<Sequence> seqs;
  auto comps = weak_components(g);
  for (const auto& comp : comps) {
    Digraph sub = induced_ids(g, comp);
    if (!detail::is_transitive_tournament(sub)) {
      r.forbidden = detail::find_forbidden(
          sub,
          {{"K2_bi", &pattern_K2_bi()}, {"2K1", &pattern_twoK1()}, {"C3", &pattern_C3()}});
      return r;
    }
    Sequence q = reconstruct_S11(sub);
    q.name = "q" + std::to_string(seqs.size() + 1);
    seqs.push_back(std::move(q));
  }
  r.k = static_cast<int>(comps.size());
  r.sequences = SequenceSet(std::move(seqs));
  return r;
}

/// Sequence with at most two items per type for a digraph in S_{1,2}: pull
/// out a full-outdegree vertex, strip its out-arcs, flush newly isolated
/// vertices. Ties go lexicographically first; if the rebuild check fails the
/// remaining tie choices are explored (up to 12 vertices) before giving up.
inline Sequence reconstruct_S12(const Digraph& g) {
  int n = g.order();
  bool backtrack = n <= 12;

  std::vector<Bitset> out(static_cast<size_t>(n), Bitset(n));
  for (int v = 0; v < n; ++v) out[static_cast<size_t>(v)] = g.out(v);
  Bitset remaining(n);
  for (int v = 0; v < n; ++v) remaining.set(v);
  std::vector<std::string> items;

  auto indeg_in = [&](int v) {
    int d = 0;
    remaining.for_each([&](int u) {
      if (u != v && out[static_cast<size_t>(u)].test(v)) ++d;
    });
    return d;
  };
  auto outdeg_in = [&](int v) {
    int d = 0;
    remaining.for_each([&](int u) {
      if (u != v && out[static_cast<size_t>(v)].test(u)) ++d;
    });
    return d;
  };
  auto flush_isolated = [&]() {
    bool again = true;
    while (again) {
      again = false;
      remaining.for_each([&](int v) {
        if (!again && outdeg_in(v) == 0 && indeg_in(v) == 0) {
          items.push_back(g.label(v));
          remaining.reset(v);
          again = true;
        }
      });
    }
  };

  auto rec = [&](auto&& self) -> bool {
    int live = remaining.count();
    if (live == 0) return sequence_digraph(make_sequences({items})) == g;
    std::vector<int> candidates;
    remaining.for_each([&](int v) {
      if (outdeg_in(v) == live - 1) candidates.push_back(v);
    });
    for (int v : candidates) {
      auto saved_out = out;
      auto saved_remaining = remaining;
      auto saved_items = items;
      items.push_back(g.label(v));
      out[static_cast<size_t>(v)] = Bitset(n);
      if (indeg_in(v) == 0) remaining.reset(v);
      flush_isolated();
      if (self(self)) return true;
      out = std::move(saved_out);
      remaining = saved_remaining;
      items = std::move(saved_items);
      if (!backtrack) break;
    }
    return false;
  };

  // vertices isolated from the start are flushed first (covers n = 1)
  flush_isolated();
  if (!rec(rec)) fail(errc::not_in_class, "digraph is not in S_{1,2}");
  return Sequence{"q1", items};
}

namespace detail {

inline bool s12_forbidden_free(const Digraph& g, const Digraph& d4) {
  return !contains_induced(g, pattern_twoK1()) && !contains_induced(g, pattern_C3()) &&
         !contains_induced(g, d4) && !contains_induced(g, pattern_co_twoP2());
}

}  // namespace detail

/// Derives the one remaining 3-vertex forbidden pattern for S_{1,2}: the
/// unique semicomplete non-C3 pattern whose exclusion together with
/// {co(2P2), 2K1, C3} matches the constructive recognizer on every digraph
/// with up to 4 vertices (and on seeded random semicomplete digraphs used as
/// a tie-breaker, which has never been needed).
inline Digraph derive_D4_uncached() {
  auto perms3 = detail::all_permutations(3);
  // mask of C3: arcs (0,1),(1,2),(2,0)
  uint64_t c3_mask = (uint64_t{1} << detail::mask_bit(3, 0, 1)) |
                     (uint64_t{1} << detail::mask_bit(3, 1, 2)) |
                     (uint64_t{1} << detail::mask_bit(3, 2, 0));
  uint64_t c3_canon = detail::canonical_mask(3, c3_mask, perms3);

  std::vector<uint64_t> candidates;
  for (uint64_t mask = 0; mask < (uint64_t{1} << 6); ++mask) {
    if (detail::canonical_mask(3, mask, perms3) != mask) continue;  // one per iso class
    if (mask == c3_canon) continue;
    Digraph h = detail::digraph_from_mask(3, mask);
    if (!structural_predicates(h).semicomplete) continue;
    candidates.push_back(mask);
  }
  if (candidates.empty()) fail(errc::derivation_ambiguous, "no D4 candidates");

  auto agrees_on = [&](const Digraph& g, const Digraph& cand) {
    return detail::s12_constructive(g) == detail::s12_forbidden_free(g, cand);
  };

  std::vector<uint64_t> survivors;
  for (uint64_t mask : candidates) {
    Digraph cand = detail::digraph_from_mask(3, mask);
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n)
      for (uint64_t gm = 0; gm < (uint64_t{1} << (n * (n - 1))) && ok; ++gm)
        if (!agrees_on(detail::digraph_from_mask(n, gm), cand)) ok = false;
    if (ok) survivors.push_back(mask);
  }

  if (survivors.size() > 1) {
    // tie-break on random semicomplete digraphs with n <= 8
    std::vector<uint64_t> still;
    for (uint64_t mask : survivors) {
      Digraph cand = detail::digraph_from_mask(3, mask);
      bool ok = true;
      SplitMix64 r2(20260809);
      for (int it = 0; it < 2000 && ok; ++it) {
        int n = 3 + static_cast<int>(r2.below(6));
        uint64_t gm = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            switch (r2.below(3)) {
              case 0: gm |= uint64_t{1} << detail::mask_bit(n, i, j); break;
              case 1: gm |= uint64_t{1} << detail::mask_bit(n, j, i); break;
              default:
                gm |= uint64_t{1} << detail::mask_bit(n, i, j);
                gm |= uint64_t{1} << detail::mask_bit(n, j, i);
            }
          }
        if (!agrees_on(detail::digraph_from_mask(n, gm), cand)) ok = false;
      }
      if (ok) still.push_back(mask);
    }
    survivors = std::move(still);
  }

  if (survivors.size() != 1)
    fail(errc::derivation_ambiguous,
         "expected exactly one D4 candidate, found " + std::to_string(survivors.size()));
  return detail::digraph_from_mask(3, survivors[0]);
}

inline const Digraph& pattern_D4() {
  static const Digraph d = derive_D4_uncached();
  return d;
}

inline Digraph derive_D4() { return pattern_D4(); }

/// Named probe digraphs used as forbidden-subdigraph patterns.
struct PatternCatalog {
  const Digraph& C3 = pattern_C3();
  const Digraph& twoK1 = pattern_twoK1();
  const Digraph& K2_bi = pattern_K2_bi();
  const Digraph& twoP2 = pattern_twoP2();
  const Digraph& co_twoP2 = pattern_co_twoP2();
  const Digraph& D0 = pattern_D0();
  const Digraph& D6 = pattern_D6();
  const Digraph& D4 = pattern_D4();

  static const PatternCatalog& instance() {
    static PatternCatalog c;
    return c;
  }
};

/// Membership in S_{1,2}: semicomplete with transitive, 2P2-free complement
/// and a spanning transitive tournament. With crosscheck on, the
/// forbidden-set route {co(2P2), 2K1, C3, D4} is evaluated too and must
/// agree.
inline ClassDecision is_S12(const Digraph& g, bool crosscheck = true) {
  bool constructive = detail::s12_constructive(g);
  if (crosscheck) {
    bool forb = detail::s12_forbidden_free(g, pattern_D4());
    if (constructive != forb)
      fail(errc::cross_check_failed, "S_{1,2} characterizations disagree");
  }
  ClassDecision d;
  d.member = constructive;
  if (d.member) {
    if (g.order() == 0)
      d.sequences = SequenceSet{};
    else
      d.sequences = SequenceSet({reconstruct_S12(g)});
  } else {
    d.forbidden = detail::find_forbidden(g, {{"2K1", &pattern_twoK1()},
                                             {"C3", &pattern_C3()},
                                             {"D4", &pattern_D4()},
                                             {"co_2P2", &pattern_co_twoP2()}});
  }
  return d;
}

}  // namespace seqdig
