#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "prng.hpp"
#include "sequences.hpp"

namespace seqdig {

/// Sequence digraph g(Q) by the left-to-right scan: arcs are emitted when an
/// item is the last occurrence of its type in the sequence, targets of all
/// types already opened; a type joins the open list at its first occurrence.
/// Runs in O(n + k * |types(Q)|^2). The first/last criterion below is the
/// independent second route to the same digraph.
inline Digraph sequence_digraph(const SequenceSet& q) {
  int t = q.type_count();
  PositionIndex pos(q);
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<bool>> arc_present(static_cast<size_t>(t),
                                             std::vector<bool>(static_cast<size_t>(t), false));
  std::vector<int> open;
  for (int i = 0; i < q.k(); ++i) {
    int ni = q.length(i);
    open.clear();
    open.push_back(q.item_type(i, 1));
    for (int j = 2; j <= ni; ++j) {
      int tj = q.item_type(i, j);
      if (j == pos.last(i, tj)) {
        for (int tp : open)
          if (tp != tj && !arc_present[static_cast<size_t>(tp)][static_cast<size_t>(tj)]) {
            arc_present[static_cast<size_t>(tp)][static_cast<size_t>(tj)] = true;
            arcs.emplace_back(tp, tj);
          }
      }
      if (j == pos.first(i, tj)) open.push_back(tj);
    }
  }
  return Digraph::from_ids(q.types(), arcs);
}

/// g(Q) via the first/last criterion: (u,v) is an arc iff some sequence has
/// first(q_i,u) < last(q_i,v).
inline Digraph sequence_digraph_oracle(const SequenceSet& q) {
  int t = q.type_count();
  PositionIndex pos(q);
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < t; ++u)
    for (int v = 0; v < t; ++v) {
      if (u == v) continue;
      for (int i = 0; i < q.k(); ++i)
        if (pos.first(i, u) < pos.last(i, v)) {
          arcs.emplace_back(u, v);
          break;
        }
    }
  return Digraph::from_ids(q.types(), arcs);
}

/// Arcs of the complement of g(Q), computed directly: (u,v) is a complement
/// arc iff every sequence has last(q_i,v) < first(q_i,u). Returned
/// lexicographically sorted by (u, v).
inline std::vector<Arc> complement_arcs(const SequenceSet& q) {
  int t = q.type_count();
  PositionIndex pos(q);
  std::vector<Arc> arcs;
  for (int u = 0; u < t; ++u)
    for (int v = 0; v < t; ++v) {
      if (u == v) continue;
      bool all = true;
      for (int i = 0; i < q.k() && all; ++i)
        if (!(pos.last(i, v) < pos.first(i, u))) all = false;
      if (all) arcs.emplace_back(q.types()[static_cast<size_t>(u)],
                                 q.types()[static_cast<size_t>(v)]);
    }
  return arcs;
}

/// Sequence system q(G): one two-item sequence per arc, each antiparallel
/// pair {(u,v),(v,u)} merged into a single [u,v,u], and one singleton
/// sequence per isolated vertex so that g(q(G)) = G holds on every digraph.
inline SequenceSet sequence_system(const Digraph& g) {
  std::vector<std::vector<std::string>> items;
  for (auto [u, v] : g.arc_ids()) {
    if (g.has_arc(v, u)) {
      if (v < u) continue;  // the pair is emitted once, at its smaller source
      items.push_back({g.label(u), g.label(v), g.label(u)});
    } else {
      items.push_back({g.label(u), g.label(v)});
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (g.outdeg(v) == 0 && g.indeg(v) == 0) items.push_back({g.label(v)});
  return make_sequences(items);
}

struct GeneratorSpec {
  enum class Family {
    transitive_tournament,        // n
    bidirectional_clique,         // n
    oriented_bipartite,           // n, m
    complement_of_k_tournaments,  // sizes
    random,                       // k, length, type_count, seed
  };
  Family family = Family::transitive_tournament;
  int n = 0;
  int m = 0;
  std::vector<int> sizes;
  int k = 0;
  int length = 0;
  int type_count = 0;
  uint64_t seed = 0;
  bool has_seed = false;
};

namespace detail {

inline std::vector<std::string> indexed_labels(const std::string& stem, int n) {
  std::vector<std::string> v;
  v.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace detail

inline SequenceSet generate(const GeneratorSpec& spec) {
  using Family = GeneratorSpec::Family;
  switch (spec.family) {
    case Family::transitive_tournament: {
      if (spec.n < 1) fail(errc::invalid_spec, "transitive_tournament needs n >= 1");
      return make_sequences({detail::indexed_labels("v", spec.n)});
    }
    case Family::bidirectional_clique: {
      if (spec.n < 1) fail(errc::invalid_spec, "bidirectional_clique needs n >= 1");
      auto labels = detail::indexed_labels("v", spec.n);
      std::vector<std::string> items = labels;
      items.insert(items.end(), labels.begin(), labels.end());
      return make_sequences({items});
    }
    case Family::oriented_bipartite: {
      if (spec.n < 1 || spec.m < 1) fail(errc::invalid_spec, "oriented_bipartite needs n, m >= 1");
      auto vs = detail::indexed_labels("v", spec.n);
      auto ws = detail::indexed_labels("w", spec.m);
      std::vector<std::string> items;
      items.insert(items.end(), ws.begin(), ws.end());
      items.insert(items.end(), ws.begin(), ws.end());
      items.insert(items.end(), vs.begin(), vs.end());
      items.insert(items.end(), vs.begin(), vs.end());
      return make_sequences({items});
    }
    case Family::complement_of_k_tournaments: {
      int k = static_cast<int>(spec.sizes.size());
      if (k < 1) fail(errc::invalid_spec, "complement_of_k_tournaments needs at least one size");
      for (int s : spec.sizes)
        if (s < 1) fail(errc::invalid_spec, "component sizes must be >= 1");
      std::vector<std::vector<std::string>> rev(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = spec.sizes[static_cast<size_t>(i)]; j >= 1; --j)
          rev[static_cast<size_t>(i)].push_back("c" + std::to_string(i + 1) + "v" +
                                                std::to_string(j));
      }
      std::vector<std::vector<std::string>> items;
      if (k == 1) {
        items.push_back(rev[0]);
      } else {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            std::vector<std::string> s = rev[static_cast<size_t>(i)];
            s.insert(s.end(), rev[static_cast<size_t>(j)].begin(), rev[static_cast<size_t>(j)].end());
            items.push_back(std::move(s));
          }
      }
      return make_sequences(items);
    }
    case Family::random: {
      if (!spec.has_seed) fail(errc::invalid_spec, "random family needs a seed");
      if (spec.k < 1 || spec.length < 1 || spec.type_count < 1)
        fail(errc::invalid_spec, "random needs k, length, type_count >= 1");
      SplitMix64 rng(spec.seed);
      std::vector<std::vector<std::string>> items(static_cast<size_t>(spec.k));
      for (auto& s : items)
        for (int j = 0; j < spec.length; ++j)
          s.push_back("t" + std::to_string(rng.below(static_cast<uint64_t>(spec.type_count)) + 1));
      return make_sequences(items);
    }
  }
  fail(errc::invalid_spec, "unknown generator family");
}

}  // namespace seqdig
