#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"

namespace seqdig {

using Arc = std::pair<std::string, std::string>;

struct PredicateReport {
  bool edgeless = false;
  bool tournament = false;
  bool semicomplete = false;
  bool complete_bioriented = false;
  bool oriented = false;
  bool transitive = false;
  bool quasi_transitive = false;
  bool acyclic = false;
};

struct DegreeReport {
  int max_out = 0;    // max outdegree
  int max_in = 0;     // max indegree
  int max_semi = 0;   // max(max_out, max_in)
  int max_total = 0;  // max over v of outdegree(v) + indegree(v)
};

/// Loop-free digraph over string-labeled vertices. Labels are assigned dense
/// ids in lexicographic order, so iteration and serialization are
/// deterministic. Arcs live in per-vertex out/in bitsets; arc queries are
/// O(1). Values are immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  static Digraph make(const std::vector<std::string>& vertices,
                      const std::vector<Arc>& arcs) {
    Digraph g;
    g.labels_ = vertices;
    std::sort(g.labels_.begin(), g.labels_.end());
    for (size_t i = 1; i < g.labels_.size(); ++i)
      if (g.labels_[i] == g.labels_[i - 1])
        fail(errc::duplicate_vertex, "duplicate vertex label: " + g.labels_[i]);
    g.init_adjacency();
    for (const auto& [u, v] : arcs) {
      auto ui = g.find_id(u), vi = g.find_id(v);
      if (!ui) fail(errc::unknown_endpoint, "arc endpoint not a vertex: " + u);
      if (!vi) fail(errc::unknown_endpoint, "arc endpoint not a vertex: " + v);
      if (*ui == *vi) fail(errc::loop_arc, "loop arc on vertex: " + u);
      g.add_arc(*ui, *vi);
    }
    return g;
  }

  /// Internal fast path: sorted unique labels plus id arcs, no revalidation.
  static Digraph from_ids(std::vector<std::string> sorted_labels,
                          const std::vector<std::pair<int, int>>& arc_ids) {
    Digraph g;
    g.labels_ = std::move(sorted_labels);
    g.init_adjacency();
    for (auto [u, v] : arc_ids) g.add_arc(u, v);
    return g;
  }

  int order() const { return static_cast<int>(labels_.size()); }
  long long arc_count() const { return arc_count_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int id) const { return labels_[static_cast<size_t>(id)]; }

  std::optional<int> find_id(const std::string& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  int id_of(const std::string& v) const {
    auto id = find_id(v);
    if (!id) fail(errc::unknown_vertex, "unknown vertex: " + v);
    return *id;
  }

  bool has_arc(int u, int v) const { return out_[static_cast<size_t>(u)].test(v); }
  bool has_arc(const std::string& u, const std::string& v) const {
    return has_arc(id_of(u), id_of(v));
  }

  const Bitset& out(int u) const { return out_[static_cast<size_t>(u)]; }
  const Bitset& in(int u) const { return in_[static_cast<size_t>(u)]; }
  int outdeg(int u) const { return out_[static_cast<size_t>(u)].count(); }
  int indeg(int u) const { return in_[static_cast<size_t>(u)].count(); }

  /// Arcs as id pairs, lexicographic by (u, v).
  std::vector<std::pair<int, int>> arc_ids() const {
    std::vector<std::pair<int, int>> r;
    r.reserve(static_cast<size_t>(arc_count_));
    for (int u = 0; u < order(); ++u)
      out_[static_cast<size_t>(u)].for_each([&](int v) { r.emplace_back(u, v); });
    return r;
  }

  /// Arcs as label pairs, lexicographic by (u, v).
  std::vector<Arc> arcs() const {
    std::vector<Arc> r;
    r.reserve(static_cast<size_t>(arc_count_));
    for (auto [u, v] : arc_ids()) r.emplace_back(label(u), label(v));
    return r;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void init_adjacency() {
    out_.assign(labels_.size(), Bitset(order()));
    in_.assign(labels_.size(), Bitset(order()));
  }

  void add_arc(int u, int v) {
    if (out_[static_cast<size_t>(u)].test(v)) return;
    out_[static_cast<size_t>(u)].set(v);
    in_[static_cast<size_t>(v)].set(u);
    ++arc_count_;
  }

  std::vector<std::string> labels_;
  std::vector<Bitset> out_, in_;
  long long arc_count_ = 0;
};

/// Undirected companion of Digraph; used for un(G) and interval graphs.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  static UndirectedGraph make(const std::vector<std::string>& vertices,
                              const std::vector<Arc>& edges) {
    UndirectedGraph g;
    g.labels_ = vertices;
    std::sort(g.labels_.begin(), g.labels_.end());
    for (size_t i = 1; i < g.labels_.size(); ++i)
      if (g.labels_[i] == g.labels_[i - 1])
        fail(errc::duplicate_vertex, "duplicate vertex label: " + g.labels_[i]);
    g.adj_.assign(g.labels_.size(), Bitset(g.order()));
    for (const auto& [u, v] : edges) {
      int ui = g.id_of(u), vi = g.id_of(v);
      if (ui == vi) fail(errc::loop_arc, "self edge on vertex: " + u);
      g.add_edge(ui, vi);
    }
    return g;
  }

  int order() const { return static_cast<int>(labels_.size()); }
  long long edge_count() const { return edge_count_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int id) const { return labels_[static_cast<size_t>(id)]; }

  int id_of(const std::string& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) fail(errc::unknown_vertex, "unknown vertex: " + v);
    return static_cast<int>(it - labels_.begin());
  }

  bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

  void add_edge(int u, int v) {
    if (adj_[static_cast<size_t>(u)].test(v)) return;
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    ++edge_count_;
  }

  /// Edges as label pairs with u < v, lexicographic.
  std::vector<Arc> edges() const {
    std::vector<Arc> r;
    for (int u = 0; u < order(); ++u)
      adj_[static_cast<size_t>(u)].for_each([&](int v) {
        if (u < v) r.emplace_back(label(u), label(v));
      });
    return r;
  }

  bool is_complete() const {
    long long n = order();
    return edge_count_ == n * (n - 1) / 2;
  }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> adj_;
  long long edge_count_ = 0;
};

inline Digraph complement(const Digraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && !g.has_arc(u, v)) arcs.emplace_back(u, v);
  return Digraph::from_ids(g.labels(), arcs);
}

inline Digraph converse(const Digraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.arc_ids()) arcs.emplace_back(v, u);
  return Digraph::from_ids(g.labels(), arcs);
}

inline UndirectedGraph underlying(const Digraph& g) {
  UndirectedGraph u = UndirectedGraph::make(g.labels(), {});
  for (auto [a, b] : g.arc_ids()) u.add_edge(a, b);
  return u;
}

/// Induced subdigraph on the given id set.
inline Digraph induced_ids(const Digraph& g, const Bitset& keep) {
  std::vector<std::string> labels;
  std::vector<int> remap(static_cast<size_t>(g.order()), -1);
  keep.for_each([&](int v) {
    remap[static_cast<size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  });
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.arc_ids())
    if (keep.test(u) && keep.test(v))
      arcs.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
  return Digraph::from_ids(std::move(labels), arcs);
}

inline Digraph induced(const Digraph& g, const std::vector<std::string>& keep) {
  Bitset mask(g.order());
  for (const auto& v : keep) mask.set(g.id_of(v));
  return induced_ids(g, mask);
}

/// Union of vertex sets and arc sets; vertex sets may overlap.
inline Digraph digraph_union(const Digraph& a, const Digraph& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Arc> arcs = a.arcs();
  auto barcs = b.arcs();
  arcs.insert(arcs.end(), barcs.begin(), barcs.end());
  return Digraph::make(labels, arcs);
}

/// Topological order of vertex ids, or nullopt when a directed cycle exists.
inline std::optional<std::vector<int>> topological_order(const Digraph& g) {
  int n = g.order();
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) indeg[static_cast<size_t>(v)] = g.indeg(v);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> ready;
  for (int v = n - 1; v >= 0; --v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    g.out(v).for_each([&](int w) {
      if (--indeg[static_cast<size_t>(w)] == 0) ready.push_back(w);
    });
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

inline PredicateReport structural_predicates(const Digraph& g) {
  PredicateReport r;
  int n = g.order();
  r.edgeless = true;
  r.tournament = true;
  r.semicomplete = true;
  r.complete_bioriented = true;
  r.oriented = true;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int both = (g.has_arc(u, v) ? 1 : 0) + (g.has_arc(v, u) ? 1 : 0);
      if (both != 0) r.edgeless = false;
      if (both != 1) r.tournament = false;
      if (both == 0) r.semicomplete = false;
      if (both != 2) r.complete_bioriented = false;
      if (both == 2) r.oriented = false;
    }
  r.transitive = true;
  r.quasi_transitive = true;
  for (int u = 0; u < n && (r.transitive || r.quasi_transitive); ++u)
    g.out(u).for_each([&](int v) {
      g.out(v).for_each([&](int w) {
        if (w == u) return;
        if (!g.has_arc(u, w)) {
          r.transitive = false;
          if (!g.has_arc(w, u)) r.quasi_transitive = false;
        }
      });
    });
  r.acyclic = is_acyclic(g);
  return r;
}

inline DegreeReport degree_stats(const Digraph& g) {
  DegreeReport r;
  for (int v = 0; v < g.order(); ++v) {
    int od = g.outdeg(v), id = g.indeg(v);
    r.max_out = std::max(r.max_out, od);
    r.max_in = std::max(r.max_in, id);
    r.max_total = std::max(r.max_total, od + id);
  }
  r.max_semi = std::max(r.max_out, r.max_in);
  return r;
}

/// Weakly connected components as id sets, ordered by smallest member.
inline std::vector<Bitset> weak_components(const Digraph& g) {
  int n = g.order();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<Bitset> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    Bitset comp(n);
    std::vector<int> stack{s};
    seen[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.set(v);
      auto push = [&](int w) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.push_back(w);
        }
      };
      g.out(v).for_each(push);
      g.in(v).for_each(push);
    }
    comps.push_back(comp);
  }
  return comps;
}

namespace detail {

/// Digraph on n vertices "a","b",... from an arc mask. Bit order: for source
/// i and target j != i the bit index is i*(n-1) + (j - (j > i)).
inline Digraph digraph_from_mask(int n, uint64_t mask) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<int, int>> arcs;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> bit) & 1u) arcs.emplace_back(i, j);
      ++bit;
    }
  return Digraph::from_ids(std::move(labels), arcs);
}

}  // namespace detail

}  // namespace seqdig
