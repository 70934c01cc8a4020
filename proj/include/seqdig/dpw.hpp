#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "build.hpp"
#include "digraph.hpp"
#include "error.hpp"
#include "recognize.hpp"
#include "sequences.hpp"

namespace seqdig {

/// Ordered bag list. Width is max bag size minus one; the empty
/// decomposition has width -1 (the empty digraph convention).
struct DirectedPathDecomposition {
  std::vector<std::vector<std::string>> bags;

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }

  void normalize() {
    for (auto& b : bags) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
  }

  friend bool operator==(const DirectedPathDecomposition&,
                         const DirectedPathDecomposition&) = default;
};

struct DecompositionCheck {
  std::optional<int> width;  // set iff all three conditions hold
  int violated = 0;          // 1, 2 or 3: the first violated condition
  std::string witness;       // offending vertex, or "u->v" for an arc
};

/// Checks (dpw-1) cover, (dpw-2) forward arc coverage, (dpw-3) contiguity,
/// in that order; reports the first violation with a concrete witness.
inline DecompositionCheck validate_decomposition(const Digraph& g,
                                                 const DirectedPathDecomposition& x) {
  DecompositionCheck r;
  int n = g.order();
  int nbags = static_cast<int>(x.bags.size());
  std::vector<int> first_bag(static_cast<size_t>(n), -1);
  std::vector<int> last_bag(static_cast<size_t>(n), -1);
  std::vector<long long> occurrences(static_cast<size_t>(n), 0);
  for (int i = 0; i < nbags; ++i) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& label : x.bags[static_cast<size_t>(i)]) {
      auto id = g.find_id(label);
      if (!id) fail(errc::unknown_vertex_in_bag, "bag vertex not in digraph: " + label);
      if (seen[static_cast<size_t>(*id)]) continue;
      seen[static_cast<size_t>(*id)] = true;
      if (first_bag[static_cast<size_t>(*id)] < 0) first_bag[static_cast<size_t>(*id)] = i;
      last_bag[static_cast<size_t>(*id)] = i;
      ++occurrences[static_cast<size_t>(*id)];
    }
  }
  for (int v = 0; v < n; ++v)
    if (first_bag[static_cast<size_t>(v)] < 0) {
      r.violated = 1;
      r.witness = g.label(v);
      return r;
    }
  for (auto [u, v] : g.arc_ids())
    if (first_bag[static_cast<size_t>(u)] > last_bag[static_cast<size_t>(v)]) {
      r.violated = 2;
      r.witness = g.label(u) + "->" + g.label(v);
      return r;
    }
  for (int v = 0; v < n; ++v)
    if (occurrences[static_cast<size_t>(v)] !=
        last_bag[static_cast<size_t>(v)] - first_bag[static_cast<size_t>(v)] + 1) {
      r.violated = 3;
      r.witness = g.label(v);
      return r;
    }
  int w = -1;
  std::vector<bool> dedup;
  for (const auto& b : x.bags) {
    dedup.assign(static_cast<size_t>(n), false);
    int size = 0;
    for (const auto& label : b) {
      int id = g.id_of(label);
      if (!dedup[static_cast<size_t>(id)]) {
        dedup[static_cast<size_t>(id)] = true;
        ++size;
      }
    }
    w = std::max(w, size - 1);
  }
  r.width = w;
  return r;
}

/// Refines a decomposition into a nice one: starts and ends empty,
/// consecutive bags differ by one vertex, 2|V|+1 bags. Between original
/// bags, departing vertices are forgotten in reverse-lexicographic order,
/// then entering vertices introduced lexicographically.
inline DirectedPathDecomposition niceify(const DirectedPathDecomposition& x) {
  // contiguity must hold for the refinement to be well defined
  std::map<std::string, std::pair<int, int>> span;
  for (size_t i = 0; i < x.bags.size(); ++i)
    for (const auto& v : x.bags[i]) {
      auto [it, fresh] = span.try_emplace(v, static_cast<int>(i), static_cast<int>(i));
      if (!fresh) {
        if (it->second.second < static_cast<int>(i) - 1)
          fail(errc::invalid_decomposition, "vertex occurrences not contiguous: " + v);
        it->second.second = static_cast<int>(i);
      }
    }
  DirectedPathDecomposition nice;
  std::vector<std::string> cur;
  nice.bags.push_back(cur);
  auto emit = [&](const std::vector<std::string>& bag) { nice.bags.push_back(bag); };
  std::vector<std::string> prev;
  for (size_t i = 0; i <= x.bags.size(); ++i) {
    std::vector<std::string> next;
    if (i < x.bags.size()) {
      next = x.bags[i];
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
    }
    std::vector<std::string> leaving;
    for (const auto& v : prev)
      if (!std::binary_search(next.begin(), next.end(), v)) leaving.push_back(v);
    for (auto it = leaving.rbegin(); it != leaving.rend(); ++it) {
      cur.erase(std::find(cur.begin(), cur.end(), *it));
      emit(cur);
    }
    for (const auto& v : next)
      if (!std::binary_search(prev.begin(), prev.end(), v)) {
        cur.push_back(v);
        std::sort(cur.begin(), cur.end());
        emit(cur);
      }
    prev = std::move(next);
  }
  return nice;
}

namespace detail {

inline void check_state(const SequenceSet& q, const std::vector<int>& state) {
  if (static_cast<int>(state.size()) != q.k())
    fail(errc::out_of_range, "state arity does not match the number of sequences");
  for (int j = 0; j < q.k(); ++j)
    if (state[static_cast<size_t>(j)] < 0 || state[static_cast<size_t>(j)] > q.length(j))
      fail(errc::out_of_range, "state coordinate out of range");
}

/// Shared tables for the active-set machinery.
struct ActiveTables {
  explicit ActiveTables(const SequenceSet& q)
      : pos(q), count(type_stats(q).c_of) {}
  PositionIndex pos;
  std::vector<int> count;  // total items per type
};

inline int active_delta_impl(const SequenceSet& q, const ActiveTables& tb,
                             const std::vector<int>& state, int j) {
  int p = state[static_cast<size_t>(j)] + 1;
  int t = q.item_type(j, p);
  bool opens = tb.pos.first(j, t) == p;
  bool closes = tb.pos.last(j, t) == p;
  for (int l = 0; l < q.k() && (opens || closes); ++l) {
    if (l == j) continue;
    if (tb.pos.first(l, t) <= state[static_cast<size_t>(l)]) opens = false;
    if (tb.pos.last(l, t) > state[static_cast<size_t>(l)]) closes = false;
  }
  int delta = opens ? 1 : (closes ? -1 : 0);
  // the departing boundary item leaves M when its type has no other item
  if (state[static_cast<size_t>(j)] >= 1) {
    int tp = q.item_type(j, state[static_cast<size_t>(j)]);
    if (tb.count[static_cast<size_t>(tp)] == 1) --delta;
  }
  return delta;
}

}  // namespace detail

/// Active types of a state, from the L/R/M definition: types with consumed
/// and unconsumed items, plus boundary items whose type occurs exactly once
/// in all of Q. Sorted by type label.
inline std::vector<std::string> active_set(const SequenceSet& q, const std::vector<int>& state) {
  detail::check_state(q, state);
  int tcount = q.type_count();
  std::vector<int> consumed(static_cast<size_t>(tcount), 0);
  std::vector<int> total(static_cast<size_t>(tcount), 0);
  std::vector<bool> boundary_singleton(static_cast<size_t>(tcount), false);
  for (int j = 0; j < q.k(); ++j) {
    for (int p = 1; p <= q.length(j); ++p) {
      int t = q.item_type(j, p);
      ++total[static_cast<size_t>(t)];
      if (p <= state[static_cast<size_t>(j)]) ++consumed[static_cast<size_t>(t)];
    }
  }
  for (int j = 0; j < q.k(); ++j)
    if (state[static_cast<size_t>(j)] >= 1) {
      int t = q.item_type(j, state[static_cast<size_t>(j)]);
      if (total[static_cast<size_t>(t)] == 1) boundary_singleton[static_cast<size_t>(t)] = true;
    }
  std::vector<std::string> r;
  for (int t = 0; t < tcount; ++t) {
    bool straddles = consumed[static_cast<size_t>(t)] > 0 &&
                     consumed[static_cast<size_t>(t)] < total[static_cast<size_t>(t)];
    if (straddles || boundary_singleton[static_cast<size_t>(t)])
      r.push_back(q.types()[static_cast<size_t>(t)]);
  }
  return r;
}

/// Increment of |active| when advancing coordinate j by one. The consumed
/// item contributes +1 when its type opens (globally first item) and -1 when
/// it closes (globally last item; a lone item opens, stays active through M
/// and is charged on the next advance); the departing boundary item
/// contributes -1 when its type is a singleton leaving M.
inline int active_delta(const SequenceSet& q, const std::vector<int>& state, int j) {
  detail::check_state(q, state);
  if (j < 0 || j >= q.k()) fail(errc::out_of_range, "sequence index out of range");
  if (state[static_cast<size_t>(j)] >= q.length(j))
    fail(errc::out_of_range, "coordinate already at sequence end");
  detail::ActiveTables tb(q);
  return detail::active_delta_impl(q, tb, state, j);
}

/// Bags along a state path: active sets of all states after the initial one,
/// final state included, empty bags dropped. The result is validated against
/// g(Q) before returning.
inline DirectedPathDecomposition path_to_decomposition(
    const SequenceSet& q, const std::vector<std::vector<int>>& path) {
  if (path.empty()) fail(errc::not_a_path, "empty path");
  detail::check_state(q, path.front());
  for (int j = 0; j < q.k(); ++j)
    if (path.front()[static_cast<size_t>(j)] != 0)
      fail(errc::not_a_path, "path does not start at the initial state");
  for (size_t s = 1; s < path.size(); ++s) {
    detail::check_state(q, path[s]);
    int advanced = 0;
    for (int j = 0; j < q.k(); ++j) {
      int d = path[s][static_cast<size_t>(j)] - path[s - 1][static_cast<size_t>(j)];
      if (d == 1)
        ++advanced;
      else if (d != 0)
        fail(errc::not_a_path, "consecutive states differ by more than one step");
    }
    if (advanced != 1) fail(errc::not_a_path, "consecutive states must advance one coordinate");
  }
  for (int j = 0; j < q.k(); ++j)
    if (path.back()[static_cast<size_t>(j)] != q.length(j))
      fail(errc::not_a_path, "path does not end at the final state");

  DirectedPathDecomposition x;
  for (size_t s = 1; s < path.size(); ++s) {
    auto bag = active_set(q, path[s]);
    if (!bag.empty()) x.bags.push_back(std::move(bag));
  }
  auto check = validate_decomposition(sequence_digraph(q), x);
  if (!check.width)
    fail(errc::cross_check_failed, "path produced an invalid decomposition");
  return x;
}

/// Runs the head-scan loop for a given introduce order: each type in turn is
/// appended to the introduced set, then sequence heads whose type is already
/// introduced are removed, smallest sequence index first. Fails with
/// order_infeasible when a type is never available at a head.
inline std::vector<std::vector<int>> transform_with_order(
    const SequenceSet& q, const std::vector<std::string>& order) {
  std::vector<bool> introduced(static_cast<size_t>(q.type_count()), false);
  {
    std::vector<bool> listed(static_cast<size_t>(q.type_count()), false);
    if (static_cast<int>(order.size()) != q.type_count())
      fail(errc::order_infeasible, "introduce order must list every type exactly once");
    for (const auto& t : order) {
      int id = q.type_id(t);
      if (listed[static_cast<size_t>(id)])
        fail(errc::order_infeasible, "introduce order repeats type " + t);
      listed[static_cast<size_t>(id)] = true;
    }
  }
  std::vector<int> state(static_cast<size_t>(q.k()), 0);
  std::vector<std::vector<int>> path{state};
  auto head = [&](int j) -> int {
    if (state[static_cast<size_t>(j)] >= q.length(j)) return -1;
    return q.item_type(j, state[static_cast<size_t>(j)] + 1);
  };
  for (const auto& tlabel : order) {
    int t = q.type_id(tlabel);
    bool at_head = false;
    for (int j = 0; j < q.k() && !at_head; ++j) at_head = head(j) == t;
    if (!at_head) continue;  // the printed loop skips; completion is checked at the end
    introduced[static_cast<size_t>(t)] = true;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int j = 0; j < q.k(); ++j) {
        int h = head(j);
        if (h >= 0 && introduced[static_cast<size_t>(h)]) {
          ++state[static_cast<size_t>(j)];
          path.push_back(state);
          progress = true;
          break;
        }
      }
    }
  }
  for (int j = 0; j < q.k(); ++j)
    if (state[static_cast<size_t>(j)] != q.length(j))
      fail(errc::order_infeasible, "introduce order leaves unconsumed items");
  return path;
}

namespace detail {

/// Introduce order for a decomposition: vertices grouped by first bag, each
/// group ordered by the first-occurrence partial order (t before t' when
/// every sequence containing both has first(t) < first(t')), ties broken
/// lexicographically. A cyclic group makes the order infeasible.
inline std::vector<std::string> introduce_order(const SequenceSet& q,
                                                const DirectedPathDecomposition& x) {
  std::map<std::string, int> first_bag;
  for (size_t i = 0; i < x.bags.size(); ++i)
    for (const auto& v : x.bags[i])
      first_bag.try_emplace(v, static_cast<int>(i));
  std::map<int, std::vector<std::string>> groups;
  for (const auto& [v, i] : first_bag) groups[i].push_back(v);

  PositionIndex pos(q);
  auto alpha_before = [&](const std::string& a, const std::string& b) {
    int ta = q.type_id(a), tb = q.type_id(b);
    bool any = false;
    for (int i = 0; i < q.k(); ++i) {
      bool ha = pos.last(i, ta) > 0, hb = pos.last(i, tb) > 0;
      if (!ha || !hb) continue;
      if (pos.first(i, ta) < pos.first(i, tb))
        any = true;
      else
        return false;
    }
    return any;
  };

  std::vector<std::string> order;
  for (auto& [bag_index, members] : groups) {
    std::sort(members.begin(), members.end());
    // Kahn's algorithm over the alpha edges restricted to this group
    size_t m = members.size();
    std::vector<int> indeg(m, 0);
    std::vector<std::vector<int>> succ(m);
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        if (alpha_before(members[a], members[b])) {
          succ[a].push_back(static_cast<int>(b));
          ++indeg[b];
        }
      }
    std::vector<bool> done(m, false);
    for (size_t picked = 0; picked < m; ++picked) {
      int choice = -1;
      for (size_t a = 0; a < m; ++a)
        if (!done[a] && indeg[a] == 0) {
          choice = static_cast<int>(a);
          break;
        }
      if (choice < 0)
        fail(errc::order_infeasible,
             "first-occurrence order is cyclic among simultaneously introduced vertices");
      done[static_cast<size_t>(choice)] = true;
      order.push_back(members[static_cast<size_t>(choice)]);
      for (int b : succ[static_cast<size_t>(choice)]) --indeg[static_cast<size_t>(b)];
    }
  }
  return order;
}

}  // namespace detail

/// Lattice path for a valid decomposition of width p-1 whose maximum active
/// size stays within p, via the introduce order of the decomposition.
inline std::vector<std::vector<int>> decomposition_to_path(const SequenceSet& q,
                                                           const DirectedPathDecomposition& x) {
  Digraph g = sequence_digraph(q);
  auto check = validate_decomposition(g, x);
  if (!check.width)
    fail(errc::invalid_decomposition, "decomposition violates condition (dpw-" +
                                          std::to_string(check.violated) +
                                          ") at " + check.witness);
  auto order = detail::introduce_order(q, x);
  auto path = transform_with_order(q, order);
  int bound = *check.width + 1;
  detail::ActiveTables tb(q);
  int f = 0;
  std::vector<int> state(static_cast<size_t>(q.k()), 0);
  for (size_t s = 1; s < path.size(); ++s) {
    int j = 0;
    while (path[s][static_cast<size_t>(j)] == path[s - 1][static_cast<size_t>(j)]) ++j;
    f += detail::active_delta_impl(q, tb, path[s - 1], j);
    if (f > bound)
      fail(errc::order_infeasible, "refinement exceeds the decomposition width");
  }
  return path;
}

struct XpOptions {
  size_t max_states = size_t{1} << 26;
  bool normalize = true;  // run the DP on M(Q); g(M(Q)) = g(Q)
};

struct XpResult {
  int width = -1;
  std::vector<std::vector<int>> path;  // optimal path over `solved`
  DirectedPathDecomposition decomposition;
  size_t state_count = 0;
  SequenceSet solved;  // the sequence set the DP actually ran on
};

/// Exact directed path-width of g(Q) by the state-space dynamic program:
/// states are consumed-prefix tuples, f counts active types (maintained
/// incrementally), val[v] = max(f(v), min over predecessors val(u)), width =
/// val(final) - 1. A witness path is recovered backwards and certified via
/// path_to_decomposition.
inline XpResult dpw_xp(const SequenceSet& input, const XpOptions& opt = {}) {
  if (input.k() == 0) fail(errc::empty_input, "no sequences");
  SequenceSet q = opt.normalize ? first_last_set(input) : input;

  int k = q.k();
  std::vector<size_t> dims(static_cast<size_t>(k));
  std::vector<size_t> strides(static_cast<size_t>(k));
  size_t total = 1;
  double approx = 1.0;
  for (int j = 0; j < k; ++j) {
    dims[static_cast<size_t>(j)] = static_cast<size_t>(q.length(j)) + 1;
    approx *= static_cast<double>(dims[static_cast<size_t>(j)]);
  }
  for (int j = 0; j < k; ++j) {
    strides[static_cast<size_t>(j)] = total;
    size_t d = dims[static_cast<size_t>(j)];
    size_t prod = total * d;
    total = (prod / d != total) ? opt.max_states + 1 : prod;  // unsigned wrap check
    if (total > opt.max_states)
      fail(errc::state_space_too_large,
           "state space of " + std::to_string(approx) + " states exceeds budget of " +
               std::to_string(opt.max_states));
  }

  detail::ActiveTables tb(q);
  std::vector<int16_t> f(total, 0), val(total, 0);
  std::vector<int> digits(static_cast<size_t>(k), 0);
  std::vector<int> state(static_cast<size_t>(k));
  for (size_t idx = 1; idx < total; ++idx) {
    // odometer increment of the mixed-radix digits
    for (int j = 0;; ++j) {
      if (++digits[static_cast<size_t>(j)] < static_cast<int>(dims[static_cast<size_t>(j)])) break;
      digits[static_cast<size_t>(j)] = 0;
    }
    int16_t fv = 0;
    int16_t best = std::numeric_limits<int16_t>::max();
    bool f_done = false;
    for (int j = 0; j < k; ++j) {
      if (digits[static_cast<size_t>(j)] == 0) continue;
      size_t pidx = idx - strides[static_cast<size_t>(j)];
      if (!f_done) {
        state = digits;
        --state[static_cast<size_t>(j)];
        fv = static_cast<int16_t>(f[pidx] + detail::active_delta_impl(q, tb, state, j));
        f_done = true;
      }
      best = std::min(best, val[pidx]);
    }
    f[idx] = fv;
    val[idx] = std::max(fv, best);
  }

  XpResult r;
  r.state_count = total;
  r.width = static_cast<int>(val[total - 1]) - 1;

  // backward walk: any predecessor of minimum val keeps the bottleneck
  std::vector<std::vector<int>> rpath;
  for (int j = 0; j < k; ++j) digits[static_cast<size_t>(j)] = q.length(j);
  size_t idx = total - 1;
  rpath.push_back(digits);
  while (idx != 0) {
    int pick = -1;
    int16_t best = std::numeric_limits<int16_t>::max();
    for (int j = 0; j < k; ++j) {
      if (digits[static_cast<size_t>(j)] == 0) continue;
      int16_t v = val[idx - strides[static_cast<size_t>(j)]];
      if (v < best) {
        best = v;
        pick = j;
      }
    }
    --digits[static_cast<size_t>(pick)];
    idx -= strides[static_cast<size_t>(pick)];
    rpath.push_back(digits);
  }
  r.path.assign(rpath.rbegin(), rpath.rend());
  r.decomposition = path_to_decomposition(q, r.path);
  if (r.decomposition.width() != r.width)
    fail(errc::cross_check_failed, "certified decomposition width mismatch");
  r.solved = std::move(q);
  return r;
}

/// Per-type interval [first, last] of a single sequence plus the maximum
/// point overlap (the clique number of the interval graph).
struct IntervalModel {
  struct Interval {
    std::string type;
    int first = 0;
    int last = 0;
  };
  std::vector<Interval> intervals;  // sorted by type label
  int clique_number = 0;
};

inline IntervalModel interval_model(const Sequence& q) {
  IntervalModel m;
  std::map<std::string, std::pair<int, int>> span;
  for (int p = 1; p <= q.length(); ++p) {
    auto [it, fresh] = span.try_emplace(q.items[static_cast<size_t>(p - 1)], p, p);
    if (!fresh) it->second.second = p;
  }
  for (const auto& [t, fl] : span) m.intervals.push_back({t, fl.first, fl.second});
  int n = q.length();
  std::vector<int> opens(static_cast<size_t>(n) + 2, 0), closes(static_cast<size_t>(n) + 2, 0);
  for (const auto& iv : m.intervals) {
    ++opens[static_cast<size_t>(iv.first)];
    ++closes[static_cast<size_t>(iv.last)];
  }
  int cur = 0;
  for (int p = 1; p <= n; ++p) {
    cur += opens[static_cast<size_t>(p)];
    m.clique_number = std::max(m.clique_number, cur);
    cur -= closes[static_cast<size_t>(p)];
  }
  return m;
}

/// dpw of g({q}) for one sequence: clique number of I(q) minus one.
inline int dpw_single_sequence(const Sequence& q) {
  return interval_model(q).clique_number - 1;
}

namespace detail {

/// Bags of the interval sweep: for each position, the types covering it.
inline DirectedPathDecomposition interval_decomposition(const Sequence& q) {
  auto m = interval_model(q);
  DirectedPathDecomposition x;
  for (int p = 1; p <= q.length(); ++p) {
    std::vector<std::string> bag;
    for (const auto& iv : m.intervals)
      if (iv.first <= p && p <= iv.last) bag.push_back(iv.type);
    if (!bag.empty()) x.bags.push_back(std::move(bag));
  }
  return x;
}

}  // namespace detail

/// dpw for sets with pairwise disjoint type sets (d_Q = 1): the maximum of
/// the single-sequence values.
inline int dpw_dq1(const SequenceSet& q) {
  if (q.k() == 0) fail(errc::empty_input, "no sequences");
  if (type_stats(q).d_Q > 1)
    fail(errc::precondition_violated, "d_Q must be 1 (pairwise disjoint type sets)");
  int w = -1;
  for (const auto& s : q.all()) w = std::max(w, dpw_single_sequence(s));
  return w;
}

namespace detail {

struct BruteTables {
  std::vector<uint32_t> in_mask;
  std::vector<uint8_t> cost;      // over subsets
  std::vector<uint8_t> bd_size;   // |{v in P : some in-neighbour outside P}|
};

inline BruteTables brute_tables(const Digraph& g) {
  int n = g.order();
  BruteTables t;
  t.in_mask.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    g.in(v).for_each([&](int u) { t.in_mask[static_cast<size_t>(v)] |= uint32_t{1} << u; });
  size_t full = size_t{1} << n;
  t.bd_size.assign(full, 0);
  for (size_t p = 1; p < full; ++p) {
    int c = 0;
    uint32_t rest = static_cast<uint32_t>(p);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (t.in_mask[static_cast<size_t>(v)] & ~static_cast<uint32_t>(p)) ++c;
    }
    t.bd_size[p] = static_cast<uint8_t>(c);
  }
  t.cost.assign(full, 0);
  for (size_t p = 1; p < full; ++p) {
    uint8_t best = std::numeric_limits<uint8_t>::max();
    uint32_t rest = static_cast<uint32_t>(p);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      size_t prev = p & ~(size_t{1} << v);
      uint8_t c = std::max(t.cost[prev], static_cast<uint8_t>(t.bd_size[prev] + 1));
      best = std::min(best, c);
    }
    t.cost[p] = best;
  }
  return t;
}

}  // namespace detail

/// Exact dpw by bottleneck search over nice-decomposition states: placing
/// vertices one by one, a vertex can be forgotten once all its in-neighbours
/// are placed, so for a placed set P the unavoidable bag is the boundary
/// {v in P : some in-neighbour outside P} plus the vertex just introduced.
inline int dpw_bruteforce(const Digraph& g, int limit = 12) {
  int n = g.order();
  if (n > limit)
    fail(errc::too_large, "brute force limited to " + std::to_string(limit) + " vertices");
  if (n == 0) return -1;
  auto t = detail::brute_tables(g);
  return static_cast<int>(t.cost[(size_t{1} << n) - 1]) - 1;
}

/// Witness decomposition for dpw_bruteforce: bags boundary(P) + introduced
/// vertex along an optimal placement order.
inline DirectedPathDecomposition dpw_bruteforce_decomposition(const Digraph& g, int limit = 12) {
  int n = g.order();
  if (n > limit)
    fail(errc::too_large, "brute force limited to " + std::to_string(limit) + " vertices");
  DirectedPathDecomposition x;
  if (n == 0) return x;
  auto t = detail::brute_tables(g);
  std::vector<int> order_rev;
  size_t p = (size_t{1} << n) - 1;
  while (p) {
    int pick = -1;
    uint32_t rest = static_cast<uint32_t>(p);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      size_t prev = p & ~(size_t{1} << v);
      uint8_t c = std::max(t.cost[prev], static_cast<uint8_t>(t.bd_size[prev] + 1));
      if (c == t.cost[p]) {
        pick = v;
        break;
      }
    }
    order_rev.push_back(pick);
    p &= ~(size_t{1} << pick);
  }
  std::reverse(order_rev.begin(), order_rev.end());
  uint32_t placed = 0;
  for (int v : order_rev) {
    std::vector<std::string> bag;
    uint32_t rest = placed;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (t.in_mask[static_cast<size_t>(u)] & ~placed) bag.push_back(g.label(u));
    }
    bag.push_back(g.label(v));
    std::sort(bag.begin(), bag.end());
    x.bags.push_back(std::move(bag));
    placed |= uint32_t{1} << v;
  }
  return x;
}

enum class DpwMethod { automatic, xp, brute, interval };

struct DpwReport {
  int width = -1;
  bool empty = false;  // empty input: width reported as -1
  std::string method;
  size_t state_count = 0;
  double seconds = 0.0;
  DirectedPathDecomposition decomposition;
  std::optional<SequenceSet> witness;  // S_{k,1} fast path: defining sequences
};

namespace detail {

inline DirectedPathDecomposition topological_singletons(const Digraph& g) {
  DirectedPathDecomposition x;
  auto order = topological_order(g);
  if (!order) fail(errc::cross_check_failed, "expected an acyclic digraph");
  for (int v : *order) x.bags.push_back({g.label(v)});
  return x;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

inline DpwReport dpw_sequences(const SequenceSet& q, DpwMethod method, const XpOptions& opt);

inline DpwReport dpw_digraph(const Digraph& g, DpwMethod method, const XpOptions& opt) {
  Timer timer;
  DpwReport r;
  if (g.order() == 0) {
    r.empty = true;
    r.method = "empty";
    r.seconds = timer.seconds();
    return r;
  }
  switch (method) {
    case DpwMethod::automatic: {
      auto sk1 = classify_Sk1(g);
      if (sk1.k) {
        r.width = 0;
        r.method = "sk1";
        r.witness = sk1.sequences;
        r.decomposition = topological_singletons(g);
        break;
      }
      if (auto d = is_S12(g); d.member) {
        const Sequence& s = d.sequences->seq(0);
        r.width = dpw_single_sequence(s);
        r.method = "interval";
        r.decomposition = interval_decomposition(s);
        break;
      }
      if (g.order() <= 12) {
        r.width = dpw_bruteforce(g);
        r.method = "brute";
        r.decomposition = dpw_bruteforce_decomposition(g);
        break;
      }
      return dpw_sequences(sequence_system(g), DpwMethod::xp, opt);
    }
    case DpwMethod::xp:
      return dpw_sequences(sequence_system(g), DpwMethod::xp, opt);
    case DpwMethod::brute:
      r.width = dpw_bruteforce(g);
      r.method = "brute";
      r.decomposition = dpw_bruteforce_decomposition(g);
      break;
    case DpwMethod::interval: {
      auto d = is_S12(g);
      if (!d.member)
        fail(errc::precondition_violated, "interval method needs a digraph in S_{1,2}");
      const Sequence& s = d.sequences->seq(0);
      r.width = dpw_single_sequence(s);
      r.method = "interval";
      r.decomposition = interval_decomposition(s);
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

inline DpwReport dpw_sequences(const SequenceSet& q, DpwMethod method, const XpOptions& opt) {
  Timer timer;
  DpwReport r;
  if (q.k() == 0) {
    r.empty = true;
    r.method = "empty";
    r.seconds = timer.seconds();
    return r;
  }
  switch (method) {
    case DpwMethod::automatic: {
      Digraph g = sequence_digraph(q);
      auto sk1 = classify_Sk1(g);
      if (sk1.k) {
        r.width = 0;
        r.method = "sk1";
        r.witness = sk1.sequences;
        r.decomposition = topological_singletons(g);
        break;
      }
      if (q.k() == 1) {
        r.width = dpw_single_sequence(q.seq(0));
        r.method = "interval";
        r.decomposition = interval_decomposition(q.seq(0));
        break;
      }
      if (type_stats(q).d_Q == 1) {
        r.width = dpw_dq1(q);
        r.method = "dq1";
        DirectedPathDecomposition x;
        for (const auto& s : q.all()) {
          auto part = interval_decomposition(s);
          x.bags.insert(x.bags.end(), part.bags.begin(), part.bags.end());
        }
        r.decomposition = std::move(x);
        break;
      }
      [[fallthrough]];
    }
    case DpwMethod::xp: {
      auto xp = dpw_xp(q, opt);
      r.width = xp.width;
      r.method = "xp";
      r.state_count = xp.state_count;
      r.decomposition = std::move(xp.decomposition);
      break;
    }
    case DpwMethod::brute: {
      Digraph g = sequence_digraph(q);
      r.width = dpw_bruteforce(g);
      r.method = "brute";
      r.decomposition = dpw_bruteforce_decomposition(g);
      break;
    }
    case DpwMethod::interval: {
      if (q.k() != 1)
        fail(errc::precondition_violated, "interval method needs a single sequence");
      r.width = dpw_single_sequence(q.seq(0));
      r.method = "interval";
      r.decomposition = interval_decomposition(q.seq(0));
      break;
    }
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace detail

inline DpwReport dpw(const SequenceSet& q, DpwMethod method = DpwMethod::automatic,
                     const XpOptions& opt = {}) {
  return detail::dpw_sequences(q, method, opt);
}

inline DpwReport dpw(const Digraph& g, DpwMethod method = DpwMethod::automatic,
                     const XpOptions& opt = {}) {
  return detail::dpw_digraph(g, method, opt);
}

}  // namespace seqdig
