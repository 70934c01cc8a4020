#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace seqdig {

/// One typed sequence; items are identified by their 1-based position, only
/// the type label of each item matters.
struct Sequence {
  std::string name;
  std::vector<std::string> items;

  int length() const { return static_cast<int>(items.size()); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Ordered set of sequences q_1..q_k with an interned type table. Sequence
/// order is significant (it is the file order); type ids are assigned in
/// lexicographic label order.
class SequenceSet {
 public:
  SequenceSet() = default;

  explicit SequenceSet(std::vector<Sequence> seqs) : seqs_(std::move(seqs)) {
    for (const auto& q : seqs_)
      if (q.items.empty())
        fail(errc::empty_sequence, "empty sequence: " + q.name);
    std::set<std::string> ts;
    for (const auto& q : seqs_) ts.insert(q.items.begin(), q.items.end());
    types_.assign(ts.begin(), ts.end());
    item_types_.resize(seqs_.size());
    for (size_t i = 0; i < seqs_.size(); ++i) {
      item_types_[i].reserve(seqs_[i].items.size());
      for (const auto& t : seqs_[i].items) item_types_[i].push_back(type_id(t));
    }
  }

  int k() const { return static_cast<int>(seqs_.size()); }
  bool empty() const { return seqs_.empty(); }
  const std::vector<Sequence>& all() const { return seqs_; }
  const Sequence& seq(int i) const { return seqs_[static_cast<size_t>(i)]; }
  int length(int i) const { return seqs_[static_cast<size_t>(i)].length(); }

  int total_items() const {
    int n = 0;
    for (const auto& q : seqs_) n += q.length();
    return n;
  }

  const std::vector<std::string>& types() const { return types_; }
  int type_count() const { return static_cast<int>(types_.size()); }

  int type_id(const std::string& t) const {
    auto it = std::lower_bound(types_.begin(), types_.end(), t);
    if (it == types_.end() || *it != t) fail(errc::unknown_vertex, "unknown type: " + t);
    return static_cast<int>(it - types_.begin());
  }

  /// Type id of the item at 1-based position pos in sequence i.
  int item_type(int i, int pos) const {
    return item_types_[static_cast<size_t>(i)][static_cast<size_t>(pos - 1)];
  }

  friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

 private:
  std::vector<Sequence> seqs_;
  std::vector<std::string> types_;
  std::vector<std::vector<int>> item_types_;
};

/// first(q_i, t) and last(q_i, t) tables with the sentinel convention for
/// absent types: first = n_i + 1, last = 0.
class PositionIndex {
 public:
  explicit PositionIndex(const SequenceSet& q) : q_(&q) {
    int k = q.k(), t = q.type_count();
    first_.assign(static_cast<size_t>(k) * static_cast<size_t>(t), 0);
    last_.assign(static_cast<size_t>(k) * static_cast<size_t>(t), 0);
    for (int i = 0; i < k; ++i) {
      for (int ty = 0; ty < t; ++ty) at(first_, i, ty) = q.length(i) + 1;
      for (int pos = 1; pos <= q.length(i); ++pos) {
        int ty = q.item_type(i, pos);
        if (at(first_, i, ty) == q.length(i) + 1) at(first_, i, ty) = pos;
        at(last_, i, ty) = pos;
      }
    }
  }

  int first(int seq, int type) const { return at(first_, seq, type); }
  int last(int seq, int type) const { return at(last_, seq, type); }

 private:
  int& at(std::vector<int>& v, int i, int t) {
    return v[static_cast<size_t>(i) * static_cast<size_t>(q_->type_count()) + static_cast<size_t>(t)];
  }
  int at(const std::vector<int>& v, int i, int t) const {
    return v[static_cast<size_t>(i) * static_cast<size_t>(q_->type_count()) + static_cast<size_t>(t)];
  }

  const SequenceSet* q_;
  std::vector<int> first_, last_;
};

struct TypeStats {
  int d_Q = 0;              // max over types of #sequences containing the type
  int c_Q = 0;              // max over types of total item count
  std::vector<int> d_of;    // per type id
  std::vector<int> c_of;    // per type id
};

inline TypeStats type_stats(const SequenceSet& q) {
  TypeStats s;
  int t = q.type_count();
  s.d_of.assign(static_cast<size_t>(t), 0);
  s.c_of.assign(static_cast<size_t>(t), 0);
  std::vector<bool> seen;
  for (int i = 0; i < q.k(); ++i) {
    seen.assign(static_cast<size_t>(t), false);
    for (int pos = 1; pos <= q.length(i); ++pos) {
      int ty = q.item_type(i, pos);
      ++s.c_of[static_cast<size_t>(ty)];
      if (!seen[static_cast<size_t>(ty)]) {
        seen[static_cast<size_t>(ty)] = true;
        ++s.d_of[static_cast<size_t>(ty)];
      }
    }
  }
  for (int ty = 0; ty < t; ++ty) {
    s.d_Q = std::max(s.d_Q, s.d_of[static_cast<size_t>(ty)]);
    s.c_Q = std::max(s.c_Q, s.c_of[static_cast<size_t>(ty)]);
  }
  return s;
}

/// C(q): collapse runs of equal consecutive types to a single item.
inline Sequence collapse_runs(const Sequence& q) {
  Sequence r{q.name, {}};
  for (const auto& t : q.items)
    if (r.items.empty() || r.items.back() != t) r.items.push_back(t);
  return r;
}

namespace detail {

inline Sequence filter_positions(const Sequence& q, const std::vector<bool>& keep) {
  Sequence r{q.name, {}};
  for (size_t i = 0; i < q.items.size(); ++i)
    if (keep[i]) r.items.push_back(q.items[i]);
  return r;
}

inline std::pair<std::vector<int>, std::vector<int>> first_last_of(const Sequence& q) {
  // position-indexed: for each position, the first/last position of its type
  std::map<std::string, std::pair<int, int>> span;
  for (size_t i = 0; i < q.items.size(); ++i) {
    auto [it, fresh] = span.try_emplace(q.items[i], static_cast<int>(i), static_cast<int>(i));
    if (!fresh) it->second.second = static_cast<int>(i);
  }
  std::vector<int> firsts(q.items.size()), lasts(q.items.size());
  for (size_t i = 0; i < q.items.size(); ++i) {
    const auto& [f, l] = span.at(q.items[i]);
    firsts[i] = f;
    lasts[i] = l;
  }
  return {firsts, lasts};
}

}  // namespace detail

/// M(q): keep only the first and last item of each type.
inline Sequence first_last_form(const Sequence& q) {
  auto [firsts, lasts] = detail::first_last_of(q);
  std::vector<bool> keep(q.items.size(), false);
  for (size_t i = 0; i < q.items.size(); ++i)
    if (firsts[i] == static_cast<int>(i) || lasts[i] == static_cast<int>(i)) keep[i] = true;
  return detail::filter_positions(q, keep);
}

/// F(q): keep only the first item of each type.
inline Sequence firsts_form(const Sequence& q) {
  auto [firsts, lasts] = detail::first_last_of(q);
  std::vector<bool> keep(q.items.size(), false);
  for (size_t i = 0; i < q.items.size(); ++i)
    if (firsts[i] == static_cast<int>(i)) keep[i] = true;
  return detail::filter_positions(q, keep);
}

/// L(q): keep only the last item of each type.
inline Sequence lasts_form(const Sequence& q) {
  auto [firsts, lasts] = detail::first_last_of(q);
  std::vector<bool> keep(q.items.size(), false);
  for (size_t i = 0; i < q.items.size(); ++i)
    if (lasts[i] == static_cast<int>(i)) keep[i] = true;
  return detail::filter_positions(q, keep);
}

struct NormalForms {
  Sequence C, M, F, L;
};

inline NormalForms normal_forms(const Sequence& q) {
  return {collapse_runs(q), first_last_form(q), firsts_form(q), lasts_form(q)};
}

inline Sequence reverse_sequence(const Sequence& q) {
  Sequence r = q;
  std::reverse(r.items.begin(), r.items.end());
  return r;
}

inline SequenceSet reverse_set(const SequenceSet& q) {
  std::vector<Sequence> seqs;
  seqs.reserve(static_cast<size_t>(q.k()));
  for (const auto& s : q.all()) seqs.push_back(reverse_sequence(s));
  return SequenceSet(std::move(seqs));
}

inline SequenceSet first_last_set(const SequenceSet& q) {
  std::vector<Sequence> seqs;
  seqs.reserve(static_cast<size_t>(q.k()));
  for (const auto& s : q.all()) seqs.push_back(first_last_form(s));
  return SequenceSet(std::move(seqs));
}

struct SimplicityResult {
  bool simple = true;
  // a violating pair with first(t) < first(t') < last(t) < last(t')
  std::optional<std::pair<std::string, std::string>> witness;
};

/// Interval sweep over [first(t), last(t)]: when t closes, any still-open
/// type that opened after t crosses it. O(n log n); the quadratic pair check
/// stays in the tests as the oracle.
inline SimplicityResult is_simple(const Sequence& q) {
  int n = q.length();
  std::vector<int> first_of(q.items.size());
  std::vector<int> last_of(q.items.size());
  {
    auto [f, l] = detail::first_last_of(q);
    for (int i = 0; i < n; ++i) {
      first_of[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] + 1;
      last_of[static_cast<size_t>(i)] = l[static_cast<size_t>(i)] + 1;
    }
  }
  // open intervals keyed by first position (positions are distinct)
  std::set<std::pair<int, int>> open;  // (first position, position index)
  SimplicityResult r;
  for (int p = 1; p <= n; ++p) {
    size_t idx = static_cast<size_t>(p - 1);
    if (first_of[idx] == p) open.insert({p, p});
    if (last_of[idx] == p) {
      open.erase({first_of[idx], first_of[idx]});
      if (!open.empty() && open.rbegin()->first > first_of[idx]) {
        r.simple = false;
        const std::string& t = q.items[idx];
        const std::string& t2 = q.items[static_cast<size_t>(open.rbegin()->second - 1)];
        r.witness = {t, t2};
        return r;
      }
    }
  }
  return r;
}

/// Parse the ".seq" format: one sequence per line, "name: t1 t2 t3", lines
/// whose first non-blank character is '#' are comments, blank lines ignored.
inline SequenceSet parse_sequences(const std::string& text) {
  std::vector<Sequence> seqs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    size_t colon = line.find(':', start);
    if (colon == std::string::npos)
      fail(errc::syntax_error, "line " + std::to_string(lineno) + ": missing ':'");
    Sequence q;
    q.name = line.substr(start, colon - start);
    while (!q.name.empty() && (q.name.back() == ' ' || q.name.back() == '\t'))
      q.name.pop_back();
    if (q.name.empty())
      fail(errc::syntax_error, "line " + std::to_string(lineno) + ": empty sequence name");
    std::istringstream items(line.substr(colon + 1));
    std::string tok;
    while (items >> tok) q.items.push_back(tok);
    if (q.items.empty())
      fail(errc::empty_sequence, "line " + std::to_string(lineno) + ": sequence '" +
                                     q.name + "' has no items");
    seqs.push_back(std::move(q));
  }
  return SequenceSet(std::move(seqs));
}

inline std::string format_sequences(const SequenceSet& q) {
  std::string out;
  for (const auto& s : q.all()) {
    out += s.name;
    out += ':';
    for (const auto& t : s.items) {
      out += ' ';
      out += t;
    }
    out += '\n';
  }
  return out;
}

/// Convenience constructor used throughout the tests: names q1..qk.
inline SequenceSet make_sequences(const std::vector<std::vector<std::string>>& items) {
  std::vector<Sequence> seqs;
  for (size_t i = 0; i < items.size(); ++i)
    seqs.push_back({"q" + std::to_string(i + 1), items[i]});
  return SequenceSet(std::move(seqs));
}

}  // namespace seqdig
