#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "digraph.hpp"
#include "dpw.hpp"
#include "error.hpp"
#include "sequences.hpp"

namespace seqdig {

inline std::string json_escape(const std::string& s) {
  std::string r;
  r.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      case '\r': r += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          r += buf;
        } else {
          r += c;
        }
    }
  }
  return r;
}

inline std::string json_string_array(const std::vector<std::string>& v) {
  std::string r = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) r += ',';
    r += '"';
    r += json_escape(v[i]);
    r += '"';
  }
  r += ']';
  return r;
}

/// Digraph JSON, byte-stable: vertices sorted, arcs sorted lexicographically
/// by (u, v), no whitespace.
inline std::string digraph_to_json(const Digraph& g) {
  std::string r = "{\"vertices\":";
  r += json_string_array(g.labels());
  r += ",\"arcs\":[";
  bool first = true;
  for (const auto& [u, v] : g.arcs()) {
    if (!first) r += ',';
    first = false;
    r += "[\"";
    r += json_escape(u);
    r += "\",\"";
    r += json_escape(v);
    r += "\"]";
  }
  r += "]}";
  return r;
}

inline Digraph digraph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::syntax_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    fail(errc::syntax_error, "digraph JSON needs \"vertices\" and \"arcs\"");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail(errc::syntax_error, "vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      fail(errc::syntax_error, "arcs must be [\"u\",\"v\"] pairs");
    arcs.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
  }
  return Digraph::make(vertices, arcs);
}

/// Edge-list text: one "u v" line per arc; a line with a single token
/// declares an isolated vertex; '#' starts a comment line.
inline std::string digraph_to_edge_list(const Digraph& g) {
  std::string r;
  for (const auto& [u, v] : g.arcs()) {
    r += u;
    r += ' ';
    r += v;
    r += '\n';
  }
  for (int v = 0; v < g.order(); ++v)
    if (g.outdeg(v) == 0 && g.indeg(v) == 0) {
      r += g.label(v);
      r += '\n';
    }
  return r;
}

inline Digraph digraph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vertices;
  std::vector<Arc> arcs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string u, v, extra;
    ls >> u;
    if (!(ls >> v)) {
      vertices.push_back(u);
      continue;
    }
    if (ls >> extra)
      fail(errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'u v'");
    vertices.push_back(u);
    vertices.push_back(v);
    arcs.emplace_back(u, v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Digraph::make(vertices, arcs);
}

inline std::string dot_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  r += '"';
  return r;
}

inline std::string digraph_to_dot(const Digraph& g, const std::string& name = "G") {
  std::string r = "digraph " + name + " {\n";
  for (const auto& v : g.labels()) {
    r += "  ";
    r += dot_quote(v);
    r += ";\n";
  }
  for (const auto& [u, v] : g.arcs()) {
    r += "  ";
    r += dot_quote(u);
    r += " -> ";
    r += dot_quote(v);
    r += ";\n";
  }
  r += "}\n";
  return r;
}

inline std::string decomposition_to_json(const DirectedPathDecomposition& x) {
  std::string r = "{\"bags\":[";
  for (size_t i = 0; i < x.bags.size(); ++i) {
    if (i) r += ',';
    r += json_string_array(x.bags[i]);
  }
  r += "],\"width\":" + std::to_string(x.width()) + "}";
  return r;
}

inline DirectedPathDecomposition decomposition_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::syntax_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("bags"))
    fail(errc::syntax_error, "decomposition JSON needs \"bags\"");
  DirectedPathDecomposition x;
  for (const auto& bag : j["bags"]) {
    std::vector<std::string> b;
    for (const auto& v : bag) {
      if (!v.is_string()) fail(errc::syntax_error, "bag entries must be strings");
      b.push_back(v.get<std::string>());
    }
    x.bags.push_back(std::move(b));
  }
  return x;
}

/// State digraph in DOT, nodes labeled "(i1,...,ik)/f" and arcs labeled by
/// the consumed type. Guarded by a state budget.
inline std::string state_digraph_dot(const SequenceSet& q, size_t max_states = 10000) {
  if (q.k() == 0) fail(errc::empty_input, "no sequences");
  size_t total = 1;
  for (int j = 0; j < q.k(); ++j) {
    size_t d = static_cast<size_t>(q.length(j)) + 1;
    size_t prod = total * d;
    if (prod / d != total || prod > max_states)
      fail(errc::too_large, "state digraph exceeds " + std::to_string(max_states) + " states");
    total = prod;
  }

  std::vector<int> state(static_cast<size_t>(q.k()), 0);
  auto state_name = [&](const std::vector<int>& s) {
    std::string r = "(";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) r += ',';
      r += std::to_string(s[i]);
    }
    r += ')';
    return r;
  };

  std::string r = "digraph states {\n  rankdir=LR;\n";
  for (size_t idx = 0; idx < total; ++idx) {
    int f = static_cast<int>(active_set(q, state).size());
    r += "  " + dot_quote(state_name(state)) + " [label=" +
         dot_quote(state_name(state) + "/" + std::to_string(f)) + "];\n";
    for (int j = 0; j < q.k(); ++j) {
      if (state[static_cast<size_t>(j)] >= q.length(j)) continue;
      auto succ = state;
      ++succ[static_cast<size_t>(j)];
      const std::string& t =
          q.seq(j).items[static_cast<size_t>(state[static_cast<size_t>(j)])];
      r += "  " + dot_quote(state_name(state)) + " -> " + dot_quote(state_name(succ)) +
           " [label=" + dot_quote(t) + "];\n";
    }
    for (int j = 0; j < q.k(); ++j) {
      if (++state[static_cast<size_t>(j)] <= q.length(j)) break;
      state[static_cast<size_t>(j)] = 0;
    }
  }
  r += "}\n";
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot write file: " + path);
  out << content;
}

/// FNV-1a over the raw bytes; used as the input digest in run reports.
inline std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace seqdig
