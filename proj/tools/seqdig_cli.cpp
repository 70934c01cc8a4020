// seqdig: batch front end for sequence digraphs - construction, class
// recognition, directed path-width, state-digraph export, instance
// generation. JSON reports go to stdout (byte-stable across runs); timing
// and progress notes go to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqdig/seqdig.hpp"

namespace {

using namespace seqdig;

int exit_code_for(errc code) {
  switch (code) {
    case errc::state_space_too_large:
    case errc::too_large:
      return 3;
    case errc::cross_check_failed:
    case errc::derivation_ambiguous:
      return 4;
    default:
      return 2;
  }
}

struct Input {
  std::string path;
  std::string bytes;
  std::optional<SequenceSet> sequences;
  std::optional<Digraph> digraph;

  const Digraph& as_digraph() {
    if (!digraph) digraph = sequence_digraph(*sequences);
    return *digraph;
  }
};

Input load_input(const std::string& path) {
  Input in;
  in.path = path;
  in.bytes = read_file(path);
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) {
    in.digraph = digraph_from_json(in.bytes);
  } else if (ends_with(".seq")) {
    in.sequences = parse_sequences(in.bytes);
  } else {
    try {
      in.digraph = digraph_from_json(in.bytes);
    } catch (const Error&) {
      in.sequences = parse_sequences(in.bytes);
    }
  }
  return in;
}

std::string sequences_json(const SequenceSet& q) {
  std::string r = "[";
  for (int i = 0; i < q.k(); ++i) {
    if (i) r += ',';
    r += json_string_array(q.seq(i).items);
  }
  r += ']';
  return r;
}

std::string witness_json(const ClassDecision& d) {
  if (d.member && d.sequences)
    return "{\"kind\":\"sequences\",\"data\":" + sequences_json(*d.sequences) + "}";
  if (!d.member && d.forbidden) {
    std::string r = "{\"kind\":\"forbidden\",\"pattern\":\"" +
                    json_escape(d.forbidden->pattern) + "\",\"embedding\":[";
    for (size_t i = 0; i < d.forbidden->map.size(); ++i) {
      if (i) r += ',';
      r += "[\"" + json_escape(d.forbidden->map[i].first) + "\",\"" +
           json_escape(d.forbidden->map[i].second) + "\"]";
    }
    r += "]}";
    return r;
  }
  return "null";
}

size_t state_budget(std::optional<size_t> cli_value) {
  if (cli_value) return *cli_value;
  if (const char* env = std::getenv("SEQDIG_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return size_t{1} << 26;
}

int cmd_build(const std::string& in_path, const std::string& out_path,
              const std::string& dot_path, bool check, bool pretty) {
  Input in = load_input(in_path);
  if (!in.sequences) fail(errc::io_error, "build expects a .seq input");
  Digraph g = sequence_digraph(*in.sequences);
  if (check && sequence_digraph_oracle(*in.sequences) != g)
    fail(errc::cross_check_failed, "scan construction and first/last criterion disagree");
  std::string gjson = digraph_to_json(g);
  if (!out_path.empty()) write_file(out_path, gjson + "\n");
  if (!dot_path.empty()) write_file(dot_path, digraph_to_dot(g));
  if (pretty) {
    std::cout << "vertices: " << g.order() << "\narcs: " << g.arc_count() << "\n";
    for (const auto& [u, v] : g.arcs()) std::cout << "  " << u << " -> " << v << "\n";
  } else {
    std::cout << "{\"command\":\"build\",\"input\":\"" << json_escape(in_path)
              << "\",\"digest\":\"" << fnv1a_hex(in.bytes) << "\",\"vertices\":" << g.order()
              << ",\"arcs\":" << g.arc_count() << ",\"digraph\":" << gjson << "}\n";
  }
  return 0;
}

int cmd_dpw(const std::string& in_path, const std::string& method_name,
            const std::string& emit_path, std::optional<size_t> max_states, bool no_normalize,
            bool pretty) {
  Input in = load_input(in_path);
  DpwMethod method = DpwMethod::automatic;
  if (method_name == "xp")
    method = DpwMethod::xp;
  else if (method_name == "brute")
    method = DpwMethod::brute;
  else if (method_name == "interval")
    method = DpwMethod::interval;
  else if (method_name != "auto")
    fail(errc::invalid_spec, "unknown method: " + method_name);

  XpOptions opt;
  opt.max_states = state_budget(max_states);
  opt.normalize = !no_normalize;

  DpwReport r = in.sequences ? dpw(*in.sequences, method, opt) : dpw(*in.digraph, method, opt);

  const Digraph certificate_digraph =
      in.sequences ? sequence_digraph(*in.sequences) : *in.digraph;
  if (!r.empty) {
    auto check = validate_decomposition(certificate_digraph, r.decomposition);
    if (!check.width || *check.width != r.width)
      fail(errc::cross_check_failed, "emitted decomposition failed validation");
  }

  std::string decomposition_json = decomposition_to_json(r.decomposition);
  if (!emit_path.empty()) write_file(emit_path, decomposition_json + "\n");

  std::cerr << "method=" << r.method << " states=" << r.state_count << " time=" << r.seconds
            << "s\n";
  if (pretty) {
    std::cout << "width: " << r.width << (r.empty ? " (empty input)" : "") << "\n"
              << "method: " << r.method << "\n";
    if (r.state_count) std::cout << "states: " << r.state_count << "\n";
    std::cout << "decomposition: " << decomposition_json << "\n";
  } else {
    std::cout << "{\"command\":\"dpw\",\"input\":\"" << json_escape(in_path)
              << "\",\"digest\":\"" << fnv1a_hex(in.bytes) << "\",\"width\":" << r.width
              << ",\"empty\":" << (r.empty ? "true" : "false") << ",\"method\":\"" << r.method
              << "\",\"state_count\":" << r.state_count
              << ",\"decomposition\":" << decomposition_json << "}\n";
  }
  return 0;
}

int cmd_classify(const std::string& in_path, const std::string& which, bool pretty) {
  Input in = load_input(in_path);
  const Digraph& g = in.as_digraph();
  struct Row {
    std::string name;
    ClassDecision decision;
    std::optional<int> k;
  };
  std::vector<Row> rows;
  if (which == "s11" || which == "all") rows.push_back({"S_1_1", is_S11(g), std::nullopt});
  if (which == "sk1" || which == "all") {
    auto r = classify_Sk1(g);
    ClassDecision d;
    d.member = r.k.has_value();
    if (d.member)
      d.sequences = r.sequences;
    else
      d.forbidden = r.forbidden;
    rows.push_back({"S_k_1", std::move(d), r.k});
  }
  if (which == "s12" || which == "all") rows.push_back({"S_1_2", is_S12(g), std::nullopt});
  if (rows.empty()) fail(errc::invalid_spec, "unknown class: " + which);

  if (pretty) {
    for (const auto& row : rows) {
      std::cout << row.name << ": " << (row.decision.member ? "member" : "non-member");
      if (row.k) std::cout << " (k=" << *row.k << ")";
      if (row.decision.member && row.decision.sequences) {
        std::cout << " witness:";
        for (const auto& s : row.decision.sequences->all()) {
          std::cout << " [";
          for (size_t i = 0; i < s.items.size(); ++i)
            std::cout << (i ? "," : "") << s.items[i];
          std::cout << "]";
        }
      }
      if (!row.decision.member && row.decision.forbidden)
        std::cout << " forbidden: " << row.decision.forbidden->pattern;
      std::cout << "\n";
    }
  } else {
    std::string out = "{\"command\":\"classify\",\"input\":\"" + json_escape(in_path) +
                      "\",\"digest\":\"" + fnv1a_hex(in.bytes) + "\",\"results\":[";
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) out += ',';
      out += "{\"class\":\"" + rows[i].name + "\",\"member\":" +
             (rows[i].decision.member ? "true" : "false");
      if (rows[i].k) out += ",\"k\":" + std::to_string(*rows[i].k);
      out += ",\"witness\":" + witness_json(rows[i].decision) + "}";
    }
    out += "]}";
    std::cout << out << "\n";
  }
  return 0;
}

int cmd_reconstruct(const std::string& in_path, const std::string& which,
                    const std::string& out_path, bool pretty) {
  Input in = load_input(in_path);
  const Digraph& g = in.as_digraph();
  SequenceSet witness;
  if (which == "s11") {
    witness = g.order() == 0 ? SequenceSet{} : SequenceSet({reconstruct_S11(g)});
  } else if (which == "sk1") {
    auto r = classify_Sk1(g);
    if (!r.k) fail(errc::not_in_class, "digraph is not a disjoint union of transitive tournaments");
    witness = r.sequences;
  } else if (which == "s12") {
    witness = g.order() == 0 ? SequenceSet{} : SequenceSet({reconstruct_S12(g)});
  } else {
    fail(errc::invalid_spec, "unknown class: " + which);
  }
  if (sequence_digraph(witness) != g)
    fail(errc::cross_check_failed, "reconstructed sequences do not rebuild the input");
  if (!out_path.empty()) write_file(out_path, format_sequences(witness));
  if (pretty) {
    std::cout << format_sequences(witness);
  } else {
    std::cout << "{\"command\":\"reconstruct\",\"input\":\"" << json_escape(in_path)
              << "\",\"digest\":\"" << fnv1a_hex(in.bytes) << "\",\"class\":\"" << which
              << "\",\"sequences\":" << sequences_json(witness) << "}\n";
  }
  return 0;
}

int cmd_statedigraph(const std::string& in_path, const std::string& dot_path,
                     std::optional<size_t> max_states, bool pretty) {
  Input in = load_input(in_path);
  if (!in.sequences) fail(errc::io_error, "statedigraph expects a .seq input");
  size_t budget = max_states ? *max_states : 10000;
  std::string dot = state_digraph_dot(*in.sequences, budget);
  size_t states = 1;
  for (int j = 0; j < in.sequences->k(); ++j)
    states *= static_cast<size_t>(in.sequences->length(j)) + 1;
  if (!dot_path.empty()) write_file(dot_path, dot);
  if (pretty) {
    std::cout << "states: " << states << "\n";
    if (dot_path.empty()) std::cout << dot;
  } else {
    std::cout << "{\"command\":\"statedigraph\",\"input\":\"" << json_escape(in_path)
              << "\",\"digest\":\"" << fnv1a_hex(in.bytes) << "\",\"states\":" << states
              << ",\"dot\":\"" << json_escape(dot_path) << "\"}\n";
  }
  return 0;
}

int cmd_gen(const std::string& family, int n, int m, const std::vector<int>& sizes, int k,
            int len, int types, std::optional<uint64_t> seed, const std::string& out_path,
            bool pretty) {
  GeneratorSpec spec;
  if (family == "transitive_tournament")
    spec.family = GeneratorSpec::Family::transitive_tournament;
  else if (family == "bidirectional_clique")
    spec.family = GeneratorSpec::Family::bidirectional_clique;
  else if (family == "oriented_bipartite")
    spec.family = GeneratorSpec::Family::oriented_bipartite;
  else if (family == "complement_of_k_tournaments")
    spec.family = GeneratorSpec::Family::complement_of_k_tournaments;
  else if (family == "random")
    spec.family = GeneratorSpec::Family::random;
  else
    fail(errc::invalid_spec, "unknown family: " + family);
  spec.n = n;
  spec.m = m;
  spec.sizes = sizes;
  spec.k = k;
  spec.length = len;
  spec.type_count = types;
  if (seed) {
    spec.seed = *seed;
    spec.has_seed = true;
  }
  SequenceSet q = generate(spec);
  std::string text = format_sequences(q);
  if (!out_path.empty()) write_file(out_path, text);
  if (pretty) {
    std::cout << text;
  } else {
    std::cout << "{\"command\":\"gen\",\"family\":\"" << family << "\",\"k\":" << q.k()
              << ",\"n\":" << q.total_items() << ",\"out\":\"" << json_escape(out_path)
              << "\",\"sequences\":" << sequences_json(q) << "}\n";
  }
  return 0;
}

int cmd_selftest() {
  int failed = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failed;
  };

  auto ex6 = make_sequences({{"a", "a", "d", "e", "d"},
                             {"c", "b", "b", "d"},
                             {"c", "c", "d", "e", "d"}});
  auto ex5 = make_sequences({{"a", "b", "c", "b", "d", "a"}, {"e", "f", "e", "c"}});

  auto g6 = sequence_digraph(ex6);
  report("ex6-arcs", g6.order() == 5 && g6.arc_count() == 8 &&
                         g6 == sequence_digraph_oracle(ex6));
  report("ex6-dpw-1", dpw_xp(ex6).width == 1 && dpw_bruteforce(g6) == 1);
  report("ex5-dpw-2", dpw_xp(ex5).width == 2 &&
                          dpw_bruteforce(sequence_digraph(ex5)) == 2);

  {
    auto path = transform_with_order(ex5, {"e", "f", "c", "a", "b", "d"});
    std::vector<int> sizes;
    for (const auto& s : path) sizes.push_back(static_cast<int>(active_set(ex5, s).size()));
    report("table3-active-sizes",
           sizes == std::vector<int>{0, 1, 2, 0, 1, 2, 3, 2, 1, 2, 0});
  }
  {
    auto path = transform_with_order(ex6, {"a", "c", "b", "d", "e"});
    report("table2-path-length", path.size() == 15);
    int maxf = 0;
    for (const auto& s : path)
      maxf = std::max(maxf, static_cast<int>(active_set(ex6, s).size()));
    report("table2-max-active-2", maxf == 2);
  }

  Sequence fig4{"q1", {"a", "b", "c", "d", "b", "e", "c", "f", "d", "g", "e", "h",
                       "g", "i", "f", "h", "i", "a"}};
  report("fig4-interval", interval_model(fig4).clique_number == 4 &&
                              dpw_single_sequence(fig4) == 3);

  {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
      GeneratorSpec spec;
      spec.family = GeneratorSpec::Family::bidirectional_clique;
      spec.n = n;
      auto q = generate(spec);
      ok = dpw_xp(q).width == n - 1 && dpw_bruteforce(sequence_digraph(q)) == n - 1 &&
           dpw_single_sequence(q.seq(0)) == n - 1;
    }
    report("bidirectional-cliques", ok);
  }

  report("d0-d6-in-s12", is_S12(pattern_D0()).member && is_S12(pattern_D6()).member);
  report("c3-rejected", !is_S11(pattern_C3()).member && !is_S12(pattern_C3()).member);

  {
    Digraph fig2 = Digraph::make({"a", "b", "c", "d", "e", "f"},
                                 {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                  {"e", "a"}, {"e", "f"}, {"f", "a"}});
    report("fig2-round-trip", sequence_digraph(sequence_system(fig2)) == fig2);
  }

  std::cout << (failed ? "selftest FAILED\n" : "selftest passed\n");
  return failed ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequence digraph toolkit: construction, recognition, directed path-width"};
  app.require_subcommand(1);

  std::string in_path, out_path, dot_path, emit_path;
  std::string method = "auto", which = "all", family;
  bool check = false, pretty = false, no_normalize = false;
  std::optional<size_t> max_states;
  std::optional<uint64_t> seed;
  int n = 0, m = 0, k = 0, len = 0, types = 0;
  std::vector<int> sizes;

  auto* build = app.add_subcommand("build", "build the sequence digraph g(Q) from a .seq file");
  build->add_option("input", in_path, "input .seq file")->required();
  build->add_option("-o,--out", out_path, "write digraph JSON here");
  build->add_option("--dot", dot_path, "write DOT here");
  build->add_flag("--check", check, "cross-run the first/last construction");
  build->add_flag("--pretty", pretty, "human-readable output");

  auto* dpw_cmd = app.add_subcommand("dpw", "directed path-width with certificate");
  dpw_cmd->add_option("input", in_path, "input .seq or digraph .json")->required();
  dpw_cmd->add_option("--method", method, "auto|xp|brute|interval")
      ->check(CLI::IsMember({"auto", "xp", "brute", "interval"}));
  dpw_cmd->add_option("--emit-decomposition", emit_path, "write decomposition JSON here");
  dpw_cmd->add_option("--max-states", max_states, "state budget (overrides SEQDIG_MAX_STATES)");
  dpw_cmd->add_flag("--no-normalize", no_normalize, "skip the M(Q) reduction");
  dpw_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* classify = app.add_subcommand("classify", "class membership with witnesses");
  classify->add_option("input", in_path, "digraph .json (or .seq, classified as g(Q))")
      ->required();
  classify->add_option("--class", which, "s11|sk1|s12|all")
      ->check(CLI::IsMember({"s11", "sk1", "s12", "all"}));
  classify->add_flag("--pretty", pretty, "human-readable output");

  auto* reconstruct = app.add_subcommand("reconstruct", "defining sequences for a member digraph");
  reconstruct->add_option("input", in_path, "digraph .json")->required();
  reconstruct->add_option("--class", which, "s11|sk1|s12")->required();
  reconstruct->add_option("-o,--out", out_path, "write .seq here");
  reconstruct->add_flag("--pretty", pretty, "human-readable output");

  auto* stated = app.add_subcommand("statedigraph", "DOT export of the state digraph");
  stated->add_option("input", in_path, "input .seq file")->required();
  stated->add_option("--dot", dot_path, "write DOT here");
  stated->add_option("--max-states", max_states, "state budget (default 10000)");
  stated->add_flag("--pretty", pretty, "human-readable output");

  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen->add_option("--family", family,
                  "transitive_tournament|bidirectional_clique|oriented_bipartite|"
                  "complement_of_k_tournaments|random")
      ->required();
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--m", m, "second side size (oriented_bipartite)");
  gen->add_option("--sizes", sizes, "component sizes (complement_of_k_tournaments)")
      ->delimiter(',');
  gen->add_option("--k", k, "sequence count (random)");
  gen->add_option("--len", len, "items per sequence (random)");
  gen->add_option("--types", types, "type count (random)");
  gen->add_option("--seed", seed, "PRNG seed (random)");
  gen->add_option("-o,--out", out_path, "write .seq here");
  gen->add_flag("--pretty", pretty, "human-readable output");

  app.add_subcommand("selftest", "run the built-in golden example suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(in_path, out_path, dot_path, check, pretty);
    if (dpw_cmd->parsed())
      return cmd_dpw(in_path, method, emit_path, max_states, no_normalize, pretty);
    if (classify->parsed()) return cmd_classify(in_path, which, pretty);
    if (reconstruct->parsed()) return cmd_reconstruct(in_path, which, out_path, pretty);
    if (stated->parsed()) return cmd_statedigraph(in_path, dot_path, max_states, pretty);
    if (gen->parsed())
      return cmd_gen(family, n, m, sizes, k, len, types, seed, out_path, pretty);
    return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
