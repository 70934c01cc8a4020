#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace seqdig;
using namespace testsupport;

namespace {

const SequenceSet& ex6() {
  static const SequenceSet q = make_sequences(
      {{"a", "a", "d", "e", "d"}, {"c", "b", "b", "d"}, {"c", "c", "d", "e", "d"}});
  return q;
}

}  // namespace

TEST_CASE("sequence_digraph on the worked examples") {
  auto g = sequence_digraph(ex6());
  CHECK(g.order() == 5);
  CHECK(g.arcs() == std::vector<Arc>{{"a", "d"},
                                     {"a", "e"},
                                     {"b", "d"},
                                     {"c", "b"},
                                     {"c", "d"},
                                     {"c", "e"},
                                     {"d", "e"},
                                     {"e", "d"}});

  auto d0 = sequence_digraph(make_sequences({{"c", "a", "b", "c"}}));
  CHECK(d0.has_arc("b", "c"));
  CHECK(d0.has_arc("c", "a"));
  CHECK_FALSE(d0.has_arc("b", "a"));
  CHECK(d0 == pattern_D0());

  auto single = sequence_digraph(make_sequences({{"x"}}));
  CHECK(single.order() == 1);
  CHECK(single.arc_count() == 0);
}

TEST_CASE("scan construction and first/last criterion always agree") {
  CHECK(sequence_digraph(ex6()) == sequence_digraph_oracle(ex6()));
  CHECK(sequence_digraph(make_sequences({{"a", "b"}, {"b", "a"}})) ==
        Digraph::make({"a", "b"}, {{"a", "b"}, {"b", "a"}}));

  SplitMix64 rng(21);
  for (int it = 0; it < 1000; ++it) {
    auto q = random_sequences(rng, 4, 8, 6);
    CHECK(sequence_digraph(q) == sequence_digraph_oracle(q));
  }
}

TEST_CASE("complement arcs computed directly") {
  CHECK(complement_arcs(make_sequences({{"c", "a", "b", "c"}})) ==
        std::vector<Arc>{{"b", "a"}});
  CHECK(complement_arcs(make_sequences({{"v1", "v2", "v3", "v1", "v2", "v3"}})).empty());
  CHECK(complement_arcs(make_sequences({{"a", "b"}})) == std::vector<Arc>{{"b", "a"}});

  SplitMix64 rng(22);
  for (int it = 0; it < 300; ++it) {
    auto q = random_sequences(rng, 4, 8, 6);
    CHECK(complement_arcs(q) == complement(sequence_digraph(q)).arcs());
  }
}

TEST_CASE("sequence_system") {
  Digraph fig2 = Digraph::make({"a", "b", "c", "d", "e", "f"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"},
                                {"e", "a"}, {"e", "f"}, {"f", "a"}});
  auto q = sequence_system(fig2);
  REQUIRE(q.k() == 7);
  std::vector<std::vector<std::string>> expected = {
      {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}, {"e", "f"}, {"f", "a"}};
  std::vector<std::vector<std::string>> actual;
  for (const auto& s : q.all()) actual.push_back(s.items);
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  CHECK(actual == expected);

  auto k2bi = sequence_system(Digraph::make({"u", "v"}, {{"u", "v"}, {"v", "u"}}));
  REQUIRE(k2bi.k() == 1);
  CHECK(k2bi.seq(0).items == std::vector<std::string>{"u", "v", "u"});

  auto lone = sequence_system(Digraph::make({"x"}, {}));
  REQUIRE(lone.k() == 1);
  CHECK(lone.seq(0).items == std::vector<std::string>{"x"});
}

TEST_CASE("round trip g(q(G)) = G on random digraphs") {
  SplitMix64 rng(23);
  for (int it = 0; it < 300; ++it) {
    auto g = random_digraph(1 + static_cast<int>(rng.below(8)), rng,
                            10 + static_cast<int>(rng.below(80)));
    CHECK(sequence_digraph(sequence_system(g)) == g);
  }
}

TEST_CASE("generate fixed families") {
  GeneratorSpec tt;
  tt.family = GeneratorSpec::Family::transitive_tournament;
  tt.n = 3;
  auto qtt = generate(tt);
  REQUIRE(qtt.k() == 1);
  CHECK(qtt.seq(0).items == std::vector<std::string>{"v1", "v2", "v3"});
  auto gtt = sequence_digraph(qtt);
  auto p = structural_predicates(gtt);
  CHECK(p.tournament);
  CHECK(p.acyclic);

  GeneratorSpec bc;
  bc.family = GeneratorSpec::Family::bidirectional_clique;
  bc.n = 3;
  auto gbc = sequence_digraph(generate(bc));
  CHECK(structural_predicates(gbc).complete_bioriented);
  CHECK(gbc.order() == 3);

  GeneratorSpec ob;
  ob.family = GeneratorSpec::Family::oriented_bipartite;
  ob.n = 2;
  ob.m = 2;
  auto qob = generate(ob);
  REQUIRE(qob.k() == 1);
  CHECK(qob.seq(0).items ==
        std::vector<std::string>{"w1", "w2", "w1", "w2", "v1", "v2", "v1", "v2"});
  // g = complement of the orientation of K_{2,2} with all arcs v -> w
  std::vector<std::string> verts{"v1", "v2", "w1", "w2"};
  std::vector<Arc> knm_arcs;
  for (const auto& v : {"v1", "v2"})
    for (const auto& w : {"w1", "w2"}) knm_arcs.emplace_back(v, w);
  CHECK(sequence_digraph(qob) == complement(Digraph::make(verts, knm_arcs)));

  CHECK_THROWS_MATCHES(generate(GeneratorSpec{}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::invalid_spec; }));
}

TEST_CASE("generate complement_of_k_tournaments") {
  GeneratorSpec spec;
  spec.family = GeneratorSpec::Family::complement_of_k_tournaments;
  spec.sizes = {3, 3};
  auto q = generate(spec);
  CHECK(q.k() == 2);  // k(k-1) sequences
  auto stats = type_stats(q);
  CHECK(stats.c_Q == 2);  // 2(k-1) items per type

  // equals the complement of two disjoint transitive tournaments
  std::vector<std::string> verts;
  std::vector<Arc> arcs;
  for (int c = 1; c <= 2; ++c)
    for (int i = 1; i <= 3; ++i) {
      verts.push_back("c" + std::to_string(c) + "v" + std::to_string(i));
      for (int j = i + 1; j <= 3; ++j)
        arcs.emplace_back("c" + std::to_string(c) + "v" + std::to_string(i),
                          "c" + std::to_string(c) + "v" + std::to_string(j));
    }
  CHECK(sequence_digraph(q) == complement(Digraph::make(verts, arcs)));

  spec.sizes = {2, 2, 2};
  auto q3 = generate(spec);
  CHECK(q3.k() == 6);
  CHECK(type_stats(q3).c_Q == 4);

  spec.sizes = {4};
  auto q1 = generate(spec);
  REQUIRE(q1.k() == 1);
  CHECK(structural_predicates(sequence_digraph(q1)).transitive);
}

TEST_CASE("generate random is reproducible per seed") {
  GeneratorSpec spec;
  spec.family = GeneratorSpec::Family::random;
  spec.k = 3;
  spec.length = 6;
  spec.type_count = 4;
  spec.seed = 42;
  spec.has_seed = true;
  auto a = generate(spec);
  auto b = generate(spec);
  CHECK(a == b);
  spec.seed = 43;
  CHECK(generate(spec) != a);

  GeneratorSpec noseed = spec;
  noseed.has_seed = false;
  CHECK_THROWS_MATCHES(generate(noseed), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::invalid_spec; }));
}

TEST_CASE("one sequence gives a semicomplete digraph") {
  SplitMix64 rng(24);
  for (int it = 0; it < 200; ++it) {
    auto q = random_sequences(rng, 1, 10, 6);
    auto p = structural_predicates(sequence_digraph(q));
    CHECK(p.semicomplete);
  }
}

TEST_CASE("no long induced paths or cycles in g(Q) for k sequences") {
  auto directed_path = [](int n) {
    std::vector<std::string> v;
    std::vector<Arc> a;
    for (int i = 1; i <= n; ++i) v.push_back("p" + std::to_string(i));
    for (int i = 1; i < n; ++i)
      a.emplace_back("p" + std::to_string(i), "p" + std::to_string(i + 1));
    return Digraph::make(v, a);
  };
  auto directed_cycle = [](int n) {
    std::vector<std::string> v;
    std::vector<Arc> a;
    for (int i = 1; i <= n; ++i) v.push_back("p" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
      a.emplace_back("p" + std::to_string(i), "p" + std::to_string(i % n + 1));
    return Digraph::make(v, a);
  };

  SplitMix64 rng(25);
  for (int it = 0; it < 200; ++it) {
    int k = 1 + static_cast<int>(rng.below(4));
    std::vector<std::vector<std::string>> items;
    for (int i = 0; i < k; ++i)
      items.push_back(random_sequence(rng, 8, 7).items);
    auto qq = make_sequences(items);
    auto g = sequence_digraph(qq);
    if (k + 2 <= 6) CHECK_FALSE(contains_induced(g, directed_path(k + 2)).has_value());
    if (k >= 3 && k + 1 <= 6)
      CHECK_FALSE(contains_induced(g, directed_cycle(k + 1)).has_value());
  }
}
