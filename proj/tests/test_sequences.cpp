#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace seqdig;
using namespace testsupport;

TEST_CASE("parse_sequences") {
  auto q = parse_sequences("q1: a a d e d\nq2: c b b d\nq3: c c d e d\n");
  REQUIRE(q.k() == 3);
  CHECK(q.seq(0).items == std::vector<std::string>{"a", "a", "d", "e", "d"});
  CHECK(q.seq(2).name == "q3");
  CHECK(q.total_items() == 14);
  CHECK(q.types() == std::vector<std::string>{"a", "b", "c", "d", "e"});

  CHECK(parse_sequences("").k() == 0);
  CHECK(parse_sequences("# only a comment\n\n").k() == 0);

  CHECK_THROWS_MATCHES(parse_sequences("q1:\n"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == errc::empty_sequence; }));
  try {
    parse_sequences("q1: a\nno colon here\n");
    FAIL("expected syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::syntax_error);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  // round trip through the .seq format
  SplitMix64 rng(11);
  for (int it = 0; it < 100; ++it) {
    auto r = random_sequences(rng, 4, 8, 6);
    CHECK(parse_sequences(format_sequences(r)) == r);
  }
}

TEST_CASE("position index with sentinels") {
  auto q = parse_sequences("q1: a a d e d\nq2: c b b d\n");
  PositionIndex pos(q);
  int d = q.type_id("d");
  CHECK(pos.first(0, d) == 3);
  CHECK(pos.last(0, d) == 5);
  int a = q.type_id("a");
  CHECK(pos.first(1, a) == q.length(1) + 1);  // absent: n_2 + 1
  CHECK(pos.last(1, a) == 0);                 // absent: 0

  auto single = make_sequences({{"x"}});
  PositionIndex ps(single);
  CHECK(ps.first(0, 0) == 1);
  CHECK(ps.last(0, 0) == 1);
}

TEST_CASE("type stats") {
  auto ex6 = make_sequences({{"a", "a", "d", "e", "d"},
                             {"c", "b", "b", "d"},
                             {"c", "c", "d", "e", "d"}});
  auto s = type_stats(ex6);
  CHECK(s.d_Q == 3);  // d appears in all three sequences
  CHECK(s.c_Q == 5);  // five items of type d
  CHECK(s.d_of[static_cast<size_t>(ex6.type_id("d"))] == 3);
  CHECK(s.c_of[static_cast<size_t>(ex6.type_id("d"))] == 5);

  auto tiny = make_sequences({{"a", "b"}});
  auto st = type_stats(tiny);
  CHECK(st.d_Q == 1);
  CHECK(st.c_Q == 1);

  auto dbl = make_sequences({{"v1", "v2", "v3", "v1", "v2", "v3"}});
  auto sd = type_stats(dbl);
  CHECK(sd.d_Q == 1);
  CHECK(sd.c_Q == 2);

  SplitMix64 rng(12);
  for (int it = 0; it < 200; ++it) {
    auto q = random_sequences(rng, 4, 8, 6);
    auto stats = type_stats(q);
    CHECK(stats.d_Q >= 1);
    CHECK(stats.d_Q <= q.k());
    CHECK(stats.d_Q <= stats.c_Q);
    CHECK(stats.c_Q <= q.total_items());
  }
}

TEST_CASE("normal forms") {
  Sequence q{"q1", {"b", "a", "c", "b", "a"}};
  auto nf = normal_forms(q);
  CHECK(nf.F.items == std::vector<std::string>{"b", "a", "c"});
  CHECK(nf.L.items == std::vector<std::string>{"c", "b", "a"});

  Sequence ex6q1{"q1", {"a", "a", "d", "e", "d"}};
  auto nf1 = normal_forms(ex6q1);
  CHECK(nf1.C.items == std::vector<std::string>{"a", "d", "e", "d"});
  CHECK(nf1.M.items == std::vector<std::string>{"a", "a", "d", "e", "d"});

  Sequence one{"q1", {"x"}};
  auto nf2 = normal_forms(one);
  CHECK(nf2.C.items == std::vector<std::string>{"x"});
  CHECK(nf2.M.items == std::vector<std::string>{"x"});
  CHECK(nf2.F.items == std::vector<std::string>{"x"});
  CHECK(nf2.L.items == std::vector<std::string>{"x"});
}

TEST_CASE("normal form properties") {
  SplitMix64 rng(13);
  for (int it = 0; it < 300; ++it) {
    auto q = random_sequence(rng, 10, 5);
    auto nf = normal_forms(q);

    // F and L keep exactly one item per type, M at most two
    std::map<std::string, int> fc, lc, mc;
    for (const auto& t : nf.F.items) ++fc[t];
    for (const auto& t : nf.L.items) ++lc[t];
    for (const auto& t : nf.M.items) ++mc[t];
    std::set<std::string> types(q.items.begin(), q.items.end());
    CHECK(fc.size() == types.size());
    CHECK(lc.size() == types.size());
    for (const auto& [t, c] : fc) CHECK(c == 1);
    for (const auto& [t, c] : lc) CHECK(c == 1);
    for (const auto& [t, c] : mc) CHECK(c <= 2);

    // g is invariant under C and M
    auto g = sequence_digraph(SequenceSet({q}));
    CHECK(sequence_digraph(SequenceSet({nf.C})) == g);
    CHECK(sequence_digraph(SequenceSet({nf.M})) == g);
  }
}

TEST_CASE("is_simple") {
  auto r1 = is_simple(Sequence{"q", {"b", "a", "c", "b", "a"}});
  CHECK_FALSE(r1.simple);
  REQUIRE(r1.witness);
  CHECK(r1.witness->first == "b");
  CHECK(r1.witness->second == "a");

  auto r2 = is_simple(Sequence{"q", {"v1", "v2", "v1", "v2"}});
  CHECK_FALSE(r2.simple);

  CHECK(is_simple(Sequence{"q", {"a", "b", "c"}}).simple);
  CHECK(is_simple(Sequence{"q", {"x"}}).simple);

  SplitMix64 rng(14);
  for (int it = 0; it < 1000; ++it) {
    auto q = random_sequence(rng, 12, 5);
    auto r = is_simple(q);
    CHECK(r.simple == simple_oracle(q));
    if (!r.simple) {
      // the witness pair really interleaves
      REQUIRE(r.witness);
      std::map<std::string, std::pair<int, int>> span;
      for (int p = 1; p <= q.length(); ++p) {
        auto [it2, fresh] = span.try_emplace(q.items[static_cast<size_t>(p - 1)], p, p);
        if (!fresh) it2->second.second = p;
      }
      auto a = span.at(r.witness->first), b = span.at(r.witness->second);
      CHECK(a.first < b.first);
      CHECK(b.first < a.second);
      CHECK(a.second < b.second);
    }
  }
}

TEST_CASE("reverse_set") {
  auto q = make_sequences({{"a", "b", "c"}});
  CHECK(reverse_set(q).seq(0).items == std::vector<std::string>{"c", "b", "a"});

  SplitMix64 rng(15);
  for (int it = 0; it < 100; ++it) {
    auto r = random_sequences(rng, 4, 8, 6);
    CHECK(reverse_set(reverse_set(r)) == r);
  }
}

TEST_CASE("simple iff g splits into the union of F and L digraphs") {
  SplitMix64 rng(16);
  for (int it = 0; it < 1000; ++it) {
    auto q = random_sequence(rng, 10, 5);
    auto nf = normal_forms(q);
    auto whole = sequence_digraph(SequenceSet({q}));
    auto split = digraph_union(sequence_digraph(SequenceSet({nf.F})),
                               sequence_digraph(SequenceSet({nf.L})));
    CHECK(is_simple(q).simple == (whole == split));
  }
}
