#include <doctest.h>

#include <random>

#include "carsync/constructions.hpp"
#include "carsync/landau.hpp"
#include "carsync/solvers.hpp"
#include "support.hpp"

using namespace carsync;

namespace {

std::string witness_text(const PartialDfa& dfa, const SearchResult& r) {
  return format_word(dfa, r.witness);
}

}  // namespace

TEST_CASE("shortest_careful_sync examples") {
  const PartialDfa constant("k", {"0", "1", "2"}, {"a"}, {{1, 1, 1}});
  const auto r1 = shortest_careful_sync(constant);
  REQUIRE(r1.has_value());
  CHECK(r1->length == 1);
  CHECK(r1->reached == StateSet{1});

  const PartialDfa swap("swap", {"0", "1"}, {"s"}, {{1, 0}});
  CHECK_FALSE(shortest_careful_sync(swap).has_value());

  // k = 1 degenerates: c alone merges the three states.
  const PartialDfa lin1 = build_linear(1);
  const auto r2 = shortest_careful_sync(lin1);
  REQUIRE(r2.has_value());
  CHECK(r2->length == 1);
  CHECK(witness_text(lin1, *r2) == "c");

  const PartialDfa lin2 = build_linear(2);
  const auto r3 = shortest_careful_sync(lin2);
  REQUIRE(r3.has_value());
  CHECK(r3->length == 10);
  CHECK(witness_text(lin2, *r3) == "c a2 a2 a1 a2 a2 a1 a2 a2 y");

  const auto r4 = shortest_careful_sync(build_linear(3));
  REQUIRE(r4.has_value());
  CHECK(r4->length == 28);
}

TEST_CASE("counter families: frozen measurements") {
  struct Row {
    Family family;
    unsigned k;
    unsigned base;
    Variant variant;
    std::size_t length;
  };
  const Row rows[] = {
      {Family::ConstAlphabet, 1, 3, Variant::Repaired, 1},
      {Family::ConstAlphabet, 2, 3, Variant::Repaired, 25},
      {Family::ConstAlphabet, 2, 2, Variant::Repaired, 13},
      {Family::ConstAlphabet, 3, 2, Variant::Repaired, 29},
      {Family::ConstAlphabet, 2, 3, Variant::Literal, 7},
      {Family::Binary, 1, 3, Variant::Repaired, 3},
      {Family::Binary, 1, 4, Variant::Repaired, 3},
      {Family::Binary, 2, 2, Variant::Repaired, 19},
      {Family::Binary, 2, 3, Variant::Literal, 17},
  };
  for (const Row& row : rows) {
    const PartialDfa dfa = build({row.family, row.k, row.base, row.variant}).dfa;
    CAPTURE(dfa.name());
    const auto r = shortest_careful_sync(dfa);
    REQUIRE(r.has_value());
    CHECK(r->length == row.length);
    CHECK(is_carefully_synchronizing(dfa, r->witness));
  }
}

TEST_CASE("shortest_sync_from with a fixed target state") {
  const PartialDfa dfa = build_linear(1);
  const StateId z1 = *dfa.find_state("z1");
  const auto r = shortest_sync_from(dfa, dfa.all_states(), z1);
  REQUIRE(r.has_value());
  CHECK(format_word(dfa, r->witness) == "c a1 a1");
  CHECK(r->reached == StateSet{z1});
  // The start set is never a goal at length 0.
  const auto loop = shortest_sync_from(dfa, StateSet{z1}, z1);
  REQUIRE(loop.has_value());
  CHECK(loop->length > 0);
  CHECK_THROWS_AS(shortest_sync_from(dfa, StateSet{}, AnySingleton{}), InvalidState);
  CHECK_THROWS_AS(shortest_sync_from(dfa, StateSet{0}, StateId{9}), InvalidState);
}

TEST_CASE("depth_of") {
  const PartialDfa unary = testing::unary_dfa({1, 2, 0});
  const auto d1 = depth_of(unary, ExactTransformation{PartialTransformation({1, 2, 0})});
  REQUIRE(d1.has_value());
  CHECK(d1->length == 1);
  const auto d3 = depth_of(unary, ExactTransformation{PartialTransformation::identity(3)});
  REQUIRE(d3.has_value());
  CHECK(d3->length == 3);
  CHECK_FALSE(depth_of(unary, ConstantTo{0}).has_value());

  const Construction p1 = build_panteleev(1);
  CHECK(depth_of(p1.dfa, *p1.target)->length == 2);

  const Construction p2 = build_panteleev(2);
  const auto r = depth_of(p2.dfa, *p2.target);
  REQUIRE(r.has_value());
  // c is total, so it may be reapplied on a subset holding no pair {i, i+k};
  // that shortcut gives 10 rather than C(4,2)*g(2) = 12.
  CHECK(r->length == 10);
  CHECK(format_word(p2.dfa, r->witness) ==
        "c x1_2 x1_3 x1_4 c x1_2 x1_3 x1_4 x2_3 x2_4");
  CHECK(satisfies(p2.dfa, *p2.target, r->witness));

  const Construction dia = build_diameter_binary(1, 4, Variant::Repaired);
  const auto rd = depth_of(dia.dfa, *dia.target);
  REQUIRE(rd.has_value());
  CHECK(rd->length == 8);
  CHECK(satisfies(dia.dfa, *dia.target, rd->witness));

  CHECK_THROWS_AS(
      depth_of(unary, ExactTransformation{PartialTransformation::identity(2)}),
      DomainMismatch);
}

TEST_CASE("semigroup_summary") {
  const auto cyc = semigroup_summary(testing::unary_dfa({1, 2, 0}));
  CHECK(cyc.element_count == 3);
  CHECK(cyc.diameter == 3);
  CHECK(cyc.witness_word.size() == 3);

  const auto con = semigroup_summary(testing::unary_dfa({0, 0}));
  CHECK(con.element_count == 1);
  CHECK(con.diameter == 1);

  for (unsigned n : {3u, 5u, 7u}) {
    const Permutation p = max_order_permutation(n);
    const auto s = semigroup_summary(testing::unary_dfa(p.image()));
    CHECK(s.diameter == static_cast<std::size_t>(landau(n)));
    CHECK(s.element_count == s.diameter);
  }

  const Construction p2 = build_panteleev(2);
  const auto ps = semigroup_summary(p2.dfa);
  CHECK(ps.element_count == 129);
  CHECK(ps.diameter == 10);
  CHECK(word_transformation(p2.dfa, ps.witness_word) == ps.witness_depth_element);
}

TEST_CASE("brute force oracle") {
  const PartialDfa lin1 = build_linear(1);
  const auto r = brute_force_shortest_sync(lin1, 5);
  REQUIRE(r.has_value());
  CHECK(r->length == 1);

  const PartialDfa swap("swap", {"0", "1"}, {"s"}, {{1, 0}});
  CHECK_FALSE(brute_force_shortest_sync(swap, 6).has_value());

  // Reachable only at length 28, far beyond the bound.
  CHECK_FALSE(brute_force_shortest_sync(build_linear(3), 4).has_value());
}

TEST_CASE("resource caps") {
  const PartialDfa lin3 = build_linear(3);
  CHECK_THROWS_AS(shortest_careful_sync(lin3, {.max_nodes = 5}), ResourceCapExceeded);
  CHECK_THROWS_AS(shortest_careful_sync(lin3, {.max_length = 5}), ResourceCapExceeded);
  CHECK(shortest_careful_sync(lin3, {.max_length = 28}).has_value());
  CHECK_THROWS_AS(enumerate_semigroup(build_panteleev(2).dfa, {.max_nodes = 20}),
                  ResourceCapExceeded);
}

TEST_CASE("property: BFS agrees with brute force on random automata") {
  std::mt19937 rng(424242);
  for (int seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = 1 + rng() % 3;
    const PartialDfa dfa = testing::random_dfa(rng, n, m, 0.2);
    CAPTURE(seed);
    // Words up to length 10 over 3 letters are too many to list; the BFS
    // result bounds what the oracle must reach.
    std::optional<SearchResult> bfs;
    try {
      bfs = shortest_careful_sync(dfa, {.max_length = 10});
    } catch (const ResourceCapExceeded&) {
    }
    const std::size_t cap = m == 3 ? 8 : 10;
    const auto brute = brute_force_shortest_sync(dfa, cap);
    if (bfs && bfs->length <= cap) {
      REQUIRE(brute.has_value());
      CHECK(brute->length == bfs->length);
      CHECK(brute->witness == bfs->witness);
    } else {
      CHECK_FALSE(brute.has_value());
    }
  }
}

TEST_CASE("property: soundness and determinism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t m = 1 + rng() % 3;
    const PartialDfa dfa = testing::random_dfa(rng, n, m, 0.2);
    const auto a = shortest_careful_sync(dfa);
    const auto b = shortest_careful_sync(dfa);
    REQUIRE(a.has_value() == b.has_value());
    if (!a) continue;
    CHECK(a->witness == b->witness);
    CHECK(a->witness.size() == a->length);
    CHECK(is_carefully_synchronizing(dfa, a->witness));
    CHECK(apply_word(dfa, dfa.all_states(), a->witness) == a->reached);

    const auto f = word_transformation(dfa, a->witness);
    const auto d = depth_of(dfa, ExactTransformation{f});
    REQUIRE(d.has_value());
    CHECK(d->length <= a->length);
    CHECK(word_transformation(dfa, d->witness) == f);
  }
}

TEST_CASE("property: semigroup depths are consistent") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = 1 + rng() % 3;
    const PartialDfa dfa = testing::random_dfa(rng, n, m, 0.25);
    const auto elements = enumerate_semigroup(dfa);
    const auto summary = semigroup_summary(dfa);
    CHECK(summary.element_count == elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const Word w = witness_of(elements, i);
      REQUIRE(w.size() == elements[i].depth);
      REQUIRE(word_transformation(dfa, w) == elements[i].value);
      REQUIRE(elements[i].depth <= summary.diameter);
      const auto d = depth_of(dfa, ExactTransformation{elements[i].value});
      REQUIRE(d.has_value());
      REQUIRE(d->length == elements[i].depth);
    }
  }
}

TEST_CASE("property: monotonicity under supersets on construction families") {
  std::mt19937 rng(17);
  const PartialDfa instances[] = {
      build_linear(2),
      build_const_alphabet(2, 3, Variant::Repaired),
      build_const_alphabet(2, 2, Variant::Literal),
      build_binary(2, 2, Variant::Repaired),
      build_diameter_binary(2, 3, Variant::Repaired).dfa,
  };
  for (const PartialDfa& dfa : instances) {
    const std::uint64_t full = dfa.all_states().bits();
    for (int trial = 0; trial < 40; ++trial) {
      const StateSet super(full & rng());
      const StateSet sub(super.bits() & rng());
      if (sub.empty()) continue;
      const auto small = shortest_sync_from(dfa, sub, AnySingleton{});
      const auto big = shortest_sync_from(dfa, super, AnySingleton{});
      if (big) {
        REQUIRE(small.has_value());
        CHECK(small->length <= big->length);
      }
    }
  }
}
