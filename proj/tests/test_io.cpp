#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "carsync/constructions.hpp"
#include "carsync/io.hpp"
#include "carsync/verify.hpp"
#include "instances.hpp"

using namespace carsync;

namespace {

std::size_t defined_transitions(const PartialDfa& dfa) {
  std::size_t count = 0;
  for (const auto& row : dfa.delta()) {
    count += std::count_if(row.begin(), row.end(),
                           [](StateId t) { return t != kUndefined; });
  }
  return count;
}

std::size_t count_edges(const std::string& dot) {
  std::size_t count = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos;
       pos = dot.find("->", pos + 2)) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("document layout") {
  const PartialDfa dfa("tiny", {"p", "q"}, {"a"}, {{1, kUndefined}});
  CHECK(to_document(dfa) ==
        "{\n"
        "  \"name\": \"tiny\",\n"
        "  \"states\": [\n    \"p\",\n    \"q\"\n  ],\n"
        "  \"letters\": [\n    \"a\"\n  ],\n"
        "  \"delta\": [\n    [\n      1,\n      null\n    ]\n  ]\n"
        "}\n");
}

TEST_CASE("property: document round trip on every builder output") {
  for (const auto& spec : testing::small_specs()) {
    const PartialDfa dfa = build(spec).dfa;
    CAPTURE(dfa.name());
    const std::string text = to_document(dfa);
    const PartialDfa back = from_document(text);
    CHECK(back == dfa);
    CHECK(to_document(back) == text);
  }
}

TEST_CASE("property: DOT has one edge per defined transition") {
  for (const auto& spec : testing::small_specs()) {
    const PartialDfa dfa = build(spec).dfa;
    const std::string dot = to_dot(dfa);
    CHECK(dot.starts_with("digraph "));
    CHECK(dot.ends_with("}\n"));
    CHECK(count_edges(dot) == defined_transitions(dfa));
    CHECK(std::count(dot.begin(), dot.end(), '{') ==
          std::count(dot.begin(), dot.end(), '}'));
  }
}

TEST_CASE("from_document rejects malformed input") {
  CHECK_THROWS_AS(from_document("{"), DocumentError);
  CHECK_THROWS_AS(from_document("[]"), DocumentError);
  CHECK_THROWS_AS(from_document(R"({"name":"x","states":["p"],"letters":["a"]})"),
                  DocumentError);
  CHECK_THROWS_AS(
      from_document(
          R"({"name":"x","states":["p"],"letters":["a"],"delta":[[0]],"extra":1})"),
      DocumentError);
  CHECK_THROWS_AS(
      from_document(R"({"name":"x","states":["p"],"letters":["a"],"delta":[[1]]})"),
      DocumentError);
  CHECK_THROWS_AS(
      from_document(R"({"name":"x","states":["p"],"letters":["a"],"delta":[["0"]]})"),
      DocumentError);
  CHECK_THROWS_AS(
      from_document(
          R"({"name":"x","states":["p"],"letters":["a","a"],"delta":[[0],[0]]})"),
      DocumentError);
  CHECK_THROWS_AS(
      from_document(R"({"name":"x","states":[],"letters":["a"],"delta":[[]]})"),
      DocumentError);
  const PartialDfa ok = from_document(
      R"({"name":"x","states":["p","q"],"letters":["a"],"delta":[[null,0]]})");
  CHECK(ok.target(0, 0) == kUndefined);
  CHECK(ok.target(1, 0) == 0);
}

TEST_CASE("verify_instance") {
  const auto lin = verify_instance({Family::Linear, 2});
  CHECK(lin.claimed == 10);
  CHECK(lin.measured == Measured{std::uint64_t{10}});
  CHECK(lin.pass);

  const auto lin1 = verify_instance({Family::Linear, 1});
  CHECK(lin1.measured == Measured{std::uint64_t{1}});
  CHECK_FALSE(lin1.pass);

  const auto bin = verify_instance({Family::Binary, 1, 4, Variant::Repaired});
  CHECK(bin.measured == Measured{std::uint64_t{3}});
  CHECK_FALSE(bin.pass);

  const auto dia = verify_instance({Family::DiameterBinary, 2, 4, Variant::Repaired});
  CHECK(dia.measured == Measured{std::uint64_t{40}});
  CHECK(dia.pass);

  const auto pan = verify_instance({Family::Panteleev, 1});
  CHECK(pan.pass);

  const auto capped = verify_instance({Family::Linear, 3}, {.max_nodes = 4});
  CHECK(capped.measured == Measured{Capped{}});
  CHECK_FALSE(capped.pass);

  CHECK(verify_row(lin, false).ends_with("PASS"));
  CHECK(verify_row(capped, false).find("CAP") != std::string::npos);
}
