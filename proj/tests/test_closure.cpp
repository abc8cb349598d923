#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "derw/closure.hpp"
#include "derw/registry.hpp"

using namespace derw;

namespace {

ClosureParams quick(std::size_t max_len, std::size_t horizon) {
  ClosureParams params;
  params.max_factor_len = max_len;
  params.derived_horizon = horizon;
  return params;
}

}  // namespace

TEST_CASE("pd has exactly two derived representatives") {
  auto reps = derived_representatives(parse_substitution_arg("pd"),
                                      quick(20, 300));
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].factor.str() == "a");
  CHECK(reps[1].factor.str() == "aa");
  CHECK_FALSE(reps[0].error);
  CHECK_FALSE(reps[1].error);
  CHECK(reps[0].derived_prefix.str().substr(0, 13) == "0110001101101");
  CHECK(reps[1].derived_prefix.str().substr(0, 6) == "010202");
}

TEST_CASE("prefixes of pd yield a single derived representative") {
  ClosureParams params = quick(20, 300);
  params.selection = ClosureParams::Selection::prefixes_only;
  auto reps = derived_representatives(parse_substitution_arg("pd"), params);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].factor.str() == "a");
}

TEST_CASE("the special-factor reduction loses no derived words") {
  for (const char* name : {"pd", "xi"}) {
    ClosureParams reduced = quick(6, 150);
    ClosureParams exhaustive = quick(6, 150);
    exhaustive.selection = ClosureParams::Selection::all_factors;
    std::set<std::string> lhs, rhs;
    for (auto& rep : derived_representatives(parse_substitution_arg(name),
                                             reduced)) {
      REQUIRE_FALSE(rep.error);
      lhs.insert(rep.derived_prefix.str());
    }
    for (auto& rep : derived_representatives(parse_substitution_arg(name),
                                             exhaustive)) {
      REQUIRE_FALSE(rep.error);
      rhs.insert(rep.derived_prefix.str());
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("{pd, xi, nu} is closed under derivation at a reduced horizon") {
  auto report = check_closed(
      {parse_substitution_arg("pd"), parse_substitution_arg("xi"),
       parse_substitution_arg("nu")},
      quick(12, 400));
  CHECK(report.verified);
  CHECK(report.verdict() == "verified to (L=12, N=400)");
  CHECK_FALSE(report.counterexample.has_value());
  for (const ClosureMatch& row : report.matches) {
    REQUIRE(row.matched_member >= 0);
    REQUIRE(row.renaming.has_value());
  }
}

TEST_CASE("{xi, nu} is closed under derivation at a reduced horizon") {
  auto report = check_closed(
      {parse_substitution_arg("xi"), parse_substitution_arg("nu")},
      quick(12, 400));
  CHECK(report.verified);
}

TEST_CASE("{trib} is closed under derivation at a reduced horizon") {
  auto report = check_closed({parse_substitution_arg("trib")}, quick(10, 400));
  CHECK(report.verified);
}

TEST_CASE("{pd} alone is not closed; the counterexample is the factor a") {
  auto report = check_closed({parse_substitution_arg("pd")}, quick(12, 400));
  CHECK_FALSE(report.verified);
  CHECK(report.verdict() == "not verified");
  REQUIRE(report.counterexample.has_value());
  const ClosureMatch& row = report.matches[*report.counterexample];
  CHECK(row.factor.str() == "a");
  CHECK(row.matched_member == -1);
  CHECK(row.derived_prefix.str().substr(0, 13) == "0110001101101");
  // The empty factor itself matches pd, so it is not the counterexample.
  CHECK(report.matches[0].factor.empty());
  CHECK(report.matches[0].matched_member == 0);
}

TEST_CASE("prefix rows of a closure report carry certificate-backed matches") {
  auto report = check_closed(
      {parse_substitution_arg("xi"), parse_substitution_arg("nu")},
      quick(8, 300));
  bool saw_conjugacy = false;
  for (const ClosureMatch& row : report.matches) {
    if (row.method == "conjugacy+prefix") saw_conjugacy = true;
  }
  CHECK(saw_conjugacy);
}

TEST_CASE("positive matches re-verify from scratch") {
  auto report = check_closed(
      {parse_substitution_arg("xi"), parse_substitution_arg("nu")},
      quick(10, 300));
  REQUIRE(report.verified);
  for (const ClosureMatch& row : report.matches) {
    auto again = fixed_up_to_renaming(
        row.derived_prefix,
        report.members[static_cast<std::size_t>(row.matched_member)], 300);
    REQUIRE(again.has_value());
    CHECK(*again == *row.renaming);
  }
}

TEST_CASE("family theorem for abc records rotation indices") {
  auto report = verify_family_theorem(Word(Alphabet("abc"), "abc"),
                                      quick(12, 400));
  CHECK(report.verified);
  CHECK(report.members.size() == 3);
  for (const ClosureMatch& row : report.matches) {
    REQUIRE(row.family_index.has_value());
    CHECK(*row.family_index >= 1);
    CHECK(*row.family_index <= 3);
  }
}

TEST_CASE("family theorem for ab verifies") {
  auto report = verify_family_theorem(Word(Alphabet("ab"), "ab"),
                                      quick(12, 400));
  CHECK(report.verified);
}

TEST_CASE("family theorem rejects subscripts that miss a letter") {
  CHECK_THROWS_AS(verify_family_theorem(Word(Alphabet("ab"), "a"), quick(6, 100)),
                  NotPrimitive);
}

TEST_CASE("closure preconditions") {
  CHECK_THROWS_AS(check_closed({}, quick(6, 100)), Error);
  CHECK_THROWS_AS(
      check_closed({Substitution::from(Morphism::parse("a->ab;b->b"))},
                   quick(6, 100)),
      NotPrimitive);
}

TEST_CASE("derived words over a derived word come from the original word") {
  // v is the derived word of the pd fixed point to a; derived words of v's
  // factors all appear among derived words of factors of the pd fixed point.
  PrefixOracle z_oracle(parse_substitution_arg("pd"));
  PrefixOracle v_oracle(parse_substitution_arg("xi"));
  Word da = derived_word(Word(z_oracle.alphabet(), "a"), z_oracle, 200);
  Word daa = derived_word(Word(z_oracle.alphabet(), "aa"), z_oracle, 200);

  std::mt19937 rng(5);
  Word v = fixed_point_prefix(v_oracle, 600);
  std::uniform_int_distribution<std::size_t> pos(0, 500);
  std::uniform_int_distribution<std::size_t> len(1, 10);
  int executed = 0;
  while (executed < 40) {
    std::size_t start = pos(rng);
    Word x = v.subword(start, len(rng));
    Word d = derived_word(x, v_oracle, 200);
    bool matches = d == da || d == daa;
    CHECK_MESSAGE(matches, "factor ", x.str(), " of the derived word");
    ++executed;
  }
}
