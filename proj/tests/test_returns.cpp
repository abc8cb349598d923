#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "derw/analysis.hpp"
#include "derw/registry.hpp"
#include "derw/returns.hpp"

using namespace derw;

namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("return words to a in the pd fixed point") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  ReturnStructure rs = return_words(Word(oracle.alphabet(), "a"), oracle);
  CHECK(strings(rs.returns) == std::vector<std::string>{"ab", "a"});
  CHECK(rs.skip_prefix.empty());
  CHECK(rs.stable);
  CHECK(rs.derived_prefix.str().substr(0, 13) == "0110001101101");
}

TEST_CASE("return words to aa in the pd fixed point") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  ReturnStructure rs = return_words(Word(oracle.alphabet(), "aa"), oracle);
  CHECK(strings(rs.returns) == std::vector<std::string>{"a", "aababab", "aab"});
  CHECK(rs.skip_prefix.str() == "ab");
}

TEST_CASE("return words to abaa in the pd fixed point") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  ReturnStructure rs = return_words(Word(oracle.alphabet(), "abaa"), oracle);
  CHECK(strings(rs.returns) == std::vector<std::string>{"abaaabab", "abaa"});
}

TEST_CASE("derived word to a") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  CHECK(derived_word(Word(oracle.alphabet(), "a"), oracle, 13).str() ==
        "0110001101101");
}

TEST_CASE("derived word to aa") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  CHECK(derived_word(Word(oracle.alphabet(), "aa"), oracle, 6).str() ==
        "010202");
}

TEST_CASE("derived word to b matches the derived word to a") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  Word da = derived_word(Word(oracle.alphabet(), "a"), oracle, 13);
  Word db = derived_word(Word(oracle.alphabet(), "b"), oracle, 13);
  CHECK(db == da);
}

TEST_CASE("derived word to the empty factor recodes the fixed point") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  Word d = derived_word(Word(oracle.alphabet(), ""), oracle, 20);
  CHECK(d.str() == "01000101010001000100");
  CHECK(d.alphabet().letters() == "01");
}

TEST_CASE("complete return words") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  ReturnStructure rs_a = return_words(Word(oracle.alphabet(), "a"), oracle);
  CHECK(strings(complete_return_words(rs_a)) ==
        std::vector<std::string>{"aba", "aa"});
  ReturnStructure rs_aa = return_words(Word(oracle.alphabet(), "aa"), oracle);
  CHECK(strings(complete_return_words(rs_aa)) ==
        std::vector<std::string>{"aaa", "aabababaa", "aabaa"});
}

TEST_CASE("every complete return word contains its factor exactly twice") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  for (const char* f : {"a", "b", "aa", "ab", "aba", "abaa", "aab"}) {
    ReturnStructure rs = return_words(Word(oracle.alphabet(), f), oracle);
    for (const Word& c : complete_return_words(rs)) {
      Occurrences occs = occurrences(rs.factor, c);
      REQUIRE(occs.size() == 2);
      CHECK(occs.front() == 0);
      CHECK(occs.back() == c.size() - rs.factor.size());
    }
  }
}

TEST_CASE("reconstruction: skip prefix plus coded returns is the scanned prefix") {
  for (const char* name : {"pd", "xi", "trib"}) {
    PrefixOracle oracle(parse_substitution_arg(name));
    for (const Word& w : factor_inventory(oracle, 4)) {
      if (w.empty()) continue;
      ReturnStructure rs = return_words(w, oracle);
      std::string rebuilt = rs.skip_prefix.str();
      for (char digit : rs.derived_prefix.str()) {
        rebuilt += rs.returns[static_cast<std::size_t>(digit - '0')].str();
      }
      CHECK(rebuilt == std::string(oracle.view(rs.covered)));
    }
  }
}

TEST_CASE("the first derived digit is 0") {
  PrefixOracle oracle(parse_substitution_arg("trib"));
  for (const Word& w : factor_inventory(oracle, 5)) {
    if (w.empty()) continue;
    ReturnStructure rs = return_words(w, oracle);
    CHECK(rs.derived_prefix[0] == '0');
  }
}

TEST_CASE("non-factors and budget exhaustion") {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  CHECK_THROWS_AS(return_words(Word(oracle.alphabet(), "bb"), oracle),
                  NotAFactor);
  CHECK_THROWS_AS(return_words(Word(oracle.alphabet(), ""), oracle), Error);

  // A factor as long as the whole budget cannot repeat within it.
  ScanPolicy tiny;
  tiny.initial_scan = 32;
  tiny.max_scan = 32;
  Word whole = oracle.word(32);
  CHECK_THROWS_AS(return_words(whole, oracle, tiny), InsufficientData);

  ScanPolicy small;
  small.max_scan = 64;
  CHECK_THROWS_AS(
      derived_word(Word(oracle.alphabet(), "a"), oracle, 1000, small),
      InsufficientData);
}

TEST_CASE("derived words ignore unique left extensions of non-special factors") {
  // For a factor w that is not left special and not a prefix, prepending its
  // unique left extension changes neither the derived word nor, up to
  // conjugation, the return words.
  std::mt19937 rng(20240811);
  for (const char* name : {"pd", "trib"}) {
    PrefixOracle oracle(parse_substitution_arg(name));
    auto inventory = factor_inventory(oracle, 8);
    int executed = 0;
    std::shuffle(inventory.begin(), inventory.end(), rng);
    for (const Word& w : inventory) {
      if (w.empty()) continue;
      SpecialClass cls = classify_special(w, oracle);
      if (!cls.stable || cls.left.size() != 1) continue;
      if (oracle.view(w.size()) == w.view()) continue;  // skip prefixes
      char a = *cls.left.begin();
      Word aw = Word(oracle.alphabet(), std::string(1, a)) + w;

      Word dw = derived_word(w, oracle, 60);
      Word daw = derived_word(aw, oracle, 60);
      CHECK(dw == daw);

      ReturnStructure rw = return_words(w, oracle);
      ReturnStructure raw = return_words(aw, oracle);
      REQUIRE(rw.returns.size() == raw.returns.size());
      for (std::size_t i = 0; i < rw.returns.size(); ++i) {
        // a r a^{-1}, elementwise in derived order
        const std::string& r = rw.returns[i].str();
        REQUIRE(!r.empty());
        CHECK(raw.returns[i].str() == std::string(1, a) + r.substr(0, r.size() - 1));
        CHECK(r.back() == a);
      }
      if (++executed >= 12) break;
    }
    CHECK(executed >= 5);
  }
}

TEST_CASE("derived words ignore unique right extensions of non-special factors") {
  for (const char* name : {"pd", "trib"}) {
    PrefixOracle oracle(parse_substitution_arg(name));
    int executed = 0;
    for (const Word& w : factor_inventory(oracle, 6)) {
      if (w.empty()) continue;
      SpecialClass cls = classify_special(w, oracle);
      if (!cls.stable || cls.right.size() != 1) continue;
      char a = *cls.right.begin();
      Word wa = w + Word(oracle.alphabet(), std::string(1, a));
      CHECK(derived_word(w, oracle, 60) == derived_word(wa, oracle, 60));
      CHECK(strings(return_words(w, oracle).returns) ==
            strings(return_words(wa, oracle).returns));
      if (++executed >= 12) break;
    }
    CHECK(executed >= 5);
  }
}
