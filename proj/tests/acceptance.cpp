// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact string or structure equality; closure verdicts
// are horizon-qualified with L=30 factors and N=2000 derived letters.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "derw/closure.hpp"
#include "derw/episturmian.hpp"
#include "derw/registry.hpp"

using namespace derw;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws std::runtime_error on failure
};

void fail(const std::string& message) { throw std::runtime_error(message); }

void require(bool ok, const std::string& message) {
  if (!ok) fail(message);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream msg;
    msg << what << ": expected \"" << want << "\", got \"" << got << "\"";
    fail(msg.str());
  }
}

std::string join(const std::vector<Word>& words) {
  std::string out;
  bool first = true;
  for (const Word& w : words) {
    if (!first) out += ",";
    first = false;
    out += w.str();
  }
  return out;
}

// --- criterion 1: fixed point prefixes -----------------------------------

void criterion_fixed_points() {
  require_eq(fixed_point_prefix(parse_substitution_arg("pd"), 20).str(),
             std::string("abaaabababaaabaaabaa"), "pd prefix");
  require_eq(fixed_point_prefix(parse_substitution_arg("trib"), 21).str(),
             std::string("abacabaabacababacabaa"), "trib prefix");
  require_eq(fixed_point_prefix(parse_substitution_arg("xi"), 13).str(),
             std::string("0110001101101"), "xi prefix");
}

// --- criterion 2: return words --------------------------------------------

void criterion_return_words() {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  auto returns_of = [&](const std::string& f) {
    return join(return_words(Word(oracle.alphabet(), f), oracle).returns);
  };
  require_eq(returns_of("a"), std::string("ab,a"), "returns to a");
  require_eq(returns_of("aa"), std::string("a,aababab,aab"), "returns to aa");
  require_eq(returns_of("abaa"), std::string("abaaabab,abaa"),
             "returns to abaa");
}

// --- criterion 3: derived words -------------------------------------------

void criterion_derived_words() {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  auto dz = [&](const std::string& f, std::size_t n) {
    return derived_word(Word(oracle.alphabet(), f), oracle, n);
  };
  require_eq(dz("a", 13).str(), std::string("0110001101101"),
             "derived word to a");
  Word nu_fp = fixed_point_prefix(parse_substitution_arg("nu"), 2000);
  require(dz("aa", 2000) == nu_fp,
          "derived word to aa differs from the nu fixed point at 2000");
  Word da = dz("a", 2000);
  for (const char* f : {"b", "ab", "aba"}) {
    require(dz(f, 2000) == da,
            std::string("derived word to ") + f + " differs from that of a");
  }
}

// --- criterion 4: derived substitutions -----------------------------------

void criterion_durand() {
  Morphism xi = parse_morphism_arg("xi");
  struct Case {
    const char* source;
    const char* prefix;
  };
  for (Case c : {Case{"pd", "a"}, Case{"pd", "ab"}, Case{"xi", "0"}}) {
    PrefixOracle oracle(parse_substitution_arg(c.source));
    DerivationCertificate cert =
        durand_substitution(oracle, Word(oracle.alphabet(), c.prefix));
    require(cert.derived.morphism() == xi,
            std::string("durand(") + c.source + ", " + c.prefix +
                ") is not xi");
    require(cert.derived_primitivity.primitive,
            "derived substitution not primitive");
    for (std::size_t i = 0; i < cert.returns.returns.size(); ++i) {
      std::string rebuilt;
      for (char digit : cert.decompositions[i].str()) {
        rebuilt +=
            cert.returns.returns[static_cast<std::size_t>(digit - '0')].str();
      }
      require_eq(rebuilt,
                 cert.source.morphism().apply_chars(
                     cert.returns.returns[i].view()),
                 "decomposition does not re-concatenate");
    }
  }
}

// --- criterion 5: link morphism -------------------------------------------

void criterion_link() {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  LinkMorphism link = link_morphism(oracle, Word(oracle.alphabet(), "aa"));
  require_eq(link.skip_prefix.str(), std::string("ab"), "skip prefix");
  require_eq(link.alpha.format(), std::string("0->01;1->02"), "alpha rules");

  Word upstream = derived_word(Word(oracle.alphabet(), "abaa"), oracle, 500);
  Word mapped = link.alpha.apply(upstream);
  Word downstream =
      derived_word(Word(oracle.alphabet(), "aa"), oracle, mapped.size());
  require(mapped == downstream,
          "alpha(derived word of abaa) does not match the derived word of aa");
}

// --- criterion 6: semiconjugacies -----------------------------------------

void criterion_semiconjugacy() {
  Morphism alpha = Morphism::parse("0->01;1->02");
  Morphism xi = parse_morphism_arg("xi");
  require(check_semiconjugacy(alpha, compose(xi, xi), parse_morphism_arg("nu")),
          "alpha xi^2 != nu alpha");
  require(check_semiconjugacy(alpha, xi, parse_morphism_arg("eta")),
          "alpha xi != eta alpha");

  Word v = fixed_point_prefix(parse_substitution_arg("xi"), 1000);
  Word u = alpha.apply(v);
  Word nu_fp = fixed_point_prefix(parse_substitution_arg("nu"), 2000);
  require(nu_fp.is_prefix_of(u) || u.is_prefix_of(nu_fp),
          "alpha image of the xi fixed point does not overlap the nu fixed "
          "point");
  require(u.size() >= 2000, "alpha image too short for the overlap check");
  require(u.prefix(2000) == nu_fp, "transport overlap mismatch at 2000");
}

// --- criterion 7: special factors and ancestors ---------------------------

void criterion_specials_and_ancestors() {
  PrefixOracle oracle(parse_substitution_arg("pd"));
  auto w = [&](const std::string& s) { return Word(oracle.alphabet(), s); };
  require(classify_special(w("a"), oracle).kind == SpecialKind::bispecial,
          "a not bispecial");
  require(classify_special(w("aa"), oracle).kind == SpecialKind::bispecial,
          "aa not bispecial");
  require(classify_special(w("b"), oracle).kind == SpecialKind::none,
          "b unexpectedly special");

  AncestorReport aa = ancestors(w("aa"), oracle);
  require(aa.ancestors.size() == 1 && aa.ancestors[0].ancestor.str() == "b",
          "ancestors of aa are not {b}");
  require(aa.ambiguous, "aa should allow an ambiguous ancestor");

  AncestorReport aba = ancestors(w("aba"), oracle);
  require(aba.ancestors.size() == 2 &&
              aba.ancestors[0].ancestor.str() == "aa" &&
              aba.ancestors[1].ancestor.str() == "ab",
          "ancestors of aba are not {aa, ab}");
  require(!aba.ambiguous, "aba should not allow an ambiguous ancestor");

  auto bis = bispecial_factors(oracle, 7);
  require_eq(join(bis), std::string(",a,aa,aba,ababa,abaaaba"),
             "bispecial factors up to length 7");
  for (const Word& b : bis) {
    if (b.size() <= 2) continue;
    bool is_phi_image = false;
    for (const Word& v : bis) {
      if (phi_map(v) == b) is_phi_image = true;
    }
    require(is_phi_image, "bispecial " + b.str() + " is not a phi image");
  }
}

// --- criterion 8: episturmian ----------------------------------------------

void criterion_episturmian() {
  require(power(parse_morphism_arg("trib"), 3) ==
              epi_morphism(Alphabet("abc"), "abc"),
          "trib^3 != L_abc");
  require(epi_family(Word(Alphabet("abc"), "abc")).size() == 3,
          "family of abc does not have 3 members");

  for (const std::string& letters :
       {std::string("a"), std::string("ab"), std::string("abc")}) {
    Alphabet alphabet(letters);
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= 4; ++len) {
      std::vector<std::string> next;
      for (const auto& prev : words) {
        if (prev.size() + 1 != len) continue;
        for (char c : letters) next.push_back(prev + c);
      }
      for (const auto& z : next) {
        bool all_letters = true;
        for (char c : letters) {
          if (z.find(c) == std::string::npos) all_letters = false;
        }
        bool prim = is_primitive(epi_morphism(alphabet, z)).primitive;
        if (all_letters != prim) {
          fail("primitivity criterion fails for z=" + z + " over {" + letters +
               "}");
        }
      }
      words.insert(words.end(), next.begin(), next.end());
    }
  }
}

// --- criterion 9: closure verdicts at L=30, N=2000 -------------------------

void criterion_closure() {
  ClosureParams params;  // defaults are the pinned horizons
  require(params.max_factor_len == 30 && params.derived_horizon == 2000,
          "closure defaults are not (30, 2000)");

  require(check_closed({parse_substitution_arg("pd"),
                        parse_substitution_arg("xi"),
                        parse_substitution_arg("nu")},
                       params)
              .verified,
          "{pd, xi, nu} not verified");
  require(check_closed({parse_substitution_arg("xi"),
                        parse_substitution_arg("nu")},
                       params)
              .verified,
          "{xi, nu} not verified");
  require(verify_family_theorem(Word(Alphabet("abc"), "abc"), params).verified,
          "family of abc not verified");
  require(check_closed({parse_substitution_arg("trib")}, params).verified,
          "{trib} not verified");

  ClosureReport alone = check_closed({parse_substitution_arg("pd")}, params);
  require(!alone.verified, "{pd} unexpectedly verified");
  require(alone.counterexample.has_value(), "{pd} lacks a counterexample");
  require_eq(alone.matches[*alone.counterexample].factor.str(),
             std::string("a"), "{pd} counterexample factor");
}

// --- criterion 10: randomized property suites ------------------------------

void criterion_property_suites() {
  std::mt19937 rng(0x5eed);

  // Extension invariance of derived words for non-special factors.
  {
    int executed = 0;
    for (const char* name : {"pd", "trib"}) {
      PrefixOracle oracle(parse_substitution_arg(name));
      auto inventory = factor_inventory(oracle, 10);
      std::uniform_int_distribution<std::size_t> pick(0, inventory.size() - 1);
      int guard = 0;
      while (executed < (name == std::string("pd") ? 100 : 200) &&
             ++guard < 4000) {
        const Word& w = inventory[pick(rng)];
        if (w.empty()) continue;
        SpecialClass cls = classify_special(w, oracle);
        if (!cls.stable) continue;
        if (cls.left.size() == 1 && oracle.view(w.size()) != w.view()) {
          char a = *cls.left.begin();
          Word aw = Word(oracle.alphabet(), std::string(1, a)) + w;
          if (derived_word(aw, oracle, 50) != derived_word(w, oracle, 50)) {
            fail("left extension changed the derived word of " + w.str());
          }
          ++executed;
        }
        if (cls.right.size() == 1) {
          char a = *cls.right.begin();
          Word wa = w + Word(oracle.alphabet(), std::string(1, a));
          if (derived_word(wa, oracle, 50) != derived_word(w, oracle, 50)) {
            fail("right extension changed the derived word of " + w.str());
          }
          if (join(return_words(wa, oracle).returns) !=
              join(return_words(w, oracle).returns)) {
            fail("right extension changed the return words of " + w.str());
          }
          ++executed;
        }
      }
    }
    require(executed >= 200, "fewer than 200 extension-invariance cases");
  }

  // Reconstruction and complete-return-word occurrence counts, random
  // factors of four fixed points.
  {
    int reconstructed = 0;
    int occurrence_checked = 0;
    for (const char* name : {"pd", "xi", "nu", "trib"}) {
      PrefixOracle oracle(parse_substitution_arg(name));
      Word sample = oracle.word(3000);
      std::uniform_int_distribution<std::size_t> pos(0, 2500);
      std::uniform_int_distribution<std::size_t> len(1, 14);
      for (int trial = 0; trial < 60; ++trial) {
        Word w = sample.subword(pos(rng), len(rng));
        ReturnStructure rs = return_words(w, oracle);
        std::string rebuilt = rs.skip_prefix.str();
        for (char digit : rs.derived_prefix.str()) {
          rebuilt += rs.returns[static_cast<std::size_t>(digit - '0')].str();
        }
        if (rebuilt != std::string(oracle.view(rs.covered))) {
          fail("reconstruction failed for factor " + w.str() + " of " + name);
        }
        ++reconstructed;
        for (const Word& c : complete_return_words(rs)) {
          Occurrences occs = occurrences(w, c);
          if (occs.size() != 2 || occs.front() != 0 ||
              occs.back() != c.size() - w.size()) {
            fail("complete return word " + c.str() + " of factor " + w.str() +
                 " does not contain it exactly twice");
          }
          ++occurrence_checked;
        }
      }
    }
    require(reconstructed >= 200, "fewer than 200 reconstruction cases");
    require(occurrence_checked >= 200, "fewer than 200 occurrence cases");
  }

  // Oracle equivalence: the certificate fixed point replays the scanned
  // derived word, for random prefixes of the pd and trib fixed points.
  {
    int executed = 0;
    for (const char* name : {"pd", "trib"}) {
      PrefixOracle oracle(parse_substitution_arg(name));
      std::uniform_int_distribution<std::size_t> len(1, 25);
      for (int trial = 0; trial < 100; ++trial) {
        Word prefix = oracle.word(len(rng));
        DerivationCertificate cert = durand_substitution(oracle, prefix);
        if (fixed_point_prefix(cert.derived, 120) !=
            derived_word(prefix, oracle, 120)) {
          fail("certificate replay mismatch for prefix of length " +
               std::to_string(prefix.size()) + " of " + name);
        }
        ++executed;
      }
    }
    require(executed >= 200, "fewer than 200 oracle-equivalence cases");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"fixed point prefixes", criterion_fixed_points},
      {"return words", criterion_return_words},
      {"derived words at horizon 2000", criterion_derived_words},
      {"derived substitution certificates", criterion_durand},
      {"link morphism for aa", criterion_link},
      {"semiconjugacies and transport", criterion_semiconjugacy},
      {"special factors and ancestors", criterion_specials_and_ancestors},
      {"episturmian monoid", criterion_episturmian},
      {"closure theorems at (L=30, N=2000)", criterion_closure},
      {"randomized property suites (>=200 cases each)",
       criterion_property_suites},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    bool ok = detail.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].name
              << "): " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) std::cout << "    " << detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
