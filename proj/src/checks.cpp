#include "derw/checks.hpp"

#include <algorithm>
#include <sstream>

#include "derw/closure.hpp"
#include "derw/episturmian.hpp"
#include "derw/registry.hpp"

namespace derw {

namespace {

Substitution sub(const std::string& name) {
  return parse_substitution_arg(name);
}

bool expect(std::string& detail, const std::string& what,
            const std::string& got, const std::string& want) {
  if (got == want) return true;
  detail = what + ": expected \"" + want + "\", got \"" + got + "\"";
  return false;
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

std::string set_to_string(const std::set<char>& s) {
  return std::string(s.begin(), s.end());
}

}  // namespace

std::vector<Check> reference_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<bool(std::string&)> run) {
    checks.push_back(Check{std::move(name), std::move(run)});
  };

  // Fixed point prefixes.
  add("fixed point of pd, 20 letters", [](std::string& d) {
    return expect(d, "prefix", fixed_point_prefix(sub("pd"), 20).str(),
                  "abaaabababaaabaaabaa");
  });
  add("fixed point of trib, 21 letters", [](std::string& d) {
    return expect(d, "prefix", fixed_point_prefix(sub("trib"), 21).str(),
                  "abacabaabacababacabaa");
  });
  add("fixed point of xi, 13 letters", [](std::string& d) {
    return expect(d, "prefix", fixed_point_prefix(sub("xi"), 13).str(),
                  "0110001101101");
  });

  // Factor and extension structure of the pd fixed point.
  add("pd fixed point avoids bb; length-2 factors are {aa,ab,ba}",
      [](std::string& d) {
        Word x = fixed_point_prefix(sub("pd"), 4096);
        return expect(d, "factors", join(factors(x, 2)), "aa,ab,ba");
      });
  add("pd fixed point has aaab but no aaaa", [](std::string& d) {
    Word x = fixed_point_prefix(sub("pd"), 4096);
    auto f4 = factors(x, 4);
    auto has = [&](const std::string& s) {
      return std::any_of(f4.begin(), f4.end(),
                         [&](const Word& w) { return w.str() == s; });
    };
    if (!has("aaab")) {
      d = "aaab missing from length-4 factors";
      return false;
    }
    if (has("aaaa")) {
      d = "aaaa unexpectedly a factor";
      return false;
    }
    return true;
  });
  add("extensions of b in pd fixed point are ({a},{a})", [](std::string& d) {
    Word x = fixed_point_prefix(sub("pd"), 4096);
    Extensions e = extensions(Word(x.alphabet(), "b"), x);
    return expect(d, "left", set_to_string(e.left), "a") &&
           expect(d, "right", set_to_string(e.right), "a");
  });
  add("extensions of a in pd fixed point are ({a,b},{a,b})",
      [](std::string& d) {
        Word x = fixed_point_prefix(sub("pd"), 4096);
        Extensions e = extensions(Word(x.alphabet(), "a"), x);
        return expect(d, "left", set_to_string(e.left), "ab") &&
               expect(d, "right", set_to_string(e.right), "ab");
      });

  // Morphism algebra.
  add("pd maps ab to abaa", [](std::string& d) {
    Morphism pd = parse_morphism_arg("pd");
    return expect(d, "image", pd.apply_chars("ab"), "abaa");
  });
  add("trib cubed equals epi:abc as a morphism", [](std::string& d) {
    Morphism t3 = power(parse_morphism_arg("trib"), 3);
    Morphism labc = parse_morphism_arg("epi:abc");
    return expect(d, "rules", t3.format(), labc.format());
  });
  add("xi squared maps 0 to 01100 and 1 to 011", [](std::string& d) {
    Morphism xi2 = power(parse_morphism_arg("xi"), 2);
    return expect(d, "rules", xi2.format(), "0->01100;1->011");
  });
  add("pd is primitive with witness exponent 2", [](std::string& d) {
    Primitivity p = is_primitive(parse_morphism_arg("pd"));
    return expect(d, "primitive,k",
                  (p.primitive ? "yes," : "no,") +
                      std::to_string(p.witness_exponent),
                  "yes,2");
  });
  add("eta is not primitive", [](std::string& d) {
    Primitivity p = is_primitive(parse_morphism_arg("eta"));
    if (p.primitive) d = "eta reported primitive";
    return !p.primitive;
  });
  add("epi generator of a over {a,b} is not primitive", [](std::string& d) {
    Primitivity p = is_primitive(epi_generator('a', Alphabet("ab")));
    if (p.primitive) d = "L_a over {a,b} reported primitive";
    return !p.primitive;
  });

  // Return words and derived words of the pd fixed point.
  add("return words to a in pd fixed point are [ab, a]", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto rs = return_words(Word(o.alphabet(), "a"), o);
    return expect(d, "returns", join(rs.returns), "ab,a");
  });
  add("return words to aa are [a, aababab, aab]", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto rs = return_words(Word(o.alphabet(), "aa"), o);
    return expect(d, "returns", join(rs.returns), "a,aababab,aab");
  });
  add("return words to abaa are [abaaabab, abaa]", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto rs = return_words(Word(o.alphabet(), "abaa"), o);
    return expect(d, "returns", join(rs.returns), "abaaabab,abaa");
  });
  add("derived word to a starts 0110001101101", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    return expect(d, "derived",
                  derived_word(Word(o.alphabet(), "a"), o, 13).str(),
                  "0110001101101");
  });

  // Derived substitutions and the link morphism.
  add("derived substitution for prefix a of pd is xi", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto cert = durand_substitution(o, Word(o.alphabet(), "a"));
    return expect(d, "rules", cert.derived.format(), "0->011;1->0");
  });
  add("link morphism for aa in pd: p=ab, alpha 0->01;1->02",
      [](std::string& d) {
        PrefixOracle o(sub("pd"));
        auto link = link_morphism(o, Word(o.alphabet(), "aa"));
        return expect(d, "p", link.skip_prefix.str(), "ab") &&
               expect(d, "alpha", link.alpha.format(), "0->01;1->02");
      });
  add("alpha xi^2 = nu alpha", [](std::string& d) {
    Morphism alpha = Morphism::parse("0->01;1->02");
    bool ok = check_semiconjugacy(alpha, power(parse_morphism_arg("xi"), 2),
                                  parse_morphism_arg("nu"));
    if (!ok) d = "semiconjugacy does not hold";
    return ok;
  });
  add("alpha xi = eta alpha", [](std::string& d) {
    Morphism alpha = Morphism::parse("0->01;1->02");
    bool ok = check_semiconjugacy(alpha, parse_morphism_arg("xi"),
                                  parse_morphism_arg("eta"));
    if (!ok) d = "semiconjugacy does not hold";
    return ok;
  });
  add("derived word to a is fixed by xi (identity renaming, 13 letters)",
      [](std::string& d) {
        PrefixOracle o(sub("pd"));
        Word dw = derived_word(Word(o.alphabet(), "a"), o, 13);
        auto r = fixed_up_to_renaming(dw, sub("xi"), 13);
        if (!r || !r->is_identity()) {
          d = "expected the identity renaming";
          return false;
        }
        return true;
      });
  add("derived word to aa is fixed by nu (identity renaming, 500 letters)",
      [](std::string& d) {
        PrefixOracle o(sub("pd"));
        Word dw = derived_word(Word(o.alphabet(), "aa"), o, 500);
        auto r = fixed_up_to_renaming(dw, sub("nu"), 500);
        if (!r || !r->is_identity()) {
          d = "expected the identity renaming";
          return false;
        }
        return true;
      });

  // Special factors and ancestors.
  add("a and aa are bispecial in the pd fixed point", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto ca = classify_special(Word(o.alphabet(), "a"), o);
    auto caa = classify_special(Word(o.alphabet(), "aa"), o);
    if (ca.kind != SpecialKind::bispecial) {
      d = "a not bispecial";
      return false;
    }
    if (caa.kind != SpecialKind::bispecial) {
      d = "aa not bispecial";
      return false;
    }
    return true;
  });
  add("b is neither left nor right special in the pd fixed point",
      [](std::string& d) {
        PrefixOracle o(sub("pd"));
        auto cls = classify_special(Word(o.alphabet(), "b"), o);
        return expect(d, "class", to_string(cls.kind), "none");
      });
  add("trib fixed point has exactly one right special factor per length <= 10",
      [](std::string& d) {
        PrefixOracle o(sub("trib"));
        auto rs = special_factors(o, 10, Specials::right);
        std::vector<std::size_t> counts(11, 0);
        for (const Word& w : rs) ++counts[w.size()];
        for (std::size_t len = 1; len <= 10; ++len) {
          if (counts[len] != 1) {
            d = "length " + std::to_string(len) + " has " +
                std::to_string(counts[len]) + " right special factors";
            return false;
          }
        }
        return true;
      });
  add("ancestors of aa under pd: {b}, ambiguous", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto rep = ancestors(Word(o.alphabet(), "aa"), o);
    std::vector<Word> anc;
    for (auto& w : rep.ancestors) anc.push_back(w.ancestor);
    return expect(d, "ancestors", join(anc), "b") &&
           expect(d, "ambiguous", rep.ambiguous ? "yes" : "no", "yes");
  });
  add("ancestors of aba under pd: {aa, ab}, unambiguous", [](std::string& d) {
    PrefixOracle o(sub("pd"));
    auto rep = ancestors(Word(o.alphabet(), "aba"), o);
    std::vector<Word> anc;
    for (auto& w : rep.ancestors) anc.push_back(w.ancestor);
    return expect(d, "ancestors", join(anc), "aa,ab") &&
           expect(d, "ambiguous", rep.ambiguous ? "yes" : "no", "no");
  });
  add("phi_map sends bispecial factors of pd to bispecial factors",
      [](std::string& d) {
        PrefixOracle o(sub("pd"));
        for (const Word& v : bispecial_factors(o, 7)) {
          Word image = phi_map(v);
          auto cls = classify_special(image, o);
          if (cls.kind != SpecialKind::bispecial) {
            d = "phi(" + v.str() + ") = " + image.str() + " is " +
                to_string(cls.kind);
            return false;
          }
        }
        return true;
      });

  // Episturmian structure.
  add("epi generator of a over {a,b}: a->a;b->ab", [](std::string& d) {
    return expect(d, "rules", epi_generator('a', Alphabet("ab")).format(),
                  "a->a;b->ab");
  });
  add("family of abc has exactly the 3 rotations", [](std::string& d) {
    auto family = epi_family(Word(Alphabet("abc"), "abc"));
    if (family.size() != 3) {
      d = "family size " + std::to_string(family.size());
      return false;
    }
    return true;
  });
  add("epi:z primitive exactly when every letter occurs (|z| <= 4, <= 3 letters)",
      [](std::string& d) {
        for (std::string letters : {std::string("a"), std::string("ab"),
                                    std::string("abc")}) {
          Alphabet alphabet(letters);
          std::vector<std::string> words{""};
          for (std::size_t len = 1; len <= 4; ++len) {
            std::vector<std::string> next;
            for (const auto& w : words) {
              if (w.size() + 1 != len) continue;
              for (char c : letters) next.push_back(w + c);
            }
            for (const auto& w : next) {
              bool all = std::all_of(letters.begin(), letters.end(), [&](char c) {
                return w.find(c) != std::string::npos;
              });
              bool prim =
                  is_primitive(epi_morphism(alphabet, w)).primitive;
              if (all != prim) {
                d = "mismatch for z=" + w + " over {" + letters + "}";
                return false;
              }
            }
            words.insert(words.end(), next.begin(), next.end());
          }
        }
        return true;
      });
  add("each member of family(abc) fixes the trib word up to renaming",
      [](std::string& d) {
        Substitution trib = sub("trib");
        Word target = fixed_point_prefix(trib, 2000);
        for (Morphism& m : epi_family(Word(Alphabet("abc"), "abc"))) {
          Substitution member = Substitution::from(std::move(m));
          Word fp = fixed_point_prefix(member, 2000);
          if (!fixed_up_to_renaming(fp, trib, 2000)) {
            d = member.format() + " does not fix the trib word up to renaming";
            return false;
          }
        }
        return true;
      });

  // Closure verdicts.
  add("derived words of pd factors reduce to two (L=20)", [](std::string& d) {
    ClosureParams params;
    params.max_factor_len = 20;
    params.derived_horizon = 500;
    auto reps = derived_representatives(sub("pd"), params);
    if (reps.size() != 2) {
      d = "got " + std::to_string(reps.size()) + " distinct derived prefixes";
      return false;
    }
    PrefixOracle o(sub("pd"));
    Word da = derived_word(Word(o.alphabet(), "a"), o, 500);
    Word daa = derived_word(Word(o.alphabet(), "aa"), o, 500);
    bool ok = reps[0].derived_prefix == da && reps[1].derived_prefix == daa;
    if (!ok) d = "derived prefixes are not those of a and aa";
    return ok;
  });
  add("derived words of pd prefixes reduce to one (L=20)", [](std::string& d) {
    ClosureParams params;
    params.max_factor_len = 20;
    params.derived_horizon = 500;
    params.selection = ClosureParams::Selection::prefixes_only;
    auto reps = derived_representatives(sub("pd"), params);
    if (reps.size() != 1) {
      d = "got " + std::to_string(reps.size()) + " distinct derived prefixes";
      return false;
    }
    return true;
  });
  add("every derived representative of xi is fixed by xi or nu (L=15)",
      [](std::string& d) {
        ClosureParams params;
        params.max_factor_len = 15;
        auto reps = derived_representatives(sub("xi"), params);
        for (const Representative& rep : reps) {
          if (rep.error) {
            d = *rep.error;
            return false;
          }
          if (!fixed_up_to_renaming(rep.derived_prefix, sub("xi"),
                                    params.derived_horizon) &&
              !fixed_up_to_renaming(rep.derived_prefix, sub("nu"),
                                    params.derived_horizon)) {
            d = "representative " + rep.factor.str() + " matched neither";
            return false;
          }
        }
        return true;
      });
  add("{pd, xi, nu} is closed under derivation (L=30, N=2000)",
      [](std::string& d) {
        auto report = check_closed({sub("pd"), sub("xi"), sub("nu")});
        if (!report.verified) d = report.verdict();
        return report.verified;
      });
  add("{xi, nu} is closed under derivation (L=30, N=2000)",
      [](std::string& d) {
        auto report = check_closed({sub("xi"), sub("nu")});
        if (!report.verified) d = report.verdict();
        return report.verified;
      });
  add("the rotation family of abc is closed under derivation",
      [](std::string& d) {
        auto report = verify_family_theorem(Word(Alphabet("abc"), "abc"));
        if (!report.verified) {
          d = report.verdict();
          return false;
        }
        for (const ClosureMatch& row : report.matches) {
          if (!row.family_index) {
            d = "row for factor \"" + row.factor.str() +
                "\" lacks a rotation index";
            return false;
          }
        }
        return true;
      });
  add("{trib} is closed under derivation", [](std::string& d) {
    auto report = check_closed({sub("trib")});
    if (!report.verified) d = report.verdict();
    return report.verified;
  });
  add("{pd} alone is not closed; the counterexample factor is a",
      [](std::string& d) {
        auto report = check_closed({sub("pd")});
        if (report.verified) {
          d = "unexpectedly verified";
          return false;
        }
        if (!report.counterexample) {
          d = "no counterexample recorded";
          return false;
        }
        const ClosureMatch& c = report.matches[*report.counterexample];
        return expect(d, "counterexample factor", c.factor.str(), "a");
      });

  return checks;
}

}  // namespace derw
