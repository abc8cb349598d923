#include "derw/cli.hpp"

#include <algorithm>
#include <iomanip>

#include <CLI11.hpp>

#include "derw/checks.hpp"
#include "derw/episturmian.hpp"
#include "derw/json_io.hpp"
#include "derw/registry.hpp"

namespace derw {

namespace {

using nlohmann::json;

std::string quoted(const Word& w) { return "\"" + w.str() + "\""; }

void print_return_structure(std::ostream& out, const ReturnStructure& rs) {
  out << "factor: " << quoted(rs.factor) << "\n";
  out << "skip prefix: " << quoted(rs.skip_prefix) << "\n";
  for (std::size_t i = 0; i < rs.returns.size(); ++i) {
    out << "r" << i << " = " << rs.returns[i].str() << "\n";
  }
  out << "derived prefix: " << rs.derived_prefix.str() << "\n";
  out << "stable: " << (rs.stable ? "true" : "false") << "\n";
  out << "scan length: " << rs.scan_length << "\n";
}

void print_closure_report(std::ostream& out, const ClosureReport& report) {
  for (std::size_t i = 0; i < report.members.size(); ++i) {
    out << "member " << i << ": " << report.members[i].format() << "\n";
  }
  for (const ClosureMatch& row : report.matches) {
    out << "[" << row.source_member << "] " << quoted(row.factor) << " -> ";
    if (row.error) {
      out << "error: " << *row.error;
    } else if (row.matched_member >= 0) {
      out << "member " << row.matched_member;
      if (row.renaming) out << " via " << row.renaming->format();
      out << " (" << row.method << ")";
      if (row.family_index) out << " k=" << *row.family_index;
    } else {
      out << "unmatched; derived prefix " << row.derived_prefix.str();
    }
    out << "\n";
  }
  out << "verdict: " << report.verdict() << "\n";
}

struct CommonFlags {
  std::size_t budget = ScanPolicy{}.max_scan;
  bool as_json = false;

  ScanPolicy policy() const {
    ScanPolicy p;
    p.max_scan = budget;
    return p;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.as_json, "emit JSON instead of text");
  cmd->add_option("--budget", flags.budget,
                  "scan budget in fixed point symbols")
      ->capture_default_str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"return words, derived words, and closure under derivation "
               "for fixed points of substitutions"};
  app.require_subcommand(1);
  auto morphism_hint =
      "registry name (pd, xi, nu, eta, trib), epi:<word>, or rules like "
      "\"a->ab;b->aa\"";

  CommonFlags flags;
  std::string morphism_arg;
  std::string factor_arg;
  std::string prefix_arg;
  std::size_t len = 100;
  std::size_t max_factor_len = ClosureParams{}.max_factor_len;
  std::size_t horizon = ClosureParams{}.derived_horizon;
  bool no_reduction = false;
  bool have_factor = false;
  bool have_max_len = false;
  std::string epi_word;
  std::vector<std::string> member_args;

  int status = 0;

  auto* fixpoint = app.add_subcommand("fixpoint", "print a fixed point prefix");
  fixpoint->add_option("morphism", morphism_arg, morphism_hint)->required();
  fixpoint->add_option("--len", len, "prefix length")->capture_default_str();
  add_common(fixpoint, flags);
  fixpoint->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    Word w = fixed_point_prefix(s, len);
    if (flags.as_json) {
      out << json{{"morphism", s.format()},
                  {"prolongable", std::string(1, s.prolongable_letter())},
                  {"len", len},
                  {"prefix", w.str()}}
                 .dump(2)
          << "\n";
    } else {
      out << w.str() << "\n";
    }
  });

  auto* returns_cmd =
      app.add_subcommand("returns", "return words to a factor");
  returns_cmd->add_option("morphism", morphism_arg, morphism_hint)->required();
  returns_cmd->add_option("--factor", factor_arg, "the factor")->required();
  add_common(returns_cmd, flags);
  returns_cmd->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    ReturnStructure rs = return_words(Word(s.alphabet(), factor_arg), oracle,
                                      flags.policy());
    if (flags.as_json) {
      out << render_json(rs).dump(2) << "\n";
    } else {
      print_return_structure(out, rs);
    }
  });

  auto* derive = app.add_subcommand("derive", "derived word to a factor");
  derive->add_option("morphism", morphism_arg, morphism_hint)->required();
  derive->add_option("--factor", factor_arg,
                     "the factor (empty for the empty factor)");
  derive->add_option("--len", len, "derived letters")->capture_default_str();
  add_common(derive, flags);
  derive->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    Word d = derived_word(Word(s.alphabet(), factor_arg), oracle, len,
                          flags.policy());
    if (flags.as_json) {
      out << json{{"morphism", s.format()},
                  {"factor", factor_arg},
                  {"len", len},
                  {"derived", d.str()}}
                 .dump(2)
          << "\n";
    } else {
      out << d.str() << "\n";
    }
  });

  auto* durand = app.add_subcommand(
      "durand", "derived substitution for a prefix, with decompositions");
  durand->add_option("morphism", morphism_arg, morphism_hint)->required();
  durand->add_option("--prefix", prefix_arg, "prefix of the fixed point")
      ->required();
  add_common(durand, flags);
  durand->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    DerivationCertificate cert = durand_substitution(
        oracle, Word(s.alphabet(), prefix_arg), flags.policy());
    if (flags.as_json) {
      out << render_json(cert).dump(2) << "\n";
    } else {
      out << "source: " << cert.source.format() << "\n";
      out << "prefix: " << quoted(cert.prefix_factor) << "\n";
      for (std::size_t i = 0; i < cert.returns.returns.size(); ++i) {
        out << "r" << i << " = " << cert.returns.returns[i].str()
            << "   phi(r" << i << ") -> " << cert.decompositions[i].str()
            << "\n";
      }
      out << "derived: " << cert.derived.format() << "\n";
      out << "derived primitive witness: "
          << cert.derived_primitivity.witness_exponent << "\n";
    }
  });

  auto* link = app.add_subcommand(
      "link", "morphism mapping the derived word of the shortest containing "
              "prefix onto the derived word of a factor");
  link->add_option("morphism", morphism_arg, morphism_hint)->required();
  link->add_option("--factor", factor_arg, "the factor")->required();
  add_common(link, flags);
  link->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    LinkMorphism lm =
        link_morphism(oracle, Word(s.alphabet(), factor_arg), flags.policy());
    if (flags.as_json) {
      out << render_json(lm).dump(2) << "\n";
    } else {
      out << "factor: " << quoted(lm.factor) << "\n";
      out << "skip prefix: " << quoted(lm.skip_prefix) << "\n";
      out << "prefix with factor: " << quoted(lm.prefix_with_factor) << "\n";
      out << "alpha: " << lm.alpha.format() << "\n";
      for (std::size_t i = 0; i < lm.decompositions.size(); ++i) {
        out << "decomposition " << i << ": " << lm.decompositions[i].str()
            << "\n";
      }
    }
  });

  auto* special =
      app.add_subcommand("special", "classify a factor or list bispecials");
  special->add_option("morphism", morphism_arg, morphism_hint)->required();
  auto* special_factor =
      special->add_option("--factor", factor_arg, "classify this factor");
  special_factor->expected(0, 1);
  auto* special_max = special->add_option(
      "--max-factor-len", max_factor_len, "list bispecial factors up to here");
  add_common(special, flags);
  special->callback([&] {
    have_factor = special_factor->count() > 0;
    have_max_len = special_max->count() > 0;
    if (have_factor == have_max_len) {
      throw CLI::ValidationError(
          "special needs exactly one of --factor and --max-factor-len");
    }
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    if (have_factor) {
      Word w(s.alphabet(), factor_arg);
      SpecialClass cls = classify_special(w, oracle, flags.policy());
      if (flags.as_json) {
        out << render_json(w, cls).dump(2) << "\n";
      } else {
        out << "factor: " << quoted(w) << "\n";
        out << "class: " << to_string(cls.kind) << "\n";
        out << "left: {" << std::string(cls.left.begin(), cls.left.end())
            << "}\n";
        out << "right: {" << std::string(cls.right.begin(), cls.right.end())
            << "}\n";
        out << "stable: " << (cls.stable ? "true" : "false") << "\n";
        out << "scan length: " << cls.scan_length << "\n";
      }
    } else {
      auto bis = bispecial_factors(oracle, max_factor_len, flags.policy());
      if (flags.as_json) {
        json arr = json::array();
        for (const Word& w : bis) arr.push_back(w.str());
        out << json{{"bispecial", arr}}.dump(2) << "\n";
      } else {
        for (const Word& w : bis) out << quoted(w) << "\n";
      }
    }
  });

  auto* anc = app.add_subcommand("ancestors", "ancestors of a factor");
  anc->add_option("morphism", morphism_arg, morphism_hint)->required();
  anc->add_option("--factor", factor_arg, "the factor")->required();
  add_common(anc, flags);
  anc->callback([&] {
    Substitution s = parse_substitution_arg(morphism_arg);
    PrefixOracle oracle(s);
    AncestorReport rep =
        ancestors(Word(s.alphabet(), factor_arg), oracle, flags.policy());
    if (flags.as_json) {
      out << render_json(rep).dump(2) << "\n";
    } else {
      out << "factor: " << quoted(rep.factor) << "\n";
      for (const AncestorWitness& w : rep.ancestors) {
        out << "ancestor: " << w.ancestor.str() << "  y=" << quoted(w.left_flank)
            << " y'=" << quoted(w.right_flank) << "\n";
      }
      out << "ambiguous: " << (rep.ambiguous ? "true" : "false") << "\n";
    }
  });

  auto* epi = app.add_subcommand(
      "epi", "standard episturmian morphism of a word and its rotation family");
  epi->add_option("word", epi_word, "subscript word, e.g. abc")->required();
  add_common(epi, flags);
  epi->callback([&] {
    std::set<char> letters(epi_word.begin(), epi_word.end());
    Alphabet alphabet(std::string(letters.begin(), letters.end()));
    Word z(alphabet, epi_word);
    Morphism lz = epi_morphism(z);
    Primitivity prim = is_primitive(lz);
    json family_json = json::array();
    std::vector<Morphism> family;
    if (prim.primitive) family = epi_family(z);
    if (flags.as_json) {
      for (const Morphism& m : family) family_json.push_back(m.format());
      out << json{{"word", epi_word},
                  {"rules", lz.format()},
                  {"primitive", prim.primitive},
                  {"family", family_json}}
                 .dump(2)
          << "\n";
    } else {
      out << "L_" << epi_word << ": " << lz.format() << "\n";
      out << "primitive: " << (prim.primitive ? "true" : "false") << "\n";
      for (std::size_t i = 0; i < family.size(); ++i) {
        out << "family member " << i << ": " << family[i].format() << "\n";
      }
    }
  });

  auto* closure =
      app.add_subcommand("closure", "check a set for closure under derivation");
  closure->add_option("members", member_args, morphism_hint)
      ->required()
      ->expected(-1);
  closure->add_option("--max-factor-len", max_factor_len, "factor length cap")
      ->capture_default_str();
  closure->add_option("--horizon", horizon, "derived word comparison length")
      ->capture_default_str();
  closure->add_flag("--no-reduction", no_reduction,
                    "use every factor instead of the special-factor reduction");
  add_common(closure, flags);
  closure->callback([&] {
    std::vector<Substitution> members;
    members.reserve(member_args.size());
    for (const std::string& m : member_args) {
      members.push_back(parse_substitution_arg(m));
    }
    ClosureParams params;
    params.max_factor_len = max_factor_len;
    params.derived_horizon = horizon;
    params.scan = flags.policy();
    if (no_reduction) params.selection = ClosureParams::Selection::all_factors;
    ClosureReport report = check_closed(members, params);
    if (flags.as_json) {
      out << render_json(report).dump(2) << "\n";
    } else {
      print_closure_report(out, report);
    }
    if (!report.verified) status = 1;
  });

  auto* verify = app.add_subcommand(
      "verify-paper", "run the built-in reference checks and print a table");
  add_common(verify, flags);
  verify->callback([&] {
    auto checks = reference_checks();
    std::size_t failed = 0;
    json rows = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      std::string detail;
      bool ok = false;
      try {
        ok = checks[i].run(detail);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      if (!ok) ++failed;
      if (flags.as_json) {
        json row{{"check", checks[i].name}, {"pass", ok}};
        if (!ok) row["detail"] = detail;
        rows.push_back(std::move(row));
      } else {
        out << "[" << std::setw(2) << (i + 1) << "/" << checks.size() << "] "
            << (ok ? "pass  " : "FAIL  ") << checks[i].name << "\n";
        if (!ok && !detail.empty()) out << "        " << detail << "\n";
      }
    }
    if (flags.as_json) {
      out << json{{"checks", rows},
                  {"total", checks.size()},
                  {"failed", failed}}
                 .dump(2)
          << "\n";
    } else {
      out << checks.size() << " checks, " << (checks.size() - failed)
          << " passed, " << failed << " failed\n";
    }
    if (failed > 0) status = 1;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace derw
