#include "derw/analysis.hpp"

#include <algorithm>

namespace derw {

const char* to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::none: return "none";
    case SpecialKind::left_special: return "left-special";
    case SpecialKind::right_special: return "right-special";
    case SpecialKind::bispecial: return "bispecial";
  }
  return "?";
}

SpecialClass classify_special(const Word& w, PrefixOracle& oracle,
                              const ScanPolicy& policy) {
  if (w.alphabet() != oracle.alphabet()) {
    throw AlphabetMismatch("classify: factor over a different alphabet");
  }
  std::size_t scan = std::max(policy.initial_scan, 2 * (w.size() + 1));
  scan = std::min(scan, policy.max_scan);
  while (occurrences(w.view(), oracle.view(scan)).empty()) {
    if (scan >= policy.max_scan) {
      throw NotAFactor("\"" + w.str() + "\" does not occur in the first " +
                       std::to_string(scan) + " symbols of the fixed point");
    }
    scan = std::min(scan * 2, policy.max_scan);
  }

  SpecialClass out;
  Extensions ext = extensions(w.view(), oracle.view(scan));
  while (scan < policy.max_scan) {
    std::size_t next = std::min(scan * 2, policy.max_scan);
    Extensions wider = extensions(w.view(), oracle.view(next));
    bool unchanged = wider.left == ext.left && wider.right == ext.right;
    ext = std::move(wider);
    scan = next;
    if (unchanged) {
      out.stable = true;
      break;
    }
  }
  out.left = std::move(ext.left);
  out.right = std::move(ext.right);
  out.scan_length = scan;
  bool l = out.left.size() >= 2;
  bool r = out.right.size() >= 2;
  out.kind = l && r  ? SpecialKind::bispecial
             : l     ? SpecialKind::left_special
             : r     ? SpecialKind::right_special
                     : SpecialKind::none;
  return out;
}

std::vector<Word> factor_inventory(PrefixOracle& oracle, std::size_t max_len,
                                   const ScanPolicy& policy) {
  auto collect = [&](std::size_t scan) {
    std::set<std::string> seen;
    std::string_view x = oracle.view(scan);
    for (std::size_t len = 0; len <= std::min(max_len, x.size()); ++len) {
      for (std::size_t i = 0; i + len <= x.size(); ++i) {
        seen.insert(std::string(x.substr(i, len)));
      }
    }
    return seen;
  };

  std::size_t scan = std::max(policy.initial_scan, 4 * (max_len + 1));
  scan = std::min(scan, policy.max_scan);
  std::set<std::string> current = collect(scan);
  while (scan < policy.max_scan) {
    std::size_t next = std::min(scan * 2, policy.max_scan);
    std::set<std::string> wider = collect(next);
    bool unchanged = wider == current;
    current = std::move(wider);
    scan = next;
    if (unchanged) break;
  }

  std::vector<Word> out;
  out.reserve(current.size());
  for (const auto& s : current) out.emplace_back(oracle.alphabet(), s);
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

std::vector<Word> special_factors(PrefixOracle& oracle, std::size_t max_len,
                                  Specials which, const ScanPolicy& policy) {
  std::vector<Word> out;
  for (const Word& w : factor_inventory(oracle, max_len, policy)) {
    SpecialClass cls = classify_special(w, oracle, policy);
    if (!cls.stable) continue;
    bool l = cls.left.size() >= 2;
    bool r = cls.right.size() >= 2;
    bool keep = which == Specials::right ? r
                : which == Specials::left ? l
                                          : (l && r);
    if (keep) out.push_back(w);
  }
  return out;
}

std::vector<Word> bispecial_factors(PrefixOracle& oracle, std::size_t max_len,
                                    const ScanPolicy& policy) {
  return special_factors(oracle, max_len, Specials::bispecial, policy);
}

std::vector<Word> right_special_prefixes(PrefixOracle& oracle,
                                         std::size_t max_len,
                                         const ScanPolicy& policy) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w = oracle.word(len);
    SpecialClass cls = classify_special(w, oracle, policy);
    if (cls.stable && cls.right.size() >= 2) out.push_back(std::move(w));
  }
  return out;
}

Word phi_map(const Word& v) {
  static const Morphism pd = Morphism::parse("a->ab;b->aa");
  if (v.alphabet() != pd.domain()) {
    throw AlphabetMismatch(
        "phi_map is specific to the period doubling alphabet {ab}");
  }
  return Word(pd.domain(), pd.apply_chars(v.view()) + "a");
}

AncestorReport ancestors(const Word& w, PrefixOracle& oracle,
                         const ScanPolicy& policy) {
  if (w.empty()) throw Error("ancestors are defined for nonempty factors");
  const Morphism& phi = oracle.substitution().morphism();
  if (phi.is_erasing()) {
    throw Error("ancestors are not computed for erasing morphisms");
  }
  // Confirm w is a factor at all.
  classify_special(w, oracle, policy);

  AncestorReport report;
  report.factor = w;
  report.candidate_bound = w.size() + 2 * phi.max_image_length();

  for (const Word& u : factor_inventory(oracle, report.candidate_bound, policy)) {
    if (u.empty()) continue;
    std::string image = phi.apply_chars(u.view());
    Occurrences occs = occurrences(w.view(), image);
    if (occs.empty()) continue;
    std::size_t first_image = phi.image_of(u.front()).size();
    std::size_t last_image = phi.image_of(u.back()).size();
    bool admissible = false;
    std::size_t admissible_pos = 0;
    for (std::size_t pos : occs) {
      std::size_t right_flank = image.size() - pos - w.size();
      if (pos < first_image && right_flank < last_image) {
        admissible = true;
        admissible_pos = pos;
        break;
      }
    }
    if (!admissible) continue;
    if (occs.size() == 1) {
      report.ancestors.push_back(AncestorWitness{
          u,
          Word(w.alphabet(), image.substr(0, admissible_pos)),
          Word(w.alphabet(), image.substr(admissible_pos + w.size()))});
    } else {
      report.ambiguous = true;
    }
  }
  return report;
}

}  // namespace derw
