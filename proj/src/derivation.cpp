#include "derw/derivation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace derw {

namespace {

// Decomposes text into return words by slicing at consecutive occurrences of
// w in text + w. Returns the digit word, or nullopt when a slice is not yet
// in the numbering (the scan was too short to have seen it).
std::optional<std::string> decompose_into_returns(
    const std::string& text, const Word& w,
    const std::map<std::string, int>& digit_of) {
  std::string padded = text + w.str();
  Occurrences occs = occurrences(w.view(), padded);
  if (occs.empty() || occs.front() != 0 || occs.back() != text.size()) {
    throw std::logic_error(
        "return word decomposition misaligned; this indicates a bug");
  }
  std::string digits;
  for (std::size_t j = 0; j + 1 < occs.size(); ++j) {
    auto it = digit_of.find(padded.substr(occs[j], occs[j + 1] - occs[j]));
    if (it == digit_of.end()) return std::nullopt;
    digits.push_back(static_cast<char>('0' + it->second));
  }
  return digits;
}

std::map<std::string, int> digit_map(const ReturnStructure& rs) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < rs.returns.size(); ++i) {
    m.emplace(rs.returns[i].str(), static_cast<int>(i));
  }
  return m;
}

}  // namespace

char Renaming::apply(char c) const {
  return to.display(map[static_cast<std::size_t>(from.id(c))]);
}

Word Renaming::apply(const Word& w) const {
  if (w.alphabet() != from) {
    throw AlphabetMismatch("renaming does not apply to this word's alphabet");
  }
  std::string text;
  text.reserve(w.size());
  for (char c : w.str()) text.push_back(apply(c));
  return Word(to, std::move(text));
}

std::string Renaming::format() const {
  std::string out;
  for (int i = 0; i < from.size(); ++i) {
    if (i > 0) out.push_back(';');
    out.push_back(from.display(i));
    out += "->";
    out.push_back(to.display(map[static_cast<std::size_t>(i)]));
  }
  return out;
}

bool Renaming::is_identity() const {
  if (from != to) return false;
  for (int i = 0; i < from.size(); ++i) {
    if (map[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

DerivationCertificate durand_substitution(PrefixOracle& oracle, const Word& w,
                                          const ScanPolicy& policy) {
  const Substitution& phi = oracle.substitution();
  Primitivity prim = is_primitive(phi.morphism());
  if (!prim) {
    throw NotPrimitive("derived substitutions are built for primitive "
                       "substitutions only; " +
                       phi.format() + " is not primitive");
  }
  if (w.empty()) {
    throw Error("the derived substitution is computed for nonempty prefixes");
  }
  if (oracle.view(w.size()) != w.view()) {
    throw NotAFactor("\"" + w.str() + "\" is not a prefix of the fixed point");
  }

  std::size_t min_scan = 0;
  while (true) {
    ReturnStructure rs = scan_return_words(w, oracle, policy, 1, min_scan);
    auto digits = digit_map(rs);
    std::vector<Word> decompositions;
    bool complete = true;
    for (const Word& r : rs.returns) {
      auto code = decompose_into_returns(phi.morphism().apply_chars(r.view()),
                                         w, digits);
      if (!code) {
        complete = false;
        break;
      }
      decompositions.emplace_back(Alphabet::digits(static_cast<int>(rs.returns.size())),
                                  std::move(*code));
    }
    if (!complete) {
      if (rs.scan_length >= policy.max_scan) {
        throw InsufficientData(
            "return word set of \"" + w.str() +
            "\" still incomplete at the scan budget; cannot build the "
            "derived substitution");
      }
      min_scan = rs.scan_length * 2;
      continue;
    }

    std::vector<std::string> images;
    images.reserve(decompositions.size());
    for (const Word& d : decompositions) images.push_back(d.str());
    Alphabet digit_alphabet = Alphabet::digits(static_cast<int>(images.size()));
    Morphism delta(digit_alphabet, digit_alphabet, std::move(images));
    Substitution derived(delta, '0');

    Primitivity derived_prim = is_primitive(delta);
    if (!derived_prim) {
      throw std::logic_error("derived substitution " + delta.format() +
                             " is not primitive; this indicates a bug");
    }
    // Two independent routes to the derived word must agree: scanning the
    // fixed point of phi, and iterating delta.
    Word replayed = fixed_point_prefix(derived, rs.derived_prefix.size());
    if (replayed != rs.derived_prefix) {
      throw std::logic_error("derived substitution does not reproduce the "
                             "scanned derived word; this indicates a bug");
    }
    return DerivationCertificate{phi, w, std::move(rs),
                                 std::move(decompositions), std::move(derived),
                                 derived_prim};
  }
}

LinkMorphism link_morphism(PrefixOracle& oracle, const Word& w,
                           const ScanPolicy& policy) {
  if (w.empty()) {
    throw Error("link morphisms are computed for nonempty factors");
  }
  if (w.alphabet() != oracle.alphabet()) {
    throw AlphabetMismatch("link morphism: factor over a different alphabet");
  }

  // Shortest prefix p w containing w.
  std::size_t scan = std::max(policy.initial_scan, 2 * (w.size() + 1));
  scan = std::min(scan, policy.max_scan);
  std::size_t first;
  while (true) {
    Occurrences occs = occurrences(w.view(), oracle.view(scan));
    if (!occs.empty()) {
      first = occs.front();
      break;
    }
    if (scan >= policy.max_scan) {
      throw NotAFactor("\"" + w.str() + "\" does not occur in the first " +
                       std::to_string(scan) + " symbols of the fixed point");
    }
    scan = std::min(scan * 2, policy.max_scan);
  }
  Word p = oracle.word(first);
  Word pw = oracle.word(first + w.size());

  std::size_t min_scan = 0;
  while (true) {
    ReturnStructure rs_pw = scan_return_words(pw, oracle, policy, 1, min_scan);
    ReturnStructure rs_w = scan_return_words(w, oracle, policy, 1, min_scan);
    auto digits_w = digit_map(rs_w);
    std::vector<Word> decompositions;
    bool complete = true;
    for (const Word& r : rs_pw.returns) {
      // p^{-1} r p: p heads r p because p w heads r p w.
      std::string conjugated = (r.str() + p.str()).substr(p.size());
      auto code = decompose_into_returns(conjugated, w, digits_w);
      if (!code) {
        complete = false;
        break;
      }
      decompositions.emplace_back(rs_w.derived_prefix.alphabet(),
                                  std::move(*code));
    }
    if (!complete) {
      if (std::max(rs_pw.scan_length, rs_w.scan_length) >= policy.max_scan) {
        throw InsufficientData(
            "return word sets still incomplete at the scan budget; cannot "
            "build the link morphism for \"" +
            w.str() + "\"");
      }
      min_scan = std::max(rs_pw.scan_length, rs_w.scan_length) * 2;
      continue;
    }

    std::vector<std::string> images;
    images.reserve(decompositions.size());
    for (const Word& d : decompositions) images.push_back(d.str());
    Morphism alpha(rs_pw.derived_prefix.alphabet(),
                   rs_w.derived_prefix.alphabet(), std::move(images));

    // alpha applied to the derived word of p w must reproduce the derived
    // word of w on the overlap.
    Word mapped = alpha.apply(rs_pw.derived_prefix);
    std::size_t overlap = std::min(mapped.size(), rs_w.derived_prefix.size());
    if (mapped.view().substr(0, overlap) !=
        rs_w.derived_prefix.view().substr(0, overlap)) {
      throw std::logic_error("link morphism does not transport the derived "
                             "word; this indicates a bug");
    }
    return LinkMorphism{w,
                        std::move(p),
                        std::move(pw),
                        std::move(rs_pw),
                        std::move(rs_w),
                        std::move(decompositions),
                        std::move(alpha)};
  }
}

bool check_semiconjugacy(const Morphism& alpha, const Morphism& gamma,
                         const Morphism& beta) {
  if (!gamma.is_endomorphism() || gamma.domain() != alpha.domain()) {
    throw AlphabetMismatch(
        "semiconjugacy: gamma must be an endomorphism of alpha's domain");
  }
  if (!beta.is_endomorphism() || beta.domain() != alpha.codomain()) {
    throw AlphabetMismatch(
        "semiconjugacy: beta must be an endomorphism of alpha's codomain");
  }
  return compose(alpha, gamma) == compose(beta, alpha);
}

std::optional<Renaming> fixed_up_to_renaming(const Word& d,
                                             const Substitution& sigma,
                                             std::size_t n) {
  if (d.size() < n) {
    throw Error("renaming check at horizon " + std::to_string(n) +
                " needs at least that many letters, got " +
                std::to_string(d.size()));
  }
  const Alphabet& from = d.alphabet();
  const Alphabet& to = sigma.alphabet();
  if (from.size() != to.size()) return std::nullopt;

  Word fp = fixed_point_prefix(sigma, n);
  std::vector<int> perm(static_cast<std::size_t>(from.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (to.display(perm[static_cast<std::size_t>(from.id(d[i]))]) != fp[i]) {
        match = false;
        break;
      }
    }
    if (match) return Renaming{from, to, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<Renaming> conjugate_renaming(const Morphism& delta,
                                           const Morphism& sigma) {
  if (!delta.is_endomorphism() || !sigma.is_endomorphism()) return std::nullopt;
  const Alphabet& from = delta.domain();
  const Alphabet& to = sigma.domain();
  if (from.size() != to.size()) return std::nullopt;

  std::vector<int> perm(static_cast<std::size_t>(from.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Renaming pi{from, to, perm};
    bool match = true;
    for (int i = 0; i < from.size() && match; ++i) {
      const std::string& img = delta.image(i);
      const std::string& target =
          sigma.image(perm[static_cast<std::size_t>(i)]);
      if (img.size() != target.size()) {
        match = false;
        break;
      }
      for (std::size_t j = 0; j < img.size(); ++j) {
        if (pi.apply(img[j]) != target[j]) {
          match = false;
          break;
        }
      }
    }
    if (match) return pi;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace derw
