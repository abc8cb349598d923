#pragma once

#include <optional>

#include "derw/returns.hpp"

namespace derw {

// A bijection between two equal-size alphabets.
struct Renaming {
  Alphabet from;
  Alphabet to;
  std::vector<int> map;  // from-id -> to-id

  char apply(char c) const;
  Word apply(const Word& w) const;
  std::string format() const;  // "0->a;1->b"
  bool is_identity() const;
  bool operator==(const Renaming&) const = default;
};

// The derived substitution for a prefix w of the fixed point of a primitive
// substitution phi, with the image decompositions proving it fixes the
// derived word: phi maps each return word r_i to a concatenation
// r_{s_1} r_{s_2} ... r_{s_l} of return words, and delta(i) = s_1 s_2 ... s_l
// over the digit alphabet of the derived word.
struct DerivationCertificate {
  Substitution source;
  Word prefix_factor;
  ReturnStructure returns;
  std::vector<Word> decompositions;  // decompositions[i] = image of digit i
  Substitution derived;
  Primitivity derived_primitivity;
};

// Builds the certificate by decomposing phi(r_i) against successive
// occurrences of w; ties cannot arise because consecutive occurrences of w
// delimit the return words. The construction self-checks: the fixed point of
// the derived substitution must reproduce the scanned derived word, and the
// derived substitution must be primitive; violations raise std::logic_error.
DerivationCertificate durand_substitution(PrefixOracle& oracle, const Word& w,
                                          const ScanPolicy& policy = {});

// For a factor w with shortest containing prefix p w, the morphism alpha
// mapping the derived word of p w onto the derived word of w:
// d(w) = alpha(d(p w)). Image i records the decomposition of p^{-1} r_i p
// into return words to w.
struct LinkMorphism {
  Word factor;            // w
  Word skip_prefix;       // p
  Word prefix_with_factor;  // p w
  ReturnStructure returns_pw;
  ReturnStructure returns_w;
  std::vector<Word> decompositions;  // decompositions[i] = alpha image of digit i
  Morphism alpha;
};
LinkMorphism link_morphism(PrefixOracle& oracle, const Word& w,
                           const ScanPolicy& policy = {});

// Whether alpha ∘ gamma = beta ∘ alpha letterwise, as exact finite words.
// gamma must be an endomorphism of alpha's domain and beta an endomorphism of
// alpha's codomain. When it holds and v is fixed by gamma, alpha(v) is fixed
// by beta.
bool check_semiconjugacy(const Morphism& alpha, const Morphism& gamma,
                         const Morphism& beta);

// Searches all bijections pi between the alphabets (at most 4 letters each,
// so at most 24 candidates) for one with pi(d[0..n)) equal to the length-n
// fixed point prefix of sigma. A hit is length-n evidence, not a proof.
// Requires |d| >= n; returns the lexicographically first bijection found, so
// the identity is preferred when it works.
std::optional<Renaming> fixed_up_to_renaming(const Word& d,
                                             const Substitution& sigma,
                                             std::size_t n);

// Exact algebraic counterpart: a bijection pi with pi ∘ delta ∘ pi^{-1} =
// sigma, image by image.
std::optional<Renaming> conjugate_renaming(const Morphism& delta,
                                           const Morphism& sigma);

}  // namespace derw
