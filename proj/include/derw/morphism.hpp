#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "derw/word.hpp"

namespace derw {

// A morphism of free monoids: a letter-to-word mapping over explicit
// alphabets, extended to words by concatenation of letter images.
class Morphism {
 public:
  // One image per domain letter, in domain order. Every image must be a word
  // over the codomain; empty images are allowed.
  Morphism(Alphabet domain, Alphabet codomain, std::vector<std::string> images);

  static Morphism identity(const Alphabet& a);

  // Parses rule text like "a->ab;b->aa" (an empty image is written "b->").
  // The domain is the left-hand letters in order of appearance. The codomain
  // is the domain when no new letters appear on the right, otherwise the
  // sorted set of right-hand letters. Use the constructor for anything the
  // inference cannot express.
  static Morphism parse(std::string_view rules);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const std::string& image(int id) const;
  const std::string& image_of(char letter) const;

  bool is_endomorphism() const { return domain_ == codomain_; }
  bool is_erasing() const;  // some image is the empty word
  std::size_t max_image_length() const;

  std::string apply_chars(std::string_view w) const;
  Word apply(const Word& w) const;  // throws AlphabetMismatch

  std::string format() const;  // rule text, round-trips through parse

  bool operator==(const Morphism&) const = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<std::string> images_;
};

// outer ∘ inner: first inner, then outer. Requires the codomain of inner to
// equal the domain of outer.
Morphism compose(const Morphism& outer, const Morphism& inner);

// k-fold composition of an endomorphism with itself; power(phi, 0) is the
// identity.
Morphism power(const Morphism& phi, int k);

// Entry (a, b) counts the occurrences of codomain letter a in the image of
// domain letter b; column sums equal image lengths.
class IncidenceMatrix {
 public:
  IncidenceMatrix(int rows, int cols);
  long long& at(int a, int b);
  long long at(int a, int b) const;
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator==(const IncidenceMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<long long> entries_;
};

IncidenceMatrix incidence_matrix(const Morphism& phi);
IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);

// Primitivity of an endomorphism: some power k maps every letter to a word
// containing every letter. The smallest such k is reported; by Wielandt's
// bound it is at most (n-1)^2 + 1 for an alphabet of n letters, so the search
// stops there.
struct Primitivity {
  bool primitive = false;
  int witness_exponent = 0;  // smallest k with all letters in phi^k(b), if primitive
  explicit operator bool() const { return primitive; }
};
Primitivity is_primitive(const Morphism& phi);

// Injectivity on the free monoid: images pairwise distinct, none empty, and
// the image set uniquely decodable (Sardinas-Patterson).
bool is_injective(const Morphism& phi);

}  // namespace derw
