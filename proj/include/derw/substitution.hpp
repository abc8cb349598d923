#pragma once

#include <optional>
#include <string_view>

#include "derw/morphism.hpp"

namespace derw {

// An endomorphism phi together with a letter a such that phi(a) = a w with w
// nonempty and |phi^n(a)| unbounded. Such a morphism fixes exactly one
// infinite word starting with a.
//
// The growth condition is certified at construction: every letter reachable
// from a through images must have a nonempty image (then each application of
// phi strictly lengthens phi^n(a)). Erasing morphisms such as the eta example
// in the registry are representable as Morphism but rejected here.
class Substitution {
 public:
  Substitution(Morphism morphism, char prolongable);

  // The first letter (in domain order) on which the morphism is prolongable,
  // if any.
  static std::optional<char> find_prolongable(const Morphism& m);

  // Wraps the morphism using the first prolongable letter; throws Error when
  // there is none.
  static Substitution from(Morphism m);

  const Morphism& morphism() const { return morphism_; }
  const Alphabet& alphabet() const { return morphism_.domain(); }
  char prolongable_letter() const { return prolongable_; }
  std::string format() const { return morphism_.format(); }

  bool operator==(const Substitution&) const = default;

 private:
  Morphism morphism_;
  char prolongable_;
};

// A lazily extended prefix of the fixed point of a substitution. Extension
// applies the morphism to the whole current prefix, which keeps it a prefix
// of the fixed point and strictly lengthens it, whatever the growth rates of
// the individual letters.
//
// Extension mutates; the contract is single-writer. Reads of already
// materialized text are safe concurrently.
class PrefixOracle {
 public:
  explicit PrefixOracle(Substitution substitution);

  const Substitution& substitution() const { return substitution_; }
  const Alphabet& alphabet() const { return substitution_.alphabet(); }

  std::size_t size() const { return text_.size(); }
  int generation() const { return generation_; }

  // Grows the prefix until it holds at least n symbols.
  void ensure(std::size_t n);
  std::string_view view(std::size_t n);  // ensure(n), then the first n symbols
  std::string_view current() const { return text_; }
  Word word(std::size_t n);

 private:
  Substitution substitution_;
  std::string text_;
  int generation_ = 0;
};

// The length-n prefix of the unique fixed point prolonging the distinguished
// letter. Repeated calls with growing n are consistent.
Word fixed_point_prefix(PrefixOracle& oracle, std::size_t n);
Word fixed_point_prefix(const Substitution& s, std::size_t n);

}  // namespace derw
