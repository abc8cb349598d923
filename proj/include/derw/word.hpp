#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "derw/alphabet.hpp"

namespace derw {

// A finite word over a declared alphabet. Symbols are printable characters;
// the numeric id of a symbol is its index in the alphabet. The empty word is
// allowed.
class Word {
 public:
  Word() = default;
  Word(Alphabet alphabet, std::string text);  // validates every character

  const Alphabet& alphabet() const { return alphabet_; }
  const std::string& str() const { return text_; }
  std::string_view view() const { return text_; }
  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  char operator[](std::size_t i) const { return text_[i]; }
  char front() const { return text_.front(); }
  char back() const { return text_.back(); }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word subword(std::size_t pos, std::size_t len) const;

  bool is_prefix_of(const Word& x) const;
  bool is_suffix_of(const Word& x) const;
  bool is_factor_of(const Word& x) const;

  friend Word operator+(const Word& u, const Word& v);

  auto operator<=>(const Word&) const = default;

 private:
  Alphabet alphabet_;
  std::string text_;
};

// Orders words by length, ties broken lexicographically.
bool length_lex_less(const Word& a, const Word& b);

// Strictly ascending positions i with x[i .. i+|w|) = w. Occurrences may
// overlap. The empty word occurs at every position 0..|x| inclusive.
using Occurrences = std::vector<std::size_t>;
Occurrences occurrences(std::string_view w, std::string_view x);
Occurrences occurrences(const Word& w, const Word& x);

// The distinct length-len windows of x, lexicographically sorted.
// Throws std::out_of_range if len > |x|.
std::vector<Word> factors(const Word& x, std::size_t len);

// One-letter extension sets of w computed from the finite word x. These are
// lower bounds on the extension sets in the infinite word x came from;
// occurrences at position 0 contribute no left extension and occurrences
// ending at |x| contribute no right extension.
struct Extensions {
  std::set<char> left;
  std::set<char> right;
};
Extensions extensions(const Word& w, const Word& x);  // throws NotAFactor
Extensions extensions(std::string_view w, std::string_view x);

}  // namespace derw
