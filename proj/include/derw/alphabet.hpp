#pragma once

#include <compare>
#include <string>

#include "derw/error.hpp"

namespace derw {

// An ordered set of single-character symbols. The id of a symbol is its index
// in the order. Words carry their alphabet, so operations that would silently
// mix alphabets are rejected instead.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  // The alphabet {0, 1, ..., k-1} used for derived words.
  static Alphabet digits(int k);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  char display(int id) const;
  int id(char c) const;  // throws Error if c is not a letter
  bool contains(char c) const;
  const std::string& letters() const { return letters_; }

  auto operator<=>(const Alphabet&) const = default;

 private:
  std::string letters_;
};

}  // namespace derw
