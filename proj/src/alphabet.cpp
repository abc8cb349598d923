#include "derw/alphabet.hpp"

#include <cctype>

namespace derw {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!std::isprint(static_cast<unsigned char>(letters_[i]))) {
      throw Error("alphabet letters must be printable characters");
    }
    if (letters_.find(letters_[i]) != i) {
      throw Error(std::string("duplicate letter '") + letters_[i] +
                  "' in alphabet");
    }
  }
}

Alphabet Alphabet::digits(int k) {
  if (k < 0 || k > 10) {
    throw Error("digit alphabets support at most 10 letters, got " +
                std::to_string(k));
  }
  std::string letters;
  for (int i = 0; i < k; ++i) letters.push_back(static_cast<char>('0' + i));
  return Alphabet(std::move(letters));
}

char Alphabet::display(int id) const {
  if (id < 0 || id >= size()) {
    throw Error("symbol id " + std::to_string(id) +
                " out of range for alphabet {" + letters_ + "}");
  }
  return letters_[static_cast<std::size_t>(id)];
}

int Alphabet::id(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) {
    throw Error(std::string("'") + c + "' is not a letter of alphabet {" +
                letters_ + "}");
  }
  return static_cast<int>(pos);
}

bool Alphabet::contains(char c) const {
  return letters_.find(c) != std::string::npos;
}

}  // namespace derw
