#include "derw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace derw {

Word::Word(Alphabet alphabet, std::string text)
    : alphabet_(std::move(alphabet)), text_(std::move(text)) {
  for (char c : text_) {
    if (!alphabet_.contains(c)) {
      throw Error(std::string("'") + c + "' in word \"" + text_ +
                  "\" is not a letter of alphabet {" + alphabet_.letters() +
                  "}");
    }
  }
}

Word Word::prefix(std::size_t n) const { return subword(0, n); }

Word Word::suffix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("suffix length exceeds word length");
  return subword(size() - n, n);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw std::out_of_range("subword range out of bounds");
  }
  return Word(alphabet_, text_.substr(pos, len));
}

bool Word::is_prefix_of(const Word& x) const {
  return alphabet_ == x.alphabet_ && size() <= x.size() &&
         x.text_.compare(0, size(), text_) == 0;
}

bool Word::is_suffix_of(const Word& x) const {
  return alphabet_ == x.alphabet_ && size() <= x.size() &&
         x.text_.compare(x.size() - size(), size(), text_) == 0;
}

bool Word::is_factor_of(const Word& x) const {
  return alphabet_ == x.alphabet_ && x.text_.find(text_) != std::string::npos;
}

Word operator+(const Word& u, const Word& v) {
  if (u.alphabet_ != v.alphabet_) {
    throw AlphabetMismatch("cannot concatenate words over alphabets {" +
                           u.alphabet_.letters() + "} and {" +
                           v.alphabet_.letters() + "}");
  }
  return Word(u.alphabet_, u.text_ + v.text_);
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.str() < b.str();
}

Occurrences occurrences(std::string_view w, std::string_view x) {
  Occurrences out;
  if (w.size() > x.size()) return out;
  // Deliberately a plain sliding-window scan: this is the reference all
  // higher-level computations are tested against.
  for (std::size_t i = 0; i + w.size() <= x.size(); ++i) {
    if (x.compare(i, w.size(), w) == 0) out.push_back(i);
  }
  return out;
}

Occurrences occurrences(const Word& w, const Word& x) {
  if (w.alphabet() != x.alphabet()) {
    throw AlphabetMismatch("occurrences: words over different alphabets");
  }
  return occurrences(w.view(), x.view());
}

std::vector<Word> factors(const Word& x, std::size_t len) {
  if (len > x.size()) {
    throw std::out_of_range("factor length " + std::to_string(len) +
                            " exceeds word length " + std::to_string(x.size()));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i + len <= x.size(); ++i) {
    seen.insert(x.str().substr(i, len));
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(x.alphabet(), s);
  return out;
}

Extensions extensions(std::string_view w, std::string_view x) {
  Extensions ext;
  auto occs = occurrences(w, x);
  if (occs.empty()) {
    throw NotAFactor("\"" + std::string(w) + "\" is not a factor of the scanned word");
  }
  for (std::size_t i : occs) {
    if (i > 0) ext.left.insert(x[i - 1]);
    if (i + w.size() < x.size()) ext.right.insert(x[i + w.size()]);
  }
  return ext;
}

Extensions extensions(const Word& w, const Word& x) {
  if (w.alphabet() != x.alphabet()) {
    throw AlphabetMismatch("extensions: words over different alphabets");
  }
  return extensions(w.view(), x.view());
}

}  // namespace derw
