#include "derw/substitution.hpp"

#include <vector>

namespace derw {

namespace {

// Letters reachable from start through iterated images, start included.
std::vector<char> reachable_letters(const Morphism& m, char start) {
  std::vector<char> stack{start};
  std::string seen(1, start);
  while (!stack.empty()) {
    char c = stack.back();
    stack.pop_back();
    for (char d : m.image_of(c)) {
      if (seen.find(d) == std::string::npos) {
        seen.push_back(d);
        stack.push_back(d);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool growth_certified(const Morphism& m, char a) {
  const std::string& img = m.image_of(a);
  if (img.size() < 2 || img[0] != a) return false;
  for (char c : reachable_letters(m, a)) {
    if (m.image_of(c).empty()) return false;
  }
  return true;
}

}  // namespace

Substitution::Substitution(Morphism morphism, char prolongable)
    : morphism_(std::move(morphism)), prolongable_(prolongable) {
  if (!morphism_.is_endomorphism()) {
    throw Error("a substitution must be an endomorphism, got domain {" +
                morphism_.domain().letters() + "} and codomain {" +
                morphism_.codomain().letters() + "}");
  }
  morphism_.domain().id(prolongable_);  // validate membership
  const std::string& img = morphism_.image_of(prolongable_);
  if (img.empty() || img[0] != prolongable_ || img.size() < 2) {
    throw Error(std::string("morphism is not prolongable on '") + prolongable_ +
                "': its image must be '" + prolongable_ +
                "' followed by a nonempty word");
  }
  if (!growth_certified(morphism_, prolongable_)) {
    throw Error(std::string("cannot certify unbounded growth from '") +
                prolongable_ +
                "': a reachable letter has an empty image");
  }
}

std::optional<char> Substitution::find_prolongable(const Morphism& m) {
  if (!m.is_endomorphism()) return std::nullopt;
  for (char a : m.domain().letters()) {
    if (growth_certified(m, a)) return a;
  }
  return std::nullopt;
}

Substitution Substitution::from(Morphism m) {
  auto a = find_prolongable(m);
  if (!a) {
    throw Error("morphism " + m.format() +
                " is not prolongable on any letter");
  }
  return Substitution(std::move(m), *a);
}

PrefixOracle::PrefixOracle(Substitution substitution)
    : substitution_(std::move(substitution)),
      text_(1, substitution_.prolongable_letter()) {}

void PrefixOracle::ensure(std::size_t n) {
  while (text_.size() < n) {
    std::string next = substitution_.morphism().apply_chars(text_);
    // Construction guarantees the old prefix heads the new one and the word
    // strictly grew; guard against both anyway.
    if (next.size() <= text_.size() ||
        next.compare(0, text_.size(), text_) != 0) {
      throw Error("fixed point expansion failed for " +
                  substitution_.format());
    }
    text_ = std::move(next);
    ++generation_;
  }
}

std::string_view PrefixOracle::view(std::size_t n) {
  ensure(n);
  return std::string_view(text_).substr(0, n);
}

Word PrefixOracle::word(std::size_t n) {
  return Word(alphabet(), std::string(view(n)));
}

Word fixed_point_prefix(PrefixOracle& oracle, std::size_t n) {
  return oracle.word(n);
}

Word fixed_point_prefix(const Substitution& s, std::size_t n) {
  PrefixOracle oracle(s);
  return oracle.word(n);
}

}  // namespace derw
