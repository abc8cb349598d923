#include "derw/episturmian.hpp"

#include <algorithm>

namespace derw {

Morphism epi_generator(char a, const Alphabet& alphabet) {
  if (!alphabet.contains(a)) {
    throw Error(std::string("generator letter '") + a +
                "' is not in alphabet {" + alphabet.letters() + "}");
  }
  std::vector<std::string> images;
  for (char b : alphabet.letters()) {
    if (b == a) {
      images.emplace_back(1, a);
    } else {
      std::string img(1, a);
      img.push_back(b);
      images.push_back(std::move(img));
    }
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism epi_morphism(const Alphabet& alphabet, std::string_view z) {
  Morphism acc = Morphism::identity(alphabet);
  for (char c : z) {
    acc = compose(acc, epi_generator(c, alphabet));
  }
  return acc;
}

Morphism epi_morphism(const Word& z) {
  return epi_morphism(z.alphabet(), z.view());
}

Word cyc(const Word& z, std::size_t k) {
  if (z.empty()) throw Error("cyc is undefined on the empty word");
  std::string text = z.str();
  k %= text.size();
  std::rotate(text.begin(), text.end() - static_cast<std::ptrdiff_t>(k),
              text.end());
  return Word(z.alphabet(), std::move(text));
}

std::vector<Morphism> epi_family(const Word& z) {
  for (char a : z.alphabet().letters()) {
    if (z.str().find(a) == std::string::npos) {
      throw NotPrimitive(std::string("letter '") + a +
                         "' does not occur in \"" + z.str() +
                         "\", so no rotation yields a primitive morphism");
    }
  }
  std::vector<Morphism> family;
  for (std::size_t k = 1; k <= z.size(); ++k) {
    Morphism m = epi_morphism(cyc(z, k));
    if (std::find(family.begin(), family.end(), m) == family.end()) {
      family.push_back(std::move(m));
    }
  }
  return family;
}

}  // namespace derw
