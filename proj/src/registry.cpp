#include "derw/registry.hpp"

#include <algorithm>
#include <set>

#include "derw/episturmian.hpp"

namespace derw {

std::vector<std::pair<std::string, Morphism>> builtin_morphisms() {
  return {
      {"pd", Morphism::parse("a->ab;b->aa")},
      {"xi", Morphism::parse("0->011;1->0")},
      {"nu", Morphism::parse("0->01;1->02020101;2->0202")},
      {"eta", Morphism(Alphabet("012"), Alphabet("012"), {"", "010202", "01"})},
      {"trib", Morphism::parse("a->ab;b->ac;c->a")},
  };
}

std::optional<Morphism> builtin_morphism(std::string_view name) {
  for (auto& [key, m] : builtin_morphisms()) {
    if (key == name) return m;
  }
  return std::nullopt;
}

Morphism parse_morphism_arg(std::string_view text) {
  if (auto m = builtin_morphism(text)) return *m;
  if (text.rfind("epi:", 0) == 0) {
    std::string_view z = text.substr(4);
    if (z.empty()) throw Error("epi: needs a nonempty subscript word");
    std::set<char> letters(z.begin(), z.end());
    Alphabet alphabet(std::string(letters.begin(), letters.end()));
    return epi_morphism(alphabet, z);
  }
  if (text.find("->") != std::string_view::npos) {
    return Morphism::parse(text);
  }
  throw Error("unknown morphism \"" + std::string(text) +
              "\" (expected a registry name, epi:<word>, or rule text like "
              "\"a->ab;b->aa\")");
}

Substitution parse_substitution_arg(std::string_view text) {
  return Substitution::from(parse_morphism_arg(text));
}

}  // namespace derw
