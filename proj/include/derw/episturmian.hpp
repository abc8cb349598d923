#pragma once

#include <vector>

#include "derw/substitution.hpp"

namespace derw {

// The monoid of standard episturmian morphisms. The generator for a letter a
// fixes a and prepends a to every other letter:
//
//   L_a: a -> a,  b -> ab  for all b != a.
//
// L_z for a word z = z_1 z_2 ... z_n is the composition L_{z_1} ∘ L_{z_2} ∘
// ... ∘ L_{z_n}, applying L_{z_n} first. L_z is primitive exactly when every
// letter of the alphabet occurs in z, and is then prolongable on z_1.

Morphism epi_generator(char a, const Alphabet& alphabet);

Morphism epi_morphism(const Word& z);                      // over z's alphabet
Morphism epi_morphism(const Alphabet& alphabet, std::string_view z);

// One rotation step z_1...z_n -> z_n z_1...z_{n-1}, applied k times.
Word cyc(const Word& z, std::size_t k = 1);  // throws Error on the empty word

// The morphisms L_{cyc^k(z)} for k = 1..|z|, deduplicated by exact image
// equality. Requires every alphabet letter to occur in z (otherwise no member
// is primitive); throws NotPrimitive naming the absent letter.
std::vector<Morphism> epi_family(const Word& z);

}  // namespace derw
