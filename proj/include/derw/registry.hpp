#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derw/substitution.hpp"

namespace derw {

// Built-in morphisms addressable by name:
//
//   pd    a->ab;b->aa            period doubling
//   xi    0->011;1->0
//   nu    0->01;1->02020101;2->0202
//   eta   0->;1->010202;2->01    erasing, usable as a Morphism only
//   trib  a->ab;b->ac;c->a       Tribonacci
//
// plus epi:<word> for the standard episturmian morphism L_<word> over the
// letters of <word>.
std::optional<Morphism> builtin_morphism(std::string_view name);

// The named built-ins in a stable order, for help listings.
std::vector<std::pair<std::string, Morphism>> builtin_morphisms();

// Accepts a registry name, an epi:<word> literal, or rule text like
// "a->ab;b->aa".
Morphism parse_morphism_arg(std::string_view text);

// Same, then wraps the result using its first prolongable letter.
Substitution parse_substitution_arg(std::string_view text);

}  // namespace derw
