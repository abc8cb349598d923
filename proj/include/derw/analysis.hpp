#pragma once

#include "derw/returns.hpp"

namespace derw {

// Classification of a factor by its one-letter extension sets in the fixed
// point. Extension sets computed from a finite prefix are lower bounds on the
// sets in the infinite word; `stable` records that they survived one doubling
// of the scan unchanged, and scan_length says how far the scan went.
enum class SpecialKind { none, left_special, right_special, bispecial };

struct SpecialClass {
  SpecialKind kind = SpecialKind::none;
  std::set<char> left;
  std::set<char> right;
  bool stable = false;
  std::size_t scan_length = 0;
};

const char* to_string(SpecialKind kind);

SpecialClass classify_special(const Word& w, PrefixOracle& oracle,
                              const ScanPolicy& policy = {});

// All distinct factors of length 0..max_len whose set was unchanged across
// one doubling of the scan, sorted by (length, lexicographic).
std::vector<Word> factor_inventory(PrefixOracle& oracle, std::size_t max_len,
                                   const ScanPolicy& policy = {});

enum class Specials { right, left, bispecial };

// The factors of length <= max_len whose stable classification has at least
// two right (left, both) extensions, sorted by (length, lexicographic).
std::vector<Word> special_factors(PrefixOracle& oracle, std::size_t max_len,
                                  Specials which, const ScanPolicy& policy = {});
std::vector<Word> bispecial_factors(PrefixOracle& oracle, std::size_t max_len,
                                    const ScanPolicy& policy = {});

// The nonempty prefixes of length <= max_len that are stably right special.
std::vector<Word> right_special_prefixes(PrefixOracle& oracle,
                                         std::size_t max_len,
                                         const ScanPolicy& policy = {});

// Period doubling specific: v -> psi(v) a, which maps bispecial factors of
// the period doubling fixed point to bispecial factors.
Word phi_map(const Word& v);

// Ancestors of a factor w under the substitution phi of the oracle: factors
// u such that phi(u) = y w y' with |y| < |phi(u_1)|, |y'| < |phi(u_n)| and
// exactly one occurrence of w in phi(u). When an admissible u has two or more
// occurrences of w in its image, w allows an ambiguous ancestor.
struct AncestorWitness {
  Word ancestor;
  Word left_flank;   // y
  Word right_flank;  // y'
};

struct AncestorReport {
  Word factor;
  std::vector<AncestorWitness> ancestors;  // sorted by (length, lex)
  bool ambiguous = false;
  std::size_t candidate_bound = 0;  // ancestors searched up to this length
};

AncestorReport ancestors(const Word& w, PrefixOracle& oracle,
                         const ScanPolicy& policy = {});

}  // namespace derw
