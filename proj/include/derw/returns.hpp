#pragma once

#include <cstddef>
#include <vector>

#include "derw/substitution.hpp"

namespace derw {

// How far occurrence scanning may extend an oracle prefix. Scans double until
// the quantity of interest stabilizes or max_scan symbols are reached; the
// budget substitutes for the uniform recurrence bounds that exist for
// primitive fixed points but are not computed here.
struct ScanPolicy {
  std::size_t initial_scan = 256;
  std::size_t max_scan = std::size_t{1} << 22;
};

// Return words to a factor w, numbered by first appearance in the
// factorization of the scanned prefix, together with the derived-word prefix
// that numbering yields.
//
// skip_prefix is the shortest prefix p such that w occurs in p w exactly
// once; after p, the scanned prefix is a concatenation of return words:
// skip_prefix + returns[d_0] + returns[d_1] + ... reconstructs the scanned
// prefix up to the start of its last occurrence of w (position `covered`).
struct ReturnStructure {
  Word factor;
  std::vector<Word> returns;  // indexed by first appearance; r_0 first
  Word skip_prefix;
  Word derived_prefix;  // over the digit alphabet {0..k-1}; starts with 0
  bool stable = false;  // set unchanged across the last doubling of the scan
                        // and every return word seen at least twice
  std::size_t scan_length = 0;
  std::size_t covered = 0;
};

// Scans the fixed point for the return words to w. Throws NotAFactor when w
// never occurs within the budget and InsufficientData when it occurs but
// never repeats. The factor must be nonempty.
ReturnStructure return_words(const Word& w, PrefixOracle& oracle,
                             const ScanPolicy& policy = {});

// The length-n prefix of the derived word to w, extending the scan until n
// derived letters are determined. The derived word to the empty factor is
// the fixed point itself, each letter mapped to its first-appearance digit.
Word derived_word(const Word& w, PrefixOracle& oracle, std::size_t n,
                  const ScanPolicy& policy = {});

// {r + w : r a return word}; each member contains exactly two occurrences of
// w, one at each end.
std::vector<Word> complete_return_words(const ReturnStructure& rs);

// Internal knob shared with the derivation module: like return_words, but
// also requires min_digits derived letters and a scan of at least min_scan.
ReturnStructure scan_return_words(const Word& w, PrefixOracle& oracle,
                                  const ScanPolicy& policy,
                                  std::size_t min_digits,
                                  std::size_t min_scan);

}  // namespace derw
