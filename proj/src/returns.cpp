#include "derw/returns.hpp"

#include <algorithm>
#include <map>

namespace derw {

namespace {

struct GapCoding {
  std::vector<std::string> returns;
  std::string digits;  // one digit character per gap
  std::size_t min_count = 0;
};

GapCoding code_gaps(std::string_view x, const Occurrences& occs) {
  GapCoding g;
  std::map<std::string_view, int> index;
  std::vector<std::size_t> counts;
  for (std::size_t j = 0; j + 1 < occs.size(); ++j) {
    std::string_view gap = x.substr(occs[j], occs[j + 1] - occs[j]);
    auto [it, inserted] = index.try_emplace(gap, static_cast<int>(g.returns.size()));
    if (inserted) {
      g.returns.emplace_back(gap);
      counts.push_back(0);
    }
    int digit = it->second;
    if (digit > 9) throw Error("more than 10 distinct return words; derived alphabets stop at 10 letters");
    g.digits.push_back(static_cast<char>('0' + digit));
    ++counts[static_cast<std::size_t>(digit)];
  }
  g.min_count = counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
  return g;
}

}  // namespace

ReturnStructure scan_return_words(const Word& w, PrefixOracle& oracle,
                                  const ScanPolicy& policy,
                                  std::size_t min_digits,
                                  std::size_t min_scan) {
  if (w.alphabet() != oracle.alphabet()) {
    throw AlphabetMismatch("return words: factor over {" +
                           w.alphabet().letters() + "}, fixed point over {" +
                           oracle.alphabet().letters() + "}");
  }
  if (w.empty()) {
    throw Error("return words are computed for nonempty factors only");
  }

  std::size_t scan = std::max({policy.initial_scan, 2 * (w.size() + 1), min_scan});
  scan = std::min(scan, policy.max_scan);

  // Locate the first occurrence within the budget.
  while (true) {
    auto occs = occurrences(w.view(), oracle.view(scan));
    if (!occs.empty()) break;
    if (scan >= policy.max_scan) {
      throw NotAFactor("\"" + w.str() + "\" does not occur in the first " +
                       std::to_string(scan) + " symbols of the fixed point");
    }
    scan = std::min(scan * 2, policy.max_scan);
  }

  std::vector<std::string> previous;
  bool have_previous = false;
  while (true) {
    std::string_view x = oracle.view(scan);
    Occurrences occs = occurrences(w.view(), x);
    GapCoding g = code_gaps(x, occs);
    bool stable = have_previous && previous == g.returns && g.min_count >= 2 &&
                  !g.returns.empty();
    if ((stable && g.digits.size() >= min_digits) || scan >= policy.max_scan) {
      if (occs.size() < 2) {
        throw InsufficientData("\"" + w.str() +
                               "\" occurs only once within the scan budget of " +
                               std::to_string(policy.max_scan) + " symbols");
      }
      if (g.digits.size() < min_digits) {
        throw InsufficientData("only " + std::to_string(g.digits.size()) +
                               " of " + std::to_string(min_digits) +
                               " derived letters of \"" + w.str() +
                               "\" determined within the scan budget");
      }
      ReturnStructure rs;
      rs.factor = w;
      Alphabet digit_alphabet = Alphabet::digits(static_cast<int>(g.returns.size()));
      for (auto& r : g.returns) rs.returns.emplace_back(w.alphabet(), std::move(r));
      rs.skip_prefix = Word(w.alphabet(), std::string(x.substr(0, occs.front())));
      rs.derived_prefix = Word(std::move(digit_alphabet), std::move(g.digits));
      rs.stable = stable;
      rs.scan_length = scan;
      rs.covered = occs.back();
      return rs;
    }
    previous = std::move(g.returns);
    have_previous = true;
    scan = std::min(scan * 2, policy.max_scan);
  }
}

ReturnStructure return_words(const Word& w, PrefixOracle& oracle,
                             const ScanPolicy& policy) {
  return scan_return_words(w, oracle, policy, 0, 0);
}

Word derived_word(const Word& w, PrefixOracle& oracle, std::size_t n,
                  const ScanPolicy& policy) {
  if (w.empty()) {
    // The derived word to the empty factor is the fixed point itself; every
    // letter is a return word, numbered by first appearance.
    if (n > policy.max_scan) {
      throw InsufficientData("derived horizon exceeds the scan budget");
    }
    std::string_view x = oracle.view(n);
    std::string mapping;  // mapping[digit] = letter
    std::string digits;
    digits.reserve(n);
    for (char c : x) {
      auto pos = mapping.find(c);
      if (pos == std::string::npos) {
        pos = mapping.size();
        mapping.push_back(c);
      }
      digits.push_back(static_cast<char>('0' + pos));
    }
    return Word(Alphabet::digits(static_cast<int>(mapping.size())),
                std::move(digits));
  }
  ReturnStructure rs = scan_return_words(w, oracle, policy, n, 0);
  return rs.derived_prefix.prefix(n);
}

std::vector<Word> complete_return_words(const ReturnStructure& rs) {
  std::vector<Word> out;
  out.reserve(rs.returns.size());
  for (const Word& r : rs.returns) out.push_back(r + rs.factor);
  return out;
}

}  // namespace derw
