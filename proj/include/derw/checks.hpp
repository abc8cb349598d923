#pragma once

#include <functional>
#include <string>
#include <vector>

namespace derw {

// A named reference check with a deterministic outcome. On failure, detail
// holds a short expected/got message.
struct Check {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

// The built-in reference results: fixed point prefixes, return words,
// derived words, derived substitutions, link morphisms, semiconjugacies,
// special factors, ancestors, the episturmian family, and the closure
// verdicts. `derw verify-paper` runs this table.
std::vector<Check> reference_checks();

}  // namespace derw
