#pragma once

#include "derw/analysis.hpp"
#include "derw/derivation.hpp"

namespace derw {

// Parameters of a closure check. Verdicts are horizon-qualified: factors up
// to length max_factor_len, derived words compared to derived_horizon
// letters, scans capped by the policy budget.
struct ClosureParams {
  std::size_t max_factor_len = 30;   // L
  std::size_t derived_horizon = 2000;  // N
  ScanPolicy scan;

  // Which factors represent the set of derived words: the right-special
  // prefixes and bispecial factors (sufficient for recurrent words), every
  // nonempty factor, or every nonempty prefix.
  enum class Selection { reduced, all_factors, prefixes_only };
  Selection selection = Selection::reduced;
};

// A factor together with the prefix of its derived word at the horizon.
// Deduplicated by derived prefix in derived_representatives; `error` records
// per-factor budget exhaustion instead of aborting the run.
struct Representative {
  Word factor;
  Word derived_prefix;
  std::optional<std::string> error;
};

std::vector<Representative> derived_representatives(
    const Substitution& sigma, const ClosureParams& params = {});

// One row of a closure report: the derived word of `factor` of member
// `source_member`'s fixed point, and which member of the set fixes it (up to
// renaming) at the horizon. matched_member is -1 when nothing matched, which
// makes the row a counterexample.
struct ClosureMatch {
  int source_member = 0;
  Word factor;
  Word derived_prefix;
  int matched_member = -1;
  std::optional<Renaming> renaming;
  std::string method;  // "conjugacy+prefix" or "prefix"
  std::optional<int> family_index;  // rotation index k, family checks only
  std::optional<std::string> error;
};

struct ClosureReport {
  std::vector<Substitution> members;
  ClosureParams params;
  std::vector<ClosureMatch> matches;
  bool verified = false;
  std::optional<std::size_t> counterexample;  // index of the first failed row

  std::string verdict() const;  // "verified to (L=…, N=…)" or "not verified"
};

// Checks Definition-style closure under derivation at the given horizons:
// for every member, the derived word of the empty factor and of every
// representative factor of its fixed point must be fixed, up to renaming, by
// some member. Every positive match is re-verified with a fresh
// fixed_up_to_renaming run. Members must be primitive.
ClosureReport check_closed(const std::vector<Substitution>& members,
                           const ClosureParams& params = {});

// Builds the family {L_cyc^k(z)} and runs check_closed on it, recording for
// each matched row the smallest rotation index k whose morphism matched.
ClosureReport verify_family_theorem(const Word& z,
                                    const ClosureParams& params = {});

}  // namespace derw
