#include "derw/closure.hpp"

#include <algorithm>

#include "derw/episturmian.hpp"

namespace derw {

namespace {

std::vector<Word> representative_factors(PrefixOracle& oracle,
                                         const ClosureParams& params) {
  std::vector<Word> factors;
  switch (params.selection) {
    case ClosureParams::Selection::reduced: {
      factors = right_special_prefixes(oracle, params.max_factor_len,
                                       params.scan);
      for (Word& w :
           bispecial_factors(oracle, params.max_factor_len, params.scan)) {
        if (!w.empty()) factors.push_back(std::move(w));
      }
      break;
    }
    case ClosureParams::Selection::all_factors: {
      for (Word& w :
           factor_inventory(oracle, params.max_factor_len, params.scan)) {
        if (!w.empty()) factors.push_back(std::move(w));
      }
      break;
    }
    case ClosureParams::Selection::prefixes_only: {
      for (std::size_t len = 1; len <= params.max_factor_len; ++len) {
        factors.push_back(oracle.word(len));
      }
      break;
    }
  }
  std::sort(factors.begin(), factors.end(), length_lex_less);
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}

}  // namespace

std::vector<Representative> derived_representatives(
    const Substitution& sigma, const ClosureParams& params) {
  PrefixOracle oracle(sigma);
  std::vector<Representative> out;
  std::set<std::string> seen_derived;
  for (const Word& w : representative_factors(oracle, params)) {
    try {
      Word d = derived_word(w, oracle, params.derived_horizon, params.scan);
      if (seen_derived.insert(d.str()).second) {
        out.push_back(Representative{w, std::move(d), std::nullopt});
      }
    } catch (const InsufficientData& e) {
      out.push_back(Representative{w, Word(), e.what()});
    }
  }
  return out;
}

std::string ClosureReport::verdict() const {
  if (verified) {
    return "verified to (L=" + std::to_string(params.max_factor_len) +
           ", N=" + std::to_string(params.derived_horizon) + ")";
  }
  return "not verified";
}

ClosureReport check_closed(const std::vector<Substitution>& members,
                           const ClosureParams& params) {
  if (members.empty()) {
    throw Error("closure check needs a nonempty set of substitutions");
  }
  for (const Substitution& s : members) {
    if (!is_primitive(s.morphism())) {
      throw NotPrimitive("closure checks are defined for primitive "
                         "substitutions; " +
                         s.format() + " is not primitive");
    }
  }

  ClosureReport report;
  report.members = members;
  report.params = params;
  report.verified = true;

  auto try_match = [&](ClosureMatch& row, const Substitution* certificate) {
    for (int j = 0; j < static_cast<int>(members.size()); ++j) {
      bool conjugate = false;
      if (certificate != nullptr) {
        auto pi = conjugate_renaming(certificate->morphism(),
                                     members[static_cast<std::size_t>(j)].morphism());
        conjugate = pi.has_value();
      }
      auto renaming = fixed_up_to_renaming(
          row.derived_prefix, members[static_cast<std::size_t>(j)],
          params.derived_horizon);
      if (renaming) {
        row.matched_member = j;
        row.renaming = std::move(renaming);
        row.method = conjugate ? "conjugacy+prefix" : "prefix";
        return;
      }
    }
  };

  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    const Substitution& phi = members[static_cast<std::size_t>(i)];
    PrefixOracle oracle(phi);

    // The empty factor first: its derived word is the fixed point itself,
    // recoded by first appearance.
    {
      ClosureMatch row;
      row.source_member = i;
      row.factor = Word(phi.alphabet(), "");
      row.derived_prefix =
          derived_word(row.factor, oracle, params.derived_horizon, params.scan);
      try_match(row, nullptr);
      if (row.matched_member < 0) {
        report.verified = false;
        if (!report.counterexample) {
          report.counterexample = report.matches.size();
        }
      }
      report.matches.push_back(std::move(row));
    }

    for (Representative& rep : derived_representatives(phi, params)) {
      ClosureMatch row;
      row.source_member = i;
      row.factor = rep.factor;
      row.derived_prefix = rep.derived_prefix;
      row.error = rep.error;
      if (!row.error) {
        std::optional<Substitution> certificate;
        if (oracle.view(row.factor.size()) == row.factor.view()) {
          certificate = durand_substitution(oracle, row.factor, params.scan)
                            .derived;
        }
        try_match(row, certificate ? &*certificate : nullptr);
      }
      if (row.matched_member < 0) {
        report.verified = false;
        if (!report.counterexample) {
          report.counterexample = report.matches.size();
        }
      }
      report.matches.push_back(std::move(row));
    }
  }
  return report;
}

ClosureReport verify_family_theorem(const Word& z,
                                    const ClosureParams& params) {
  std::vector<Morphism> family = epi_family(z);
  std::vector<Substitution> members;
  members.reserve(family.size());
  for (Morphism& m : family) members.push_back(Substitution::from(std::move(m)));

  ClosureReport report = check_closed(members, params);

  for (ClosureMatch& row : report.matches) {
    if (row.matched_member < 0) continue;
    const Morphism& matched =
        members[static_cast<std::size_t>(row.matched_member)].morphism();
    for (std::size_t k = 1; k <= z.size(); ++k) {
      if (epi_morphism(cyc(z, k)) == matched) {
        row.family_index = static_cast<int>(k);
        break;
      }
    }
  }
  return report;
}

}  // namespace derw
