#include "derw/json_io.hpp"

namespace derw {

using nlohmann::json;

namespace {

json words_as_strings(const std::vector<Word>& words) {
  json arr = json::array();
  for (const Word& w : words) arr.push_back(w.str());
  return arr;
}

}  // namespace

json render_json(const ReturnStructure& rs) {
  return json{{"factor", rs.factor.str()},
              {"returns", words_as_strings(rs.returns)},
              {"skip_prefix", rs.skip_prefix.str()},
              {"derived_prefix", rs.derived_prefix.str()},
              {"stable", rs.stable},
              {"scan_length", rs.scan_length}};
}

json render_json(const DerivationCertificate& cert) {
  return json{{"source_rules", cert.source.format()},
              {"prefix", cert.prefix_factor.str()},
              {"returns", words_as_strings(cert.returns.returns)},
              {"decompositions", words_as_strings(cert.decompositions)},
              {"derived_rules", cert.derived.format()},
              {"derived_primitive_witness",
               cert.derived_primitivity.witness_exponent}};
}

json render_json(const LinkMorphism& link) {
  return json{{"factor", link.factor.str()},
              {"skip_prefix", link.skip_prefix.str()},
              {"prefix_with_factor", link.prefix_with_factor.str()},
              {"alpha_rules", link.alpha.format()},
              {"decompositions", words_as_strings(link.decompositions)},
              {"returns_to_prefix", words_as_strings(link.returns_pw.returns)},
              {"returns_to_factor", words_as_strings(link.returns_w.returns)}};
}

json render_json(const Renaming& renaming) { return renaming.format(); }

json render_json(const Word& factor, const SpecialClass& cls) {
  return json{{"factor", factor.str()},
              {"class", to_string(cls.kind)},
              {"left", std::string(cls.left.begin(), cls.left.end())},
              {"right", std::string(cls.right.begin(), cls.right.end())},
              {"stable", cls.stable},
              {"scan_length", cls.scan_length}};
}

json render_json(const AncestorReport& report) {
  json ancestors = json::array();
  for (const AncestorWitness& w : report.ancestors) {
    ancestors.push_back(json{{"ancestor", w.ancestor.str()},
                             {"y", w.left_flank.str()},
                             {"y_prime", w.right_flank.str()}});
  }
  return json{{"factor", report.factor.str()},
              {"ancestors", ancestors},
              {"ambiguous", report.ambiguous},
              {"candidate_bound", report.candidate_bound}};
}

json render_json(const ClosureReport& report) {
  json members = json::array();
  for (const Substitution& s : report.members) members.push_back(s.format());

  json matches = json::array();
  for (const ClosureMatch& row : report.matches) {
    json entry{{"source_member", row.source_member},
               {"factor", row.factor.str()},
               {"derived_prefix", row.derived_prefix.str()},
               {"horizon", report.params.derived_horizon}};
    if (row.matched_member >= 0) {
      entry["member"] = row.matched_member;
      entry["renaming"] = row.renaming ? row.renaming->format() : "";
      entry["method"] = row.method;
    } else {
      entry["member"] = nullptr;
    }
    if (row.family_index) entry["family_index"] = *row.family_index;
    if (row.error) entry["error"] = *row.error;
    matches.push_back(std::move(entry));
  }

  json out{{"members", members},
           {"params",
            json{{"max_factor_len", report.params.max_factor_len},
                 {"horizon", report.params.derived_horizon},
                 {"reduction",
                  report.params.selection !=
                      ClosureParams::Selection::all_factors}}},
           {"matches", matches},
           {"verdict", report.verdict()}};
  if (report.counterexample) {
    const ClosureMatch& c = report.matches[*report.counterexample];
    out["counterexample"] = json{{"source_member", c.source_member},
                                 {"factor", c.factor.str()},
                                 {"derived_prefix", c.derived_prefix.str()}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace derw
