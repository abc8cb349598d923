#pragma once

#include <json.hpp>

#include "derw/closure.hpp"

namespace derw {

// JSON renderings of the report types. Field values mirror the text output
// of the CLI exactly.

nlohmann::json render_json(const ReturnStructure& rs);
nlohmann::json render_json(const DerivationCertificate& cert);
nlohmann::json render_json(const LinkMorphism& link);
nlohmann::json render_json(const Renaming& renaming);
nlohmann::json render_json(const Word& factor, const SpecialClass& cls);
nlohmann::json render_json(const AncestorReport& report);
nlohmann::json render_json(const ClosureReport& report);

}  // namespace derw
