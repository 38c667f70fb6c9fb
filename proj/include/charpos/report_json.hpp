#pragma once

#include <string>

#include "json.hpp"

#include "charpos/character_table.hpp"
#include "charpos/classify.hpp"

namespace charpos {

using Json = nlohmann::ordered_json;

/// Bumped whenever a field is renamed, removed or changes meaning.
inline constexpr int kSchemaVersion = 1;

Json generators_json(const std::vector<Permutation>& gens);
Json to_json(const PrtWitness& w);
Json to_json(const MonomialWitness& w);
Json to_json(const IprCertificate& cert);
Json to_json(const ClassificationReport& r);
Json to_json(const CharacterTable& T);

/// Throws FormatError on missing or mistyped fields.
IprCertificate certificate_from_json(const Json& j);

/// Short human-readable summary.
std::string to_text(const ClassificationReport& r);

} // namespace charpos
