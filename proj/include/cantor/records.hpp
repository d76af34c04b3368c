#pragma once

#include "cantor/adversary.hpp"
#include "cantor/embedding.hpp"
#include "cantor/forcing.hpp"
#include "cantor/serialize.hpp"

namespace cantor {

inline constexpr std::string_view kConditionFormat = "condition/v1";
inline constexpr std::string_view kColoringFormat = "coloring/v1";

/// [{"e":0,"haltTime":5},{"e":1,"haltTime":"divergent"},...]
Json tableToJson(const HaltingTable& table);
HaltingTable tableFromJson(const Json& records);

/// {"format":"condition/v1","stem":[...],"reservoir":tree,"ambient":tree}
Json conditionToJson(const Condition& c);
Condition conditionFromJson(const Json& record);

/// {"format":"coloring/v1","depth":d,"colors":a,"values":[...]} with
/// values listed by heap index.
Json coloringToJson(const Coloring& coloring);
Coloring coloringFromJson(const Json& record);

/// [[source, image], ...] in source length-lex order.
Json embeddingToJson(const PerfectEmbedding& e);
PerfectEmbedding embeddingFromJson(const Json& pairs);

}  // namespace cantor
