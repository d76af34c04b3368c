#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cantor/bit_string.hpp"
#include "cantor/clopen_tree.hpp"
#include "cantor/dyadic.hpp"
#include "cantor/finite_tree.hpp"

namespace cantor {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kTreeFormat = "clopen-tree/v1";

/// Hex encoding of the leaf bitset: byte j holds leaves 8j..8j+7, leaf i at
/// bit (i mod 8), bytes emitted in increasing j. Depths below 3 still use
/// one byte.
std::string leavesToHex(const ClopenTree& tree);
ClopenTree treeFromHex(int depth, std::string_view hex);

/// {"format":"clopen-tree/v1","depth":d,"leaves":"<hex>"}
Json treeToJson(const ClopenTree& tree);
ClopenTree treeFromJson(const Json& record);

/// The tree file: treeToJson rendered compactly, plus a trailing newline.
std::string serializeTree(const ClopenTree& tree);
ClopenTree parseTree(std::string_view text);

Json stringsToJson(std::span<const BitString> strings);
std::vector<BitString> stringsFromJson(const Json& array);
Json finiteTreeToJson(const FiniteTree& tree);
FiniteTree finiteTreeFromJson(const Json& array);

/// Parses text as JSON, mapping syntax errors to MalformedInput.
Json parseJson(std::string_view text);

/// Typed field access that reports missing or mistyped fields as
/// MalformedInput.
const Json& field(const Json& object, std::string_view key);
std::string stringField(const Json& object, std::string_view key);
std::int64_t intField(const Json& object, std::string_view key);
Dyadic dyadicField(const Json& object, std::string_view key);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view contents);

}  // namespace cantor
