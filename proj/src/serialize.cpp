#include "cantor/serialize.hpp"

#include <fstream>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::size_t byteCount(int depth) {
  return depth >= 3 ? (std::size_t{1} << (depth - 3)) : 1;
}

}  // namespace

std::string leavesToHex(const ClopenTree& tree) {
  const std::size_t bytes = byteCount(tree.depth());
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t j = 0; j < bytes; ++j) {
    const auto byte = static_cast<unsigned>((tree.words()[j / 8] >> (8 * (j % 8))) & 0xffu);
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xfu]);
  }
  return out;
}

ClopenTree treeFromHex(int depth, std::string_view hex) {
  if (depth < 0 || depth > kMaxDepth) {
    throw Error(ErrorCode::MalformedInput,
                "depth " + std::to_string(depth) + " outside [0, " +
                    std::to_string(kMaxDepth) + "]");
  }
  const std::size_t bytes = byteCount(depth);
  if (hex.size() != 2 * bytes) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(2 * bytes) + " hex digits for depth " +
                    std::to_string(depth) + ", got " + std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(depth >= 6 ? (std::size_t{1} << (depth - 6)) : 1, 0);
  for (std::size_t j = 0; j < bytes; ++j) {
    const int hi = hexValue(hex[2 * j]);
    const int lo = hexValue(hex[2 * j + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::MalformedInput, "non-hex digit in leaves");
    words[j / 8] |= static_cast<std::uint64_t>(hi * 16 + lo) << (8 * (j % 8));
  }
  try {
    return ClopenTree::fromWords(depth, std::move(words));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

Json treeToJson(const ClopenTree& tree) {
  Json out;
  out["format"] = kTreeFormat;
  out["depth"] = tree.depth();
  out["leaves"] = leavesToHex(tree);
  return out;
}

ClopenTree treeFromJson(const Json& record) {
  if (!record.is_object()) throw Error(ErrorCode::MalformedInput, "tree record is not an object");
  if (stringField(record, "format") != kTreeFormat) {
    throw Error(ErrorCode::MalformedInput,
                "unsupported tree format '" + stringField(record, "format") + "'");
  }
  return treeFromHex(static_cast<int>(intField(record, "depth")),
                     stringField(record, "leaves"));
}

std::string serializeTree(const ClopenTree& tree) { return treeToJson(tree).dump() + "\n"; }

ClopenTree parseTree(std::string_view text) { return treeFromJson(parseJson(text)); }

Json stringsToJson(std::span<const BitString> strings) {
  Json out = Json::array();
  for (const auto& s : strings) out.push_back(s.str());
  return out;
}

std::vector<BitString> stringsFromJson(const Json& array) {
  if (!array.is_array()) throw Error(ErrorCode::MalformedInput, "expected an array of strings");
  std::vector<BitString> out;
  for (const auto& item : array) {
    if (!item.is_string()) throw Error(ErrorCode::MalformedInput, "expected a bit string");
    out.push_back(BitString::parse(item.get<std::string>()));
  }
  return out;
}

Json finiteTreeToJson(const FiniteTree& tree) { return stringsToJson(tree.nodes()); }

FiniteTree finiteTreeFromJson(const Json& array) {
  return FiniteTree(stringsFromJson(array));
}

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

const Json& field(const Json& object, std::string_view key) {
  if (!object.is_object()) throw Error(ErrorCode::MalformedInput, "expected an object");
  auto it = object.find(std::string(key));
  if (it == object.end()) {
    throw Error(ErrorCode::MalformedInput, "missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string stringField(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_string()) {
    throw Error(ErrorCode::MalformedInput, "field '" + std::string(key) + "' is not a string");
  }
  return value.get<std::string>();
}

std::int64_t intField(const Json& object, std::string_view key) {
  const Json& value = field(object, key);
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::MalformedInput, "field '" + std::string(key) + "' is not an integer");
  }
  return value.get<std::int64_t>();
}

Dyadic dyadicField(const Json& object, std::string_view key) {
  return Dyadic::parse(stringField(object, key));
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace cantor
