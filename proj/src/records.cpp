#include "cantor/records.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void expectFormat(const Json& record, std::string_view format) {
  if (!record.is_object() || stringField(record, "format") != format) {
    throw Error(ErrorCode::MalformedInput, "expected a " + std::string(format) + " record");
  }
}

}  // namespace

Json tableToJson(const HaltingTable& table) {
  Json out = Json::array();
  for (int e = 0; e < table.size(); ++e) {
    Json row;
    row["e"] = e;
    if (table[e]) {
      row["haltTime"] = *table[e];
    } else {
      row["haltTime"] = "divergent";
    }
    out.push_back(std::move(row));
  }
  return out;
}

HaltingTable tableFromJson(const Json& records) {
  if (!records.is_array()) throw Error(ErrorCode::MalformedInput, "halting table is not an array");
  std::vector<HaltingTable::HaltTime> entries;
  for (const auto& row : records) {
    if (intField(row, "e") != static_cast<std::int64_t>(entries.size())) {
      throw Error(ErrorCode::MalformedInput,
                  "halting table rows must be listed as e = 0, 1, 2, ...");
    }
    const Json& time = field(row, "haltTime");
    if (time.is_string() && time.get<std::string>() == "divergent") {
      entries.emplace_back();
    } else if (time.is_number_unsigned() || (time.is_number_integer() && time.get<std::int64_t>() >= 0)) {
      entries.emplace_back(time.get<std::uint64_t>());
    } else {
      throw Error(ErrorCode::MalformedInput, "haltTime must be a natural number or \"divergent\"");
    }
  }
  return HaltingTable(std::move(entries));
}

Json conditionToJson(const Condition& c) {
  Json out;
  out["format"] = kConditionFormat;
  out["stem"] = finiteTreeToJson(c.stem);
  out["reservoir"] = treeToJson(c.reservoir);
  out["ambient"] = treeToJson(c.ambient);
  return out;
}

Condition conditionFromJson(const Json& record) {
  expectFormat(record, kConditionFormat);
  return {finiteTreeFromJson(field(record, "stem")), treeFromJson(field(record, "reservoir")),
          treeFromJson(field(record, "ambient"))};
}

Json coloringToJson(const Coloring& coloring) {
  Json out;
  out["format"] = kColoringFormat;
  out["depth"] = coloring.depth();
  out["colors"] = coloring.colors();
  out["values"] = coloring.values();
  return out;
}

Coloring coloringFromJson(const Json& record) {
  expectFormat(record, kColoringFormat);
  const Json& values = field(record, "values");
  if (!values.is_array()) throw Error(ErrorCode::MalformedInput, "coloring values must be an array");
  std::vector<int> colors;
  for (const auto& v : values) {
    if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "colors are integers");
    colors.push_back(v.get<int>());
  }
  try {
    return Coloring(static_cast<int>(intField(record, "depth")),
                    static_cast<int>(intField(record, "colors")), std::move(colors));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

Json embeddingToJson(const PerfectEmbedding& e) {
  Json out = Json::array();
  for (const auto& [source, image] : e.associations()) out.push_back({source.str(), image.str()});
  return out;
}

PerfectEmbedding embeddingFromJson(const Json& pairs) {
  if (!pairs.is_array()) throw Error(ErrorCode::MalformedInput, "embedding is not an array");
  std::vector<BitString> images;
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw Error(ErrorCode::MalformedInput, "embedding entries are [source, image] pairs");
    }
    const BitString source = BitString::parse(pair[0].get<std::string>());
    if (heapIndex(source) != images.size()) {
      throw Error(ErrorCode::MalformedInput, "embedding sources must be listed in length-lex order");
    }
    images.push_back(BitString::parse(pair[1].get<std::string>()));
  }
  int height = 0;
  while ((std::size_t{1} << height) - 1 < images.size()) ++height;
  if ((std::size_t{1} << height) - 1 != images.size()) {
    throw Error(ErrorCode::MalformedInput, "embedding does not cover a full 2^{<k}");
  }
  return PerfectEmbedding(height, std::move(images));
}

}  // namespace cantor
