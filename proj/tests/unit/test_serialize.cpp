#include <doctest.h>

#include "cantor/error.hpp"
#include "cantor/random.hpp"
#include "cantor/records.hpp"
#include "cantor/serialize.hpp"

using namespace cantor;

TEST_CASE("tree files use little-endian hex bytes") {
  const auto t = ClopenTree::fromLeaves(3, std::vector<BitString>{BitString::parse("000"),
                                                                  BitString::parse("011")});
  CHECK(serializeTree(t) == "{\"format\":\"clopen-tree/v1\",\"depth\":3,\"leaves\":\"09\"}\n");
  CHECK(leavesToHex(ClopenTree::full(4)) == "ffff");
  CHECK(leavesToHex(ClopenTree::full(1)) == "03");
  CHECK(leavesToHex(ClopenTree::fromLeaves(4, std::vector<BitString>{BitString::parse("1000")})) ==
        "0001");
}

TEST_CASE("tree files round-trip byte for byte") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = genUniformTree(static_cast<int>(rng.below(13)), rng);
    const std::string text = serializeTree(t);
    CHECK(parseTree(text) == t);
    CHECK(serializeTree(parseTree(text)) == text);
  }
}

TEST_CASE("malformed tree files are rejected") {
  const auto code = [](const std::string& text) {
    try {
      parseTree(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code("not json") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v2","depth":1,"leaves":"03"})") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v1","depth":3,"leaves":"0"})") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v1","depth":1,"leaves":"07"})") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v1","depth":3,"leaves":"zz"})") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v1","leaves":"ff"})") == ErrorCode::MalformedInput);
  CHECK(code(R"({"format":"clopen-tree/v1","depth":99,"leaves":"ff"})") == ErrorCode::MalformedInput);
}

TEST_CASE("domain records round-trip") {
  const HaltingTable table({5, std::nullopt, 3});
  CHECK(tableToJson(table).dump() ==
        R"([{"e":0,"haltTime":5},{"e":1,"haltTime":"divergent"},{"e":2,"haltTime":3}])");
  CHECK(tableFromJson(tableToJson(table)) == table);
  CHECK_THROWS_AS(tableFromJson(parseJson(R"([{"e":1,"haltTime":5}])")), Error);
  CHECK_THROWS_AS(tableFromJson(parseJson(R"([{"e":0,"haltTime":-2}])")), Error);

  const Condition c{FiniteTree::fullBinary(2), ClopenTree::full(3), ClopenTree::full(2)};
  const Condition back = conditionFromJson(conditionToJson(c));
  CHECK(back.stem == c.stem);
  CHECK(back.reservoir == c.reservoir);
  CHECK(back.ambient == c.ambient);

  const auto coloring = Coloring::fromFunction(3, 2, [](const BitString& s) { return s.ones() % 2; });
  CHECK(coloringFromJson(coloringToJson(coloring)).values() == coloring.values());

  const PerfectEmbedding e(2, {BitString::parse(""), BitString::parse("00"), BitString::parse("01")});
  CHECK(embeddingToJson(e).dump() == R"([["",""],["0","00"],["1","01"]])");
  CHECK(embeddingFromJson(embeddingToJson(e)) == e);
}
