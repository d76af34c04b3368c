#include "cantor/functional.hpp"

#include <algorithm>

#include "cantor/error.hpp"

namespace cantor {

bool Oracle::operator()(const BitString& s) const {
  if (s.length() >= use_) {
    throw Error(ErrorCode::UseViolation,
                "query '" + s.str() + "' at or beyond use " + std::to_string(use_));
  }
  return tree_->contains(s);
}

std::optional<bool> TreeFunctional::evaluate(const FiniteTree& tree, std::uint32_t x) const {
  if (x >= inputs()) return std::nullopt;
  const int u = use(x);
  if (tree.norm() < u) return std::nullopt;
  return run(Oracle(tree, u), x);
}

namespace {

class ConstantFunctional final : public TreeFunctional {
 public:
  explicit ConstantFunctional(bool bit) : bit_(bit) {}
  std::string id() const override { return bit_ ? "const1" : "const0"; }
  int use(std::uint32_t) const override { return 0; }
  std::uint32_t inputs() const override { return kBuiltinInputs; }
  Json toJson() const override { return {{"builtin", id()}}; }

 protected:
  std::optional<bool> run(const Oracle&, std::uint32_t) const override { return bit_; }

 private:
  bool bit_;
};

class UndefinedFunctional final : public TreeFunctional {
 public:
  std::string id() const override { return "undefined"; }
  int use(std::uint32_t) const override { return 0; }
  std::uint32_t inputs() const override { return kBuiltinInputs; }
  Json toJson() const override { return {{"builtin", id()}}; }

 protected:
  std::optional<bool> run(const Oracle&, std::uint32_t) const override { return std::nullopt; }
};

class ZeroProbe final : public TreeFunctional {
 public:
  std::string id() const override { return "probe-zeros"; }
  int use(std::uint32_t x) const override { return static_cast<int>(x) + 2; }
  std::uint32_t inputs() const override { return kBuiltinInputs; }
  Json toJson() const override { return {{"builtin", id()}}; }

 protected:
  std::optional<bool> run(const Oracle& oracle, std::uint32_t x) const override {
    return oracle(BitString::repeat(false, static_cast<int>(x) + 1));
  }
};

class LevelParity final : public TreeFunctional {
 public:
  std::string id() const override { return "level-parity"; }
  int use(std::uint32_t x) const override { return static_cast<int>(x) + 2; }
  std::uint32_t inputs() const override { return kBuiltinInputs; }
  Json toJson() const override { return {{"builtin", id()}}; }

 protected:
  std::optional<bool> run(const Oracle& oracle, std::uint32_t x) const override {
    const int len = static_cast<int>(x) + 1;
    bool parity = false;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      if (oracle(BitString(v, len))) parity = !parity;
    }
    return parity;
  }
};

class Majority final : public TreeFunctional {
 public:
  std::string id() const override { return "majority"; }
  int use(std::uint32_t) const override { return 3; }
  std::uint32_t inputs() const override { return kBuiltinInputs; }
  Json toJson() const override { return {{"builtin", id()}}; }

 protected:
  std::optional<bool> run(const Oracle& oracle, std::uint32_t) const override {
    int present = 0;
    for (std::uint64_t v = 0; v < 4; ++v) present += oracle(BitString(v, 2)) ? 1 : 0;
    return present >= 3;
  }
};

}  // namespace

std::vector<std::string> builtinFunctionalIds() {
  return {"const0", "const1", "undefined", "probe-zeros", "level-parity", "majority"};
}

FunctionalPtr builtinFunctional(std::string_view id) {
  if (id == "const0") return std::make_shared<ConstantFunctional>(false);
  if (id == "const1") return std::make_shared<ConstantFunctional>(true);
  if (id == "undefined") return std::make_shared<UndefinedFunctional>();
  if (id == "probe-zeros") return std::make_shared<ZeroProbe>();
  if (id == "level-parity") return std::make_shared<LevelParity>();
  if (id == "majority") return std::make_shared<Majority>();
  throw Error(ErrorCode::InvalidArgument, "unknown functional '" + std::string(id) + "'");
}

TableFunctional::TableFunctional(std::string id, std::vector<BitString> queries,
                                 std::vector<std::string> rows)
    : id_(std::move(id)), queries_(std::move(queries)), rows_(std::move(rows)) {
  if (queries_.size() > 16) {
    throw Error(ErrorCode::MalformedInput, "decision tables support at most 16 queries");
  }
  const std::size_t width = std::size_t{1} << queries_.size();
  for (const auto& row : rows_) {
    if (row.size() != width) {
      throw Error(ErrorCode::MalformedInput,
                  "decision table row must have " + std::to_string(width) + " entries");
    }
    if (row.find_first_not_of("01u") != std::string::npos) {
      throw Error(ErrorCode::MalformedInput, "decision table entries must be 0, 1 or u");
    }
  }
  for (const auto& q : queries_) use_ = std::max(use_, q.length() + 1);
}

Json TableFunctional::toJson() const {
  Json out;
  out["format"] = "decision-table/v1";
  out["id"] = id_;
  out["queries"] = stringsToJson(queries_);
  out["outputs"] = rows_;
  return out;
}

std::shared_ptr<TableFunctional> TableFunctional::fromJson(const Json& record) {
  if (stringField(record, "format") != "decision-table/v1") {
    throw Error(ErrorCode::MalformedInput, "unsupported functional format");
  }
  const Json& outputs = field(record, "outputs");
  if (!outputs.is_array()) throw Error(ErrorCode::MalformedInput, "outputs must be an array");
  std::vector<std::string> rows;
  for (const auto& row : outputs) {
    if (!row.is_string()) throw Error(ErrorCode::MalformedInput, "output rows must be strings");
    rows.push_back(row.get<std::string>());
  }
  return std::make_shared<TableFunctional>(stringField(record, "id"),
                                           stringsFromJson(field(record, "queries")),
                                           std::move(rows));
}

std::optional<bool> TableFunctional::run(const Oracle& oracle, std::uint32_t x) const {
  std::size_t pattern = 0;
  for (std::size_t j = 0; j < queries_.size(); ++j) {
    if (oracle(queries_[j])) pattern |= std::size_t{1} << j;
  }
  const char entry = rows_[x][pattern];
  if (entry == 'u') return std::nullopt;
  return entry == '1';
}

FunctionalPtr functionalFromJson(const Json& record) {
  if (record.is_object() && record.contains("builtin")) {
    try {
      return builtinFunctional(stringField(record, "builtin"));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedInput, e.what());
    }
  }
  return TableFunctional::fromJson(record);
}

TargetSequence TargetSequence::parse(std::string_view text) {
  std::vector<bool> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::MalformedInput, "target sequence must be a 0/1 string");
    }
    bits.push_back(c == '1');
  }
  return TargetSequence(std::move(bits));
}

std::string TargetSequence::str() const {
  std::string out;
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace cantor
