#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/finite_tree.hpp"
#include "cantor/serialize.hpp"

namespace cantor {

/// Characteristic function of a finite tree, answering only strings shorter
/// than the use bound. A longer query throws UseViolation.
class Oracle {
 public:
  Oracle(const FiniteTree& tree, int use) : tree_(&tree), use_(use) {}

  bool operator()(const BitString& s) const;
  int use() const noexcept { return use_; }

 private:
  const FiniteTree* tree_;
  int use_;
};

/// A bounded deterministic oracle program standing in for a Turing
/// functional. Phi(E; x) converges only when ||E|| >= use(x), x < inputs(),
/// and the program itself produces a bit; every query has length < use(x),
/// so trees agreeing below the use give identical results.
class TreeFunctional {
 public:
  virtual ~TreeFunctional() = default;

  virtual std::string id() const = 0;
  virtual int use(std::uint32_t x) const = 0;
  /// Inputs are 0..inputs()-1; anything else is undefined.
  virtual std::uint32_t inputs() const = 0;
  virtual Json toJson() const = 0;

  std::optional<bool> evaluate(const FiniteTree& tree, std::uint32_t x) const;

 protected:
  virtual std::optional<bool> run(const Oracle& oracle, std::uint32_t x) const = 0;
};

using FunctionalPtr = std::shared_ptr<const TreeFunctional>;

/// Number of inputs every built-in functional accepts.
inline constexpr std::uint32_t kBuiltinInputs = 4;

/// Identifiers of the built-in registry:
///   const0, const1   constant output, use 0
///   undefined        never converges
///   probe-zeros      1 iff 0^{x+1} is in the tree, use x+2
///   level-parity     |E cap 2^{x+1}| mod 2, use x+2
///   majority         1 iff at least 3 of {00,01,10,11} are present, use 3
std::vector<std::string> builtinFunctionalIds();
/// Throws InvalidArgument for unknown identifiers.
FunctionalPtr builtinFunctional(std::string_view id);

/// A user-supplied functional: a list of query strings and, per input x,
/// an output row indexed by the answer pattern (bit j of the index is the
/// answer to query j). Row entries are '0', '1' or 'u' (undefined).
class TableFunctional final : public TreeFunctional {
 public:
  TableFunctional(std::string id, std::vector<BitString> queries, std::vector<std::string> rows);

  std::string id() const override { return id_; }
  int use(std::uint32_t) const override { return use_; }
  std::uint32_t inputs() const override { return static_cast<std::uint32_t>(rows_.size()); }
  Json toJson() const override;

  static std::shared_ptr<TableFunctional> fromJson(const Json& record);

 protected:
  std::optional<bool> run(const Oracle& oracle, std::uint32_t x) const override;

 private:
  std::string id_;
  std::vector<BitString> queries_;
  std::vector<std::string> rows_;
  int use_ = 0;
};

/// {"builtin": id} for registry members, the decision-table record otherwise.
FunctionalPtr functionalFromJson(const Json& record);

/// The finite target X(0..L-1) a forcing step diagonalizes against.
class TargetSequence {
 public:
  TargetSequence() = default;
  explicit TargetSequence(std::vector<bool> bits) : bits_(std::move(bits)) {}
  static TargetSequence parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  std::string str() const;

 private:
  std::vector<bool> bits_;
};

}  // namespace cantor
