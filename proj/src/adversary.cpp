#include "cantor/adversary.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

HaltingTable HaltingTable::restricted(int n) const {
  if (n < 0 || n > size()) throw Error(ErrorCode::OutOfTable, "restriction past table size");
  return HaltingTable({entries_.begin(), entries_.begin() + n});
}

std::uint64_t modulus(const HaltingTable& table, int x) {
  if (x < 0 || x > table.size()) {
    throw Error(ErrorCode::OutOfTable,
                "modulus at " + std::to_string(x) + " for a table of size " +
                    std::to_string(table.size()));
  }
  std::uint64_t m = 0;
  for (int e = 0; e < x; ++e) {
    if (table[e]) m = std::max(m, *table[e]);
  }
  return m;
}

namespace {

std::vector<std::uint64_t> modulusPrefix(const HaltingTable& table) {
  std::vector<std::uint64_t> out{0};
  for (int e = 0; e < table.size(); ++e) {
    out.push_back(table[e] ? std::max(out.back(), *table[e]) : out.back());
  }
  return out;
}

}  // namespace

bool inC(const HaltingTable& table, const BitString& s) {
  const auto m = modulusPrefix(table);
  int n = 0;
  for (int i = 0; i < s.length() && n <= table.size(); ++i) {
    if (!s[i]) continue;
    if (static_cast<std::uint64_t>(i) < m[static_cast<std::size_t>(n)]) return false;
    ++n;
  }
  return true;
}

ClopenTree adversarialTree(const HaltingTable& table, int depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "adversarial tree depth must be >= 1");
  const auto m = modulusPrefix(table);
  std::vector<BitString> leaves;
  const auto extend = [&](auto&& self, const BitString& prefix, int ones) -> void {
    if (prefix.length() == depth) {
      leaves.push_back(prefix);
      return;
    }
    self(self, prefix.child(false), ones);
    const bool constrained = ones <= table.size();
    if (!constrained ||
        static_cast<std::uint64_t>(prefix.length()) >= m[static_cast<std::size_t>(ones)]) {
      self(self, prefix.child(true), ones + 1);
    }
  };
  extend(extend, BitString{}, 0);
  return ClopenTree::fromLeaves(depth, leaves);
}

HaltingTable decodeHalting(const BitString& s, int entries, const HaltingTable& table) {
  if (entries < 0 || entries > table.size()) {
    throw Error(ErrorCode::OutOfTable,
                "cannot decode " + std::to_string(entries) + " entries from a table of size " +
                    std::to_string(table.size()));
  }
  if (s.ones() <= entries) {
    throw Error(ErrorCode::InsufficientOnes,
                "'" + s.str() + "' has " + std::to_string(s.ones()) + " ones; need " +
                    std::to_string(entries + 1));
  }
  if (!inC(table, s)) throw Error(ErrorCode::NotInC, "'" + s.str() + "' is not in C");
  std::vector<HaltingTable::HaltTime> decoded;
  for (int e = 0; e < entries; ++e) {
    const auto budget = static_cast<std::uint64_t>(s.onePosition(e + 1));
    const auto& halt = table[e];
    decoded.push_back(halt && *halt <= budget ? halt : std::nullopt);
  }
  return HaltingTable(std::move(decoded));
}

}  // namespace cantor
