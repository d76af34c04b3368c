#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "cantor/config.hpp"

namespace cantor {

/// A finite binary string, stored MSB-first: the string b_0 b_1 ... b_{n-1}
/// has value sum b_i 2^{n-1-i}. This is the same index a depth-n leaf gets in
/// a ClopenTree bitset, so prefixes are right shifts.
///
/// The default ordering is length-lexicographic (shorter first, then by
/// value); lexLess gives the plain lexicographic order.
class BitString {
 public:
  BitString() = default;

  /// Throws DepthExceeded when length > kMaxDepth, InvalidArgument when
  /// value does not fit in length bits.
  BitString(std::uint64_t value, int length);

  /// Accepts "" or "λ" for the empty string, otherwise only '0'/'1'.
  static BitString parse(std::string_view text);

  /// Run of `count` copies of `bit`.
  static BitString repeat(bool bit, int count);

  int length() const noexcept { return length_; }
  std::uint64_t value() const noexcept { return value_; }
  bool empty() const noexcept { return length_ == 0; }

  bool operator[](int i) const noexcept {
    return (value_ >> (length_ - 1 - i)) & 1u;
  }

  BitString child(bool bit) const;
  BitString prefix(int n) const;

  bool isPrefixOf(const BitString& other) const noexcept {
    return length_ <= other.length_ &&
           (other.value_ >> (other.length_ - length_)) == value_;
  }
  bool comparableWith(const BitString& other) const noexcept {
    return isPrefixOf(other) || other.isPrefixOf(*this);
  }

  int ones() const noexcept;

  /// Position of the n-th one (0-based n), or -1 when there are <= n ones.
  int onePosition(int n) const noexcept;

  std::string str() const;
  /// str(), except the empty string renders as "λ".
  std::string display() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) noexcept {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  int length_ = 0;
};

bool lexLess(const BitString& a, const BitString& b) noexcept;

/// Position of sigma in the heap numbering of 2^{<omega}: lambda is 0,
/// then 0, 1, 00, 01, ... Length-lex order coincides with heap order.
inline std::uint64_t heapIndex(const BitString& s) noexcept {
  return ((std::uint64_t{1} << s.length()) - 1) + s.value();
}
BitString fromHeapIndex(std::uint64_t index);

}  // namespace cantor

template <>
struct std::hash<cantor::BitString> {
  std::size_t operator()(const cantor::BitString& s) const noexcept {
    return std::hash<std::uint64_t>{}(cantor::heapIndex(s));
  }
};
