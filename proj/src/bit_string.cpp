#include "cantor/bit_string.hpp"

#include <bit>

#include "cantor/error.hpp"

namespace cantor {

BitString::BitString(std::uint64_t value, int length)
    : value_(value), length_(length) {
  if (length < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative string length");
  }
  if (length > kMaxDepth) {
    throw Error(ErrorCode::DepthExceeded,
                "string length " + std::to_string(length) +
                    " exceeds maximum depth " + std::to_string(kMaxDepth));
  }
  if (length < 64 && (value >> length) != 0) {
    throw Error(ErrorCode::InvalidArgument, "value does not fit in length");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text == "λ") return {};
  std::uint64_t value = 0;
  if (text.size() > static_cast<std::size_t>(kMaxDepth)) {
    throw Error(ErrorCode::DepthExceeded,
                "string of length " + std::to_string(text.size()));
  }
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::MalformedInput,
                  "bit string contains '" + std::string(1, c) + "'");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitString(value, static_cast<int>(text.size()));
}

BitString BitString::repeat(bool bit, int count) {
  if (count > kMaxDepth) {
    throw Error(ErrorCode::DepthExceeded, "repeat length");
  }
  std::uint64_t value = bit ? ((std::uint64_t{1} << count) - 1) : 0;
  return BitString(value, count);
}

BitString BitString::child(bool bit) const {
  return BitString((value_ << 1) | static_cast<std::uint64_t>(bit),
                   length_ + 1);
}

BitString BitString::prefix(int n) const {
  if (n < 0 || n > length_) {
    throw Error(ErrorCode::InvalidArgument, "prefix length out of range");
  }
  BitString out;
  out.value_ = value_ >> (length_ - n);
  out.length_ = n;
  return out;
}

int BitString::ones() const noexcept { return std::popcount(value_); }

int BitString::onePosition(int n) const noexcept {
  int seen = 0;
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i]) {
      if (seen == n) return i;
      ++seen;
    }
  }
  return -1;
}

std::string BitString::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i]) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string BitString::display() const { return empty() ? "λ" : str(); }

bool lexLess(const BitString& a, const BitString& b) noexcept {
  const int common = std::min(a.length(), b.length());
  const auto pa = a.value() >> (a.length() - common);
  const auto pb = b.value() >> (b.length() - common);
  if (pa != pb) return pa < pb;
  return a.length() < b.length();
}

BitString fromHeapIndex(std::uint64_t index) {
  const int length = std::bit_width(index + 1) - 1;
  return BitString(index + 1 - (std::uint64_t{1} << length), length);
}

}  // namespace cantor
