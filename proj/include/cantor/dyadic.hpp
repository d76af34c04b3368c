#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cantor {

/// Exact dyadic rational numerator / 2^exponent.
///
/// Always normalized: either the exponent is 0 or the numerator is odd.
/// All arithmetic is exact; there is no rounding anywhere. The canonical
/// text form is "p/2^q" (e.g. "3/2^2", "1/2^0", "-5/2^3").
class Dyadic {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Dyadic() = default;
  Dyadic(std::int64_t value) : numerator_(value) {}  // NOLINT(implicit)
  Dyadic(Integer numerator, std::uint32_t exponent);

  /// 2^k for any integer k.
  static Dyadic pow2(int k);

  /// Parses "p/2^q", "p/b" with b a power of two, or a bare integer "p".
  static Dyadic parse(std::string_view text);

  const Integer& numerator() const noexcept { return numerator_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  bool isZero() const noexcept { return numerator_.is_zero(); }
  bool isPositive() const noexcept { return numerator_.sign() > 0; }
  bool isNegative() const noexcept { return numerator_.sign() < 0; }

  /// this * 2^k.
  Dyadic scaled(int k) const;

  std::string str() const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
  Dyadic& operator-=(const Dyadic& other) { return *this = *this - other; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  Integer numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

/// count * 2^{-depth}; the measure of `count` cylinders of length `depth`.
inline Dyadic cylinderMass(std::uint64_t count, int depth) {
  return Dyadic(Dyadic::Integer(count), static_cast<std::uint32_t>(depth));
}

}  // namespace cantor
