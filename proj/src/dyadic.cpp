#include "cantor/dyadic.hpp"

#include <charconv>

#include "cantor/error.hpp"

namespace cantor {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(Integer numerator, std::uint32_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const auto twos = static_cast<std::uint32_t>(mp::lsb(mp::abs(numerator_)));
  const auto shift = std::min(twos, exponent_);
  if (shift > 0) {
    numerator_ >>= shift;
    exponent_ -= shift;
  }
}

Dyadic Dyadic::pow2(int k) {
  if (k >= 0) {
    Integer n = 1;
    n <<= k;
    return Dyadic(n, 0);
  }
  return Dyadic(Integer(1), static_cast<std::uint32_t>(-k));
}

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) {
    const auto down = std::min<std::uint32_t>(exponent_, static_cast<std::uint32_t>(k));
    Integer n = numerator_;
    n <<= (static_cast<std::uint32_t>(k) - down);
    return Dyadic(n, exponent_ - down);
  }
  return Dyadic(numerator_, exponent_ + static_cast<std::uint32_t>(-k));
}

namespace {

Dyadic::Integer parseInteger(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw Error(ErrorCode::MalformedInput, "empty integer in dyadic");
  }
  Dyadic::Integer value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::MalformedInput,
                  "non-digit '" + std::string(1, c) + "' in dyadic");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Dyadic::Integer(-value) : value;
}

std::uint32_t parseExponent(std::string_view text) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::MalformedInput,
                "bad dyadic exponent '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parseInteger(text), 0);
  Integer numerator = parseInteger(text.substr(0, slash));
  std::string_view denominator = text.substr(slash + 1);
  if (denominator.starts_with("2^")) {
    return Dyadic(numerator, parseExponent(denominator.substr(2)));
  }
  Integer den = parseInteger(denominator);
  if (den.sign() <= 0 || (den & (den - 1)) != 0) {
    throw Error(ErrorCode::MalformedInput,
                "denominator '" + std::string(denominator) +
                    "' is not a power of two");
  }
  return Dyadic(numerator, static_cast<std::uint32_t>(mp::msb(den)));
}

std::string Dyadic::str() const {
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exponent_ == b.exponent_) return Dyadic(a.numerator_ + b.numerator_, a.exponent_);
  if (a.exponent_ < b.exponent_) {
    Dyadic::Integer n = a.numerator_;
    n <<= (b.exponent_ - a.exponent_);
    return Dyadic(n + b.numerator_, b.exponent_);
  }
  Dyadic::Integer n = b.numerator_;
  n <<= (a.exponent_ - b.exponent_);
  return Dyadic(a.numerator_ + n, a.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.numerator_.sign() != b.numerator_.sign()) {
    return a.numerator_.sign() <=> b.numerator_.sign();
  }
  int c = 0;
  if (a.exponent_ == b.exponent_) {
    c = a.numerator_.compare(b.numerator_);
  } else if (a.exponent_ < b.exponent_) {
    Dyadic::Integer n = a.numerator_;
    n <<= (b.exponent_ - a.exponent_);
    c = n.compare(b.numerator_);
  } else {
    Dyadic::Integer n = b.numerator_;
    n <<= (a.exponent_ - b.exponent_);
    c = a.numerator_.compare(n);
  }
  return c <=> 0;
}

}  // namespace cantor
