// Reduced fractions over arbitrary-precision integers.

#ifndef RELCOMM_EXACT_RATIO_HPP_
#define RELCOMM_EXACT_RATIO_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace relcomm {

using BigInt = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
class ExactRatio {
public:
  ExactRatio() = default;
  ExactRatio(std::int64_t num) : value_(num) {}  // NOLINT: implicit on purpose
  ExactRatio(std::int64_t num, std::int64_t den) : ExactRatio(BigInt(num), BigInt(den)) {}
  ExactRatio(const BigInt& num, const BigInt& den) {
    if (den == 0)
      fail(Errc::invalid_argument, "ExactRatio with zero denominator");
    value_ = Rational(num, den);
  }

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ + b.value_); }
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ - b.value_); }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(a.value_ * b.value_); }
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.value_ == 0)
      fail(Errc::invalid_argument, "ExactRatio division by zero");
    return ExactRatio(a.value_ / b.value_);
  }
  ExactRatio& operator+=(const ExactRatio& o) { value_ += o.value_; return *this; }
  ExactRatio& operator*=(const ExactRatio& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "5/8", or "1" for integers.
  std::string str() const {
    if (den() == 1)
      return num().str();
    return num().str() + "/" + den().str();
  }

  // Decimal rendering rounded half away from zero.
  std::string decimal(int places = 6) const {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i)
      scale *= 10;
    BigInt n = num();
    bool negative = n < 0;
    if (negative)
      n = -n;
    BigInt scaled = (2 * n * scale + den()) / (2 * den());
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string digits = frac.str();
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (places > 0)
      out += "." + std::string(places - digits.size(), '0') + digits;
    return out;
  }

  double to_double() const { return value_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& r) { return os << r.str(); }

private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit ExactRatio(Rational v) : value_(std::move(v)) {}
  Rational value_{0};
};

// (1/k)(1 + (k-1)/index): the common shape of the class-size bounds.
inline ExactRatio class_size_bound(std::uint64_t k, std::uint64_t index) {
  if (k == 0 || index == 0)
    fail(Errc::invalid_argument, "class_size_bound needs positive arguments");
  BigInt kk = k, ii = index;
  return ExactRatio(ii + kk - 1, kk * ii);
}

} // namespace relcomm

#endif
