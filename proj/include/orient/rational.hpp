#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace orient {

/// Exact rational used for every density, threshold and probability.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2", "3/14" or sums/differences such as "3/4+1/10".
/// Decimal literals ("0.5") are accepted only when allow_decimal is set and
/// are converted exactly (0.125 -> 1/8). Throws std::invalid_argument.
Rational parse_rational(std::string_view text, bool allow_decimal = false);

std::string to_string(const Rational& r);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// A non-negative tolerance that may be the square root of a rational.
/// Stored squared so comparisons such as x < sqrt(eps) stay exact.
class Tolerance {
 public:
  static Tolerance of(const Rational& value);
  static Tolerance sqrt_of(const Rational& value);

  const Rational& squared() const { return squared_; }

  /// value <= tolerance (always true for negative values).
  bool covers(const Rational& value) const;
  /// |value| < tolerance.
  bool abs_below(const Rational& value) const;
  /// count > tolerance * size, for count, size >= 0.
  bool count_above_fraction(std::int64_t count, std::int64_t size) const;

  double approx() const;
  std::string describe() const;

 private:
  explicit Tolerance(Rational squared, bool is_sqrt, Rational source)
      : squared_(squared), is_sqrt_(is_sqrt), source_(source) {}

  Rational squared_;
  bool is_sqrt_ = false;
  Rational source_;
};

}  // namespace orient
