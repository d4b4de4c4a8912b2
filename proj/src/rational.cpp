#include "orient/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orient {
namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - (c - '0')) / 10) {
      throw std::invalid_argument("rational out of range: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_term(std::string_view term, std::string_view whole, bool allow_decimal) {
  auto slash = term.find('/');
  auto dot = term.find('.');
  if (dot != std::string_view::npos) {
    if (!allow_decimal) {
      throw std::invalid_argument("decimal values are not accepted here, use a fraction: '" +
                                  std::string(whole) + "'");
    }
    if (slash != std::string_view::npos) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::string_view int_part = term.substr(0, dot);
    std::string_view frac_part = term.substr(dot + 1);
    if (frac_part.size() > 17) {
      throw std::invalid_argument("too many decimal places: '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
    std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
    return Rational(ip) + Rational(fp, scale);
  }
  if (slash == std::string_view::npos) return Rational(parse_int(term, whole));
  std::int64_t num = parse_int(term.substr(0, slash), whole);
  std::int64_t den = parse_int(term.substr(slash + 1), whole);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
  return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_decimal) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw std::invalid_argument("empty rational");
  Rational total(0);
  std::size_t pos = 0;
  int sign = 1;
  if (compact[0] == '+' || compact[0] == '-') {
    sign = compact[0] == '-' ? -1 : 1;
    pos = 1;
  }
  while (true) {
    std::size_t next = compact.find_first_of("+-", pos);
    std::string_view term(compact.data() + pos,
                          (next == std::string::npos ? compact.size() : next) - pos);
    total += sign * parse_term(term, text, allow_decimal);
    if (next == std::string::npos) break;
    sign = compact[next] == '-' ? -1 : 1;
    pos = next + 1;
  }
  return total;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

Tolerance Tolerance::of(const Rational& value) {
  if (value < 0) throw std::domain_error("tolerance must be non-negative");
  return Tolerance(value * value, false, value);
}

Tolerance Tolerance::sqrt_of(const Rational& value) {
  if (value < 0) throw std::domain_error("tolerance must be non-negative");
  return Tolerance(value, true, value);
}

bool Tolerance::covers(const Rational& value) const {
  return value <= 0 || value * value <= squared_;
}

bool Tolerance::abs_below(const Rational& value) const {
  return value * value < squared_;
}

bool Tolerance::count_above_fraction(std::int64_t count, std::int64_t size) const {
  if (count < 0 || size < 0) throw std::domain_error("negative count");
  Rational lhs(count * count);
  return lhs > squared_ * Rational(size * size);
}

double Tolerance::approx() const { return std::sqrt(to_double(squared_)); }

std::string Tolerance::describe() const {
  return is_sqrt_ ? "sqrt(" + to_string(source_) + ")" : to_string(source_);
}

}  // namespace orient
