#include "galois_kit/rational.hpp"

#include <charconv>
#include <numeric>

#include "galois_kit/error.hpp"

namespace galois_kit {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw PreconditionError("malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_integer(text.substr(0, slash), whole),
                    parse_integer(text.substr(slash + 1), whole));

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15)
      throw PreconditionError("malformed rational '" + std::string(whole) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = int_part.empty() ? 0 : parse_integer(int_part, whole);
    if (frac_part.front() == '-' || frac_part.front() == '+')
      throw PreconditionError("malformed rational '" + std::string(whole) + "'");
    std::int64_t fp = parse_integer(frac_part, whole);
    std::int64_t num = ip * scale + fp;
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_integer(text, whole));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw PreconditionError("division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

}  // namespace galois_kit
