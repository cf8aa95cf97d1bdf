#include "legendrian/rational.hpp"

#include <cctype>

#include "legendrian/errors.hpp"

namespace legendrian {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const char* what) {
    throw ParseError(std::string("invalid rational '") + std::string(text) + "': " + what, 1,
                     static_cast<int>(pos) + 1);
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digit");
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  };
  mpz_class num = digits();
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
    if (den == 0) {
      --pos;
      fail("zero denominator");
    }
  }
  if (pos != text.size()) fail("unexpected character");
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace legendrian
