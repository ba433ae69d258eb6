#include "dlat/rational.hpp"

#include <cctype>

#include "dlat/errors.hpp"

namespace dlat {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw PreconditionError("malformed rational: '" + std::string(text) + "'");
  }
  auto strip = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  mpz_class n(strip(num), 10);
  mpz_class d(strip(den), 10);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

}  // namespace dlat
