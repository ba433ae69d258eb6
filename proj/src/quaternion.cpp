#include "dlat/quaternion.hpp"

#include <sstream>

#include "dlat/errors.hpp"

namespace dlat {

Rational Quaternion::norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  return {x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
          x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
          x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
          x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_};
}

Quaternion inverse(const Quaternion& x) {
  if (x.is_zero()) throw DivisionByZero();
  Rational n = x.norm();
  Quaternion c = x.conj();
  return {c.real() / n, c.i_part() / n, c.j_part() / n, c.k_part() / n};
}

Quaternion conjugate_by(const Quaternion& x, const Quaternion& c) { return c * x * inverse(c); }

std::array<std::string, 4> Quaternion::to_strings() const {
  return {a_.str(), b_.str(), c_.str(), d_.str()};
}

Quaternion Quaternion::from_strings(const std::array<std::string, 4>& parts) {
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
          Rational::parse(parts[3])};
}

std::string Quaternion::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& r, const char* unit) {
    if (r.is_zero()) return;
    Rational mag = r.sign() < 0 ? -r : r;
    if (first) {
      if (r.sign() < 0) os << '-';
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    if (*unit == '\0' || mag != Rational(1)) os << mag;
    os << unit;
    first = false;
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "j");
  term(d_, "k");
  if (first) os << '0';
  return os.str();
}

}  // namespace dlat
