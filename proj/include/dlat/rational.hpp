#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlat {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and operator
/// leaves the value canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit from integers is intended
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "n", "-n" or "n/d" with arbitrary-size integers.
  static Rational parse(std::string_view text);

  std::string str() const;
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace dlat
