#pragma once

#include <array>
#include <ostream>
#include <string>

#include "dlat/rational.hpp"

namespace dlat {

/// Quaternion a + b i + c j + d k over exact rationals.
///
/// This is the division ring all polynomial work runs over. Multiplication
/// follows i^2 = j^2 = k^2 = ijk = -1 and is not commutative.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational real) : a_(std::move(real)) {}  // NOLINT: scalars embed as reals
  Quaternion(long real) : a_(real) {}                 // NOLINT
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& real() const { return a_; }
  const Rational& i_part() const { return b_; }
  const Rational& j_part() const { return c_; }
  const Rational& k_part() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_real() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  /// a^2 + b^2 + c^2 + d^2.
  Rational norm() const;
  Quaternion conj() const { return {a_, -b_, -c_, -d_}; }

  Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  /// Lexicographic on (a, b, c, d); only meaningful as a container key.
  friend auto operator<=>(const Quaternion&, const Quaternion&) = default;

  /// The four components as "num/den" strings (denominator dropped when 1).
  std::array<std::string, 4> to_strings() const;
  static Quaternion from_strings(const std::array<std::string, 4>& parts);

  /// Human readable form such as "1 - 1/2i + k".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

 private:
  Rational a_, b_, c_, d_;
};

/// Multiplicative inverse; throws DivisionByZero on 0.
Quaternion inverse(const Quaternion& x);

/// c * x * c^-1.
Quaternion conjugate_by(const Quaternion& x, const Quaternion& c);

}  // namespace dlat
