#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dlat/quaternion.hpp"

namespace dlat {

/// Polynomial p0 + p1 t + ... + pk t^k with quaternion coefficients and a
/// central variable t. Coefficient i multiplies t^i. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients.
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(std::initializer_list<Quaternion> coeffs);
  explicit NCPoly(std::vector<Quaternion> coeffs);

  static NCPoly constant(const Quaternion& c) { return NCPoly({c}); }
  static NCPoly one() { return constant(Quaternion(1)); }
  /// t - alpha.
  static NCPoly linear(const Quaternion& alpha) { return NCPoly({-alpha, Quaternion(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  const Quaternion& lead() const;
  /// Coefficient of t^i; zero past the degree.
  Quaternion coeff(std::size_t i) const;
  std::span<const Quaternion> coeffs() const { return c_; }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
  /// c * p (coefficients scaled on the left).
  friend NCPoly operator*(const Quaternion& c, const NCPoly& p);

  friend bool operator==(const NCPoly&, const NCPoly&) = default;
  friend auto operator<=>(const NCPoly& a, const NCPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.c_ <=> b.c_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Quaternion> c_;
};

/// p(alpha) = sum p_i alpha^i, powers of alpha on the right of coefficients.
Quaternion eval_right(const NCPoly& p, const Quaternion& alpha);

struct RightDivision {
  NCPoly quotient;
  NCPoly remainder;
};

/// p = quotient * d + remainder with deg remainder < deg d. d must be monic.
RightDivision right_divide(const NCPoly& p, const NCPoly& d);

/// True iff d right-divides p. d must be monic.
bool divides_right(const NCPoly& d, const NCPoly& p);

/// Left-multiplies by the inverse of the leading coefficient.
NCPoly monicize(const NCPoly& p);

/// Greatest common right divisor (monic). Throws if both are zero.
NCPoly gcrd(const NCPoly& p, const NCPoly& q);

/// Least common left multiple of two monic polynomials (monic).
NCPoly lclm(const NCPoly& p, const NCPoly& q);

/// lclm(p, t - alpha) for monic p.
NCPoly lclm_linear(const NCPoly& p, const Quaternion& alpha);

/// Minimal monic polynomial vanishing on every element of s. Elements on
/// which the running polynomial already vanishes are skipped.
NCPoly wedderburn(std::span<const Quaternion> s);

}  // namespace dlat
