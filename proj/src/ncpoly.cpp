#include "dlat/ncpoly.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "dlat/errors.hpp"

namespace dlat {

NCPoly::NCPoly(std::initializer_list<Quaternion> coeffs) : c_(coeffs) { trim(); }

NCPoly::NCPoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { trim(); }

void NCPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool NCPoly::is_monic() const { return !c_.empty() && c_.back() == Quaternion(1); }

const Quaternion& NCPoly::lead() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return c_.back();
}

Quaternion NCPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Quaternion(); }

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Quaternion> out(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
  }
  return NCPoly(std::move(out));
}

NCPoly operator*(const Quaternion& c, const NCPoly& p) {
  std::vector<Quaternion> out;
  out.reserve(p.c_.size());
  for (const auto& x : p.c_) out.push_back(c * x);
  return NCPoly(std::move(out));
}

std::string NCPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Quaternion c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const std::array<const Rational*, 4> parts{&c.real(), &c.i_part(), &c.j_part(), &c.k_part()};
    int terms = 0, sign = 0;
    for (const Rational* r : parts) {
      if (!r->is_zero()) {
        ++terms;
        sign = r->sign();
      }
    }
    // pull the sign of a one-term coefficient out front
    const bool negative = terms == 1 && sign < 0;
    if (negative) c = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (i == 0 || c != Quaternion(1)) {
      if (terms > 1 && (i > 0 || degree() > 0)) os << '(' << c.str() << ')';
      else os << c.str();
    }
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Quaternion eval_right(const NCPoly& p, const Quaternion& alpha) {
  Quaternion acc;
  Quaternion power(1);
  for (const auto& c : p.coeffs()) {
    acc += c * power;
    power = power * alpha;
  }
  return acc;
}

namespace {

// Right division by any nonzero divisor: p = q * d + r.
RightDivision divmod(const NCPoly& p, const NCPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  Quaternion lead_inv = inverse(d.lead());
  std::vector<Quaternion> quot(p.degree() >= d.degree() ? p.degree() - d.degree() + 1 : 0);
  NCPoly rem = p;
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    Quaternion c = rem.lead() * lead_inv;
    quot[shift] += c;
    std::vector<Quaternion> term(shift + d.coeffs().size());
    for (std::size_t i = 0; i < d.coeffs().size(); ++i) term[shift + i] = c * d.coeffs()[i];
    int before = rem.degree();
    rem -= NCPoly(std::move(term));
    if (!rem.is_zero() && rem.degree() >= before) {
      throw InvariantViolation("right division failed to cancel the leading term");
    }
  }
  return {NCPoly(std::move(quot)), rem};
}

}  // namespace

RightDivision right_divide(const NCPoly& p, const NCPoly& d) {
  if (!d.is_monic()) throw PreconditionError("right_divide: divisor must be monic and nonzero");
  return divmod(p, d);
}

bool divides_right(const NCPoly& d, const NCPoly& p) { return right_divide(p, d).remainder.is_zero(); }

NCPoly monicize(const NCPoly& p) { return inverse(p.lead()) * p; }

NCPoly gcrd(const NCPoly& p, const NCPoly& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcrd: both arguments are zero");
  NCPoly a = p;
  NCPoly b = q;
  while (!b.is_zero()) {
    NCPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monicize(a);
}

NCPoly lclm(const NCPoly& p, const NCPoly& q) {
  if (!p.is_monic() || !q.is_monic()) throw PreconditionError("lclm: arguments must be monic");
  // Extended Euclid on right remainders, tracking the left cofactor of p:
  // u_i * p + v_i * q = r_i. When r_{n+1} = 0, u_{n+1} * p is the lclm.
  NCPoly r0 = p, r1 = q;
  NCPoly u0 = NCPoly::one(), u1;
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    NCPoly u2 = u0 - quot * u1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (u1.is_zero()) throw InvariantViolation("lclm: vanishing cofactor");
  return monicize(u1 * p);
}

NCPoly lclm_linear(const NCPoly& p, const Quaternion& alpha) {
  if (!p.is_monic()) throw PreconditionError("lclm_linear: polynomial must be monic");
  Quaternion c = eval_right(p, alpha);
  if (c.is_zero()) return p;
  return NCPoly::linear(conjugate_by(alpha, c)) * p;
}

NCPoly wedderburn(std::span<const Quaternion> s) {
  NCPoly f = NCPoly::one();
  for (const auto& x : s) f = lclm_linear(f, x);
  return f;
}

}  // namespace dlat
