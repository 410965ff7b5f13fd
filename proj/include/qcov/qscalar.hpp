#pragma once

#include <map>

#include "qcov/ratfun.hpp"

namespace qcov {

// Canonical radicand: a squarefree integer n times a monic squarefree
// polynomial f in t. (1, 1) tags the rational part of a QScalar. In every
// computation the paper needs n stays positive; negative n is representable
// so that formal roots of sign-indefinite rational functions still satisfy
// sqrt(R)^2 = R.
struct Radicand {
  Int n = 1;
  Poly f = Poly(Rat(1));

  bool is_one() const { return n == 1 && f.deg() == 0; }
  RatFun value() const { return RatFun(f * Poly(Rat(n))); }
  bool operator<(const Radicand& o) const {
    if (n != o.n) return n < o.n;
    return f < o.f;
  }
  bool operator==(const Radicand& o) const { return n == o.n && f == o.f; }
};

// Element of Q(t)[sqrt(R_1), sqrt(R_2), ...]: a finite sum of rational
// functions times formal square roots of canonical radicands.
class QScalar {
 public:
  QScalar() = default;
  QScalar(const Rat& c) { set(Radicand{}, RatFun(c)); }
  QScalar(long c) : QScalar(Rat(c)) {}
  explicit QScalar(const RatFun& c) { set(Radicand{}, c); }
  QScalar(const Radicand& r, const RatFun& c) { set(r, c); }

  static QScalar q_power(int half_exp) { return QScalar(RatFun::t_power(half_exp)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_single_term() const { return terms_.size() == 1; }

  // The rational-function value of a radical-free element.
  RatFun as_ratfun() const;

  QScalar operator-() const;
  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  bool operator==(const QScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  bool operator<(const QScalar& o) const { return terms_ < o.terms_; }

  // Inverse of a single-term element c*sqrt(R). Throws ZeroDivision on zero
  // and MultiTermInverse on sums of distinct radicals.
  QScalar inverse() const;
  QScalar operator/(const QScalar& o) const { return *this * o.inverse(); }

  // The square; always radical-free per term pair collapse.
  QScalar squared() const { return *this * *this; }

  // Exact evaluation at q = 1. The result is a constant element (rational
  // combination of integer radicals). Throws PoleAtOne.
  QScalar classical_limit() const;

  // True when the canonical sign convention holds: the leading term's
  // numerator has positive leading coefficient.
  bool is_canonically_positive() const;

  std::complex<double> eval(double t) const;

  const std::map<Radicand, RatFun>& terms() const { return terms_; }

 private:
  std::map<Radicand, RatFun> terms_;
  void set(const Radicand& r, const RatFun& c) {
    if (!c.is_zero()) terms_[r] = c;
  }
  void add_term(const Radicand& r, const RatFun& c);
};

// Formal square root of a rational function, canonicalized: square factors
// are extracted into the coefficient and the denominator is cleared from
// under the radical. sqrt(0) = 0.
QScalar formal_sqrt(const RatFun& a);

// Symmetric sl(2) q-integer (q^n - q^-n)/(q - q^-1) as an exact scalar.
QScalar qint_sl2(int n);
// Super q-bracket of Eq-style [n] = (q^{-n/2} - (-1)^n q^{n/2})/(q^{-1/2}+q^{1/2}).
QScalar qint_super(int n);
RatFun qint_sl2_rf(int n);
RatFun qint_super_rf(int n);

// The radial constants of the osp corepresentation fixtures.
QScalar kappa1();
QScalar kappa2();
QScalar kappa3();
// Theta = (q^{1/2}+q^{-1/2})/(q^4-q^{-4}); the osp representation scale.
RatFun theta_osp();

}  // namespace qcov
