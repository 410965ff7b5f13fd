#include "qcov/qscalar.hpp"

#include "qcov/error.hpp"

namespace qcov {

namespace {

// sqrt(R1) * sqrt(R2) = mult * sqrt(R3) with R3 canonical. The branch follows
// the complex principal root: sqrt(-a)*sqrt(-b) = -sqrt(a*b), which also makes
// sqrt(R)^2 = R hold for negative radicands.
void combine_radicands(const Radicand& a, const Radicand& b, RatFun& mult, Radicand& out) {
  Int prod = a.n * b.n;
  auto [s, m] = int_sqfree(prod);
  if (a.n < 0 && b.n < 0) s = -s;
  Poly g = Poly::gcd(a.f, b.f);
  Poly u = a.f.exact_div(g);
  Poly v = b.f.exact_div(g);
  out.n = m;
  out.f = u * v;
  mult = RatFun(g * Poly(Rat(s)));
}

}  // namespace

bool QScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

RatFun QScalar::as_ratfun() const {
  if (terms_.empty()) return RatFun();
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  throw Error("NotRational", "scalar carries a nontrivial radical");
}

void QScalar::add_term(const Radicand& r, const RatFun& c) {
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(r, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

QScalar QScalar::operator-() const {
  QScalar r;
  for (const auto& [rad, c] : terms_) r.terms_.emplace(rad, -c);
  return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
  QScalar r(*this);
  for (const auto& [rad, c] : o.terms_) r.add_term(rad, c);
  return r;
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator*(const QScalar& o) const {
  QScalar r;
  for (const auto& [ra, ca] : terms_)
    for (const auto& [rb, cb] : o.terms_) {
      RatFun mult;
      Radicand rc;
      combine_radicands(ra, rb, mult, rc);
      r.add_term(rc, ca * cb * mult);
    }
  return r;
}

QScalar QScalar::inverse() const {
  if (terms_.empty()) throw ZeroDivision("inverse of zero");
  if (terms_.size() > 1)
    throw MultiTermInverse("inverse of a sum of distinct radicals");
  const auto& [rad, c] = *terms_.begin();
  // (c*sqrt(R))^-1 = sqrt(R)/(c*R)
  QScalar r;
  r.set(rad, (c * rad.value()).inverse());
  return r;
}

QScalar QScalar::classical_limit() const {
  QScalar out;
  for (const auto& [rad, c] : terms_) {
    Rat value = c.at_one();
    Rat radval = rad.f.eval(Rat(1)) * Rat(rad.n);
    if (radval == 0 || value == 0) continue;
    // sqrt(p/s) = sqrt(p*s)/s
    Int p = radval.get_num(), s = radval.get_den();
    auto [sq, m] = int_sqfree(p * s);
    Radicand r;
    r.n = m;
    out.add_term(r, RatFun(value * Rat(sq) / Rat(s)));
  }
  return out;
}

bool QScalar::is_canonically_positive() const {
  if (terms_.empty()) return false;
  return terms_.begin()->second.num().lc() > 0;
}

std::complex<double> QScalar::eval(double t) const {
  std::complex<double> acc(0.0);
  std::complex<double> tc(t);
  for (const auto& [rad, c] : terms_) {
    std::complex<double> rv = rad.f.eval(tc) * std::complex<double>(rad.n.get_d());
    acc += c.eval(tc) * std::sqrt(rv);
  }
  return acc;
}

QScalar formal_sqrt(const RatFun& a) {
  if (a.is_zero()) return QScalar();
  // sqrt(num/den) = sqrt(num*den)/den
  Poly m = a.num() * a.den();
  Rat lc = m.lc();
  Poly mm = m.monic();
  Poly outside(Rat(1)), inside(Rat(1));
  for (const auto& [f, mult] : mm.squarefree_decomposition()) {
    if (mult / 2 > 0) outside = outside * f.pow(mult / 2);
    if (mult % 2) inside = inside * f;
  }
  Int p = lc.get_num(), s = lc.get_den();
  auto [sq, rest] = int_sqfree(abs(p) * s);
  Radicand rad;
  rad.n = (lc < 0) ? -rest : rest;
  rad.f = inside;
  RatFun coef = RatFun(outside * Poly(Rat(sq)), a.den() * Poly(Rat(s)));
  return QScalar(rad, coef);
}

RatFun qint_sl2_rf(int n) {
  if (n == 0) return RatFun();
  if (n < 0) return -qint_sl2_rf(-n);
  // (t^{2n} - t^{-2n})/(t^2 - t^{-2}) = t^2 (t^{4n}-1) / (t^{2n}(t^4-1))
  Poly num = (Poly::monomial(4 * n) - Poly(Rat(1))) * Poly::monomial(2);
  Poly den = (Poly::monomial(4) - Poly(Rat(1))) * Poly::monomial(2 * n);
  return RatFun(num, den);
}

RatFun qint_super_rf(int n) {
  if (n == 0) return RatFun();
  // (t^{-n} - (-1)^n t^n)/(t^{-1} + t) = t (1 - (-1)^n t^{2n}) / (t^n (1 + t^2))
  Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
  Poly num = (Poly(Rat(1)) - Poly::monomial(2 * n, sign)) * Poly::monomial(1);
  Poly den = (Poly(Rat(1)) + Poly::monomial(2)) * Poly::monomial(n);
  return RatFun(num, den);
}

QScalar qint_sl2(int n) { return QScalar(qint_sl2_rf(n)); }
QScalar qint_super(int n) { return QScalar(qint_super_rf(n)); }

QScalar kappa1() {
  // sqrt([4]/(q[2])) with super brackets
  RatFun q = RatFun::t_power(2);
  return formal_sqrt(qint_super_rf(4) / (q * qint_super_rf(2)));
}

QScalar kappa2() { return formal_sqrt(qint_super_rf(3) / RatFun::t_power(2)); }

QScalar kappa3() { return kappa1() * kappa2(); }

RatFun theta_osp() {
  RatFun num = RatFun::t_power(1) + RatFun::t_power(-1);
  RatFun den = RatFun::t_power(8) - RatFun::t_power(-8);
  return num / den;
}

}  // namespace qcov
