#include "qcov/ratfun.hpp"

#include "qcov/error.hpp"

namespace qcov {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.deg() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  Rat lc = den.lc();
  den_ = den.monic();
  Rat inv = Rat(1) / lc;
  std::vector<Rat> v = num.coefs();
  for (auto& c : v) c *= inv;
  num_ = Poly(std::move(v));
}

RatFun RatFun::t_power(int k) {
  if (k >= 0) return RatFun(Poly::monomial(k));
  return RatFun(Poly(Rat(1)), Poly::monomial(-k));
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw ZeroDivision("rational function division by zero");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero rational function");
  return RatFun(den_, num_);
}

bool RatFun::has_pole_at_one() const { return den_.eval(Rat(1)) == 0; }

Rat RatFun::at_one() const {
  Rat d = den_.eval(Rat(1));
  if (d == 0) throw PoleAtOne("denominator vanishes at q = 1");
  return num_.eval(Rat(1)) / d;
}

std::complex<double> RatFun::eval(const std::complex<double>& t) const {
  return num_.eval(t) / den_.eval(t);
}

}  // namespace qcov
