#pragma once

#include "qcov/poly.hpp"

namespace qcov {

// Rational function in t = q^(1/2) over Q, kept in canonical form:
// gcd(num, den) = 1 and den monic. Zero is 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
  RatFun(Poly num, Poly den = Poly(Rat(1)));

  static RatFun t_power(int k);  // t^k, k may be negative

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.deg() == 0 && num_ == Poly(Rat(1)); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
  bool operator<(const RatFun& o) const {
    if (!(num_ == o.num_)) return num_ < o.num_;
    return den_ < o.den_;
  }

  RatFun inverse() const;

  // Exact value at t = 1; throws PoleAtOne when the reduced denominator
  // vanishes there.
  Rat at_one() const;
  bool has_pole_at_one() const;

  std::complex<double> eval(const std::complex<double>& t) const;

 private:
  Poly num_, den_;
};

}  // namespace qcov
