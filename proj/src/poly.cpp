#include "qcov/poly.hpp"

#include "qcov/error.hpp"

namespace qcov {

Poly Poly::monomial(int k, const Rat& c) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coef_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(coef_.size(), o.coef_.size()), Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i) v[i] = coef_[i];
  for (size_t i = 0; i < o.coef_.size(); ++i) v[i] += o.coef_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(coef_.size() + o.coef_.size() - 1, Rat(0));
  for (size_t i = 0; i < coef_.size(); ++i)
    for (size_t j = 0; j < o.coef_.size(); ++j) v[i + j] += coef_[i] * o.coef_[j];
  return Poly(std::move(v));
}

bool Poly::operator<(const Poly& o) const {
  if (coef_.size() != o.coef_.size()) return coef_.size() < o.coef_.size();
  for (size_t i = coef_.size(); i-- > 0;) {
    int c = cmp(coef_[i], o.coef_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ZeroDivision("polynomial division by zero");
  Poly r(*this);
  std::vector<Rat> q(deg() >= d.deg() ? deg() - d.deg() + 1 : 0, Rat(0));
  while (!r.is_zero() && r.deg() >= d.deg()) {
    int k = r.deg() - d.deg();
    Rat c = r.lc() / d.lc();
    q[k] = c;
    r = r - Poly::monomial(k, c) * d;
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error("InexactDivision", "polynomial division not exact");
  return q;
}

Poly Poly::derivative() const {
  if (coef_.size() <= 1) return Poly();
  std::vector<Rat> v(coef_.size() - 1);
  for (size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r(*this);
  Rat inv = Rat(1) / lc();
  for (auto& c : r.coef_) c *= inv;
  return r;
}

Poly Poly::pow(int n) const {
  Poly r(Rat(1)), b(*this);
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    b = b * b;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = coef_.size(); i-- > 0;) r = r * x + coef_[i];
  return r;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
  std::complex<double> r(0.0);
  for (size_t i = coef_.size(); i-- > 0;) r = r * x + coef_[i].get_d();
  return r;
}

Poly Poly::gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = f.divmod(g).second;
    f = std::move(g);
    g = std::move(r).monic();
  }
  return f.is_zero() ? f : f.monic();
}

std::vector<std::pair<Poly, int>> Poly::squarefree_decomposition() const {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic();
  if (f.deg() <= 0) return out;
  Poly fp = f.derivative();
  Poly g = gcd(f, fp);
  if (g.deg() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  Poly w = f.exact_div(g);
  Poly y = fp.exact_div(g);
  Poly z = y - w.derivative();
  int i = 1;
  while (w.deg() > 0) {
    Poly gi = gcd(w, z);
    if (gi.deg() > 0) out.emplace_back(gi, i);
    w = w.exact_div(gi);
    y = z.exact_div(gi);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::pair<Int, Int> int_sqfree(const Int& n) {
  if (n == 0) return {Int(1), Int(0)};
  Int m = abs(n), s = 1, rest = 1;
  for (Int p = 2; p * p <= m;) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (int k = 0; k < e / 2; ++k) s *= p;
      if (e % 2) rest *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  rest *= m;  // leftover prime
  if (n < 0) rest = -rest;
  return {s, rest};
}

}  // namespace qcov
