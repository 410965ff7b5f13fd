#pragma once

#include <gmpxx.h>

#include <complex>
#include <utility>
#include <vector>

namespace qcov {

using Rat = mpq_class;
using Int = mpz_class;

// Dense univariate polynomial over Q in the indeterminate t = q^(1/2).
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) { coef_.assign(1, c); trim(); }
  Poly(long c) : Poly(Rat(c)) {}
  explicit Poly(std::vector<Rat> coef) : coef_(std::move(coef)) {
    for (auto& c : coef_) c.canonicalize();
    trim();
  }

  static Poly monomial(int k, const Rat& c = Rat(1));

  bool is_zero() const { return coef_.empty(); }
  int deg() const { return static_cast<int>(coef_.size()) - 1; }
  Rat coef(int i) const {
    return (i >= 0 && i < static_cast<int>(coef_.size())) ? coef_[i] : Rat(0);
  }
  const Rat& lc() const { return coef_.back(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return coef_ == o.coef_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // arbitrary total order for map keys

  // Division with remainder; exact_div throws on nonzero remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly exact_div(const Poly& d) const;

  Poly derivative() const;
  Poly monic() const;
  Poly pow(int n) const;

  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& x) const;

  // Monic gcd over Q[t].
  static Poly gcd(Poly f, Poly g);

  // Yun squarefree decomposition of a monic polynomial: f = prod f_i^i with
  // the f_i monic, squarefree and pairwise coprime. Returns (f_i, i) pairs.
  std::vector<std::pair<Poly, int>> squarefree_decomposition() const;

  const std::vector<Rat>& coefs() const { return coef_; }

 private:
  std::vector<Rat> coef_;
  void trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
  }
};

// Squarefree part extraction for integers: n = s^2 * m with m squarefree.
// Returns (s, m); the sign of n stays on m.
std::pair<Int, Int> int_sqfree(const Int& n);

}  // namespace qcov
