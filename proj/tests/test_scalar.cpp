#include <complex>
#include <random>

#include "doctest.h"
#include "qcov/error.hpp"
#include "qcov/qscalar.hpp"
#include "qcov/scalar_io.hpp"

using namespace qcov;

namespace {

struct Rng {
  std::mt19937_64 g{20240817};
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
  }
  Rat rat() {
    Rat r(uniform(-6, 6));
    return r / uniform(1, 5);
  }
  Poly poly(int maxdeg, bool positive = false) {
    std::vector<Rat> c(uniform(0, maxdeg) + 1);
    for (auto& x : c) x = positive ? Rat(uniform(1, 5)) : rat();
    Poly p{std::move(c)};
    return p.is_zero() ? Poly(Rat(1)) : p;
  }
  RatFun ratfun() {
    Poly den = poly(2, true);
    return RatFun(poly(3), den);
  }
  // Radicands with positive coefficients stay positive on t > 0, so float
  // checks avoid branch cuts.
  QScalar scalar() {
    QScalar s(ratfun());
    if (uniform(0, 1)) s += formal_sqrt(RatFun(poly(2, true))) * QScalar(ratfun());
    return s;
  }
};

}  // namespace

TEST_CASE("coeff field: spec examples") {
  QScalar qhalf = QScalar::q_power(1);
  CHECK((qhalf + QScalar(1) + QScalar(-1)) == qhalf);

  QScalar k2 = kappa2();
  QScalar k2sq = k2 * k2;
  CHECK(k2sq == QScalar(qint_super_rf(3) / RatFun::t_power(2)));

  CHECK(kappa1() * kappa2() == kappa3());

  CHECK(qhalf.inverse() == QScalar::q_power(-1));

  QScalar two_sqrt_q = QScalar(2) * formal_sqrt(RatFun::t_power(2));
  CHECK(two_sqrt_q.inverse() == parse_scalar("1/2*q^(-1/2)"));

  CHECK_THROWS_AS(QScalar().inverse(), ZeroDivision);
  CHECK_THROWS_AS((QScalar(1) + formal_sqrt(RatFun(Rat(2)))).inverse(), MultiTermInverse);

  // formal_sqrt canonicalization
  CHECK(formal_sqrt(RatFun::t_power(4)) == QScalar::q_power(2));
  CHECK(formal_sqrt(RatFun::t_power(2)) == QScalar::q_power(1));
  CHECK(formal_sqrt(RatFun()).is_zero());

  // qint values
  CHECK(qint_sl2(0).is_zero());
  CHECK(qint_sl2(1).is_one());
  CHECK(qint_sl2(2) == parse_scalar("q + q^(-1)"));
  CHECK(qint_super(0).is_zero());
  CHECK(qint_super(1).is_one());
  CHECK(qint_super(2) == parse_scalar("q^(-1/2) - q^(1/2)"));
}

TEST_CASE("coeff field: classical limits") {
  CHECK(qint_super(2).classical_limit().is_zero());
  CHECK((QScalar::q_power(2) - QScalar::q_power(-2)).classical_limit().is_zero());
  QScalar pole(RatFun(Poly(Rat(1)), Poly::monomial(2) - Poly(Rat(1))));
  CHECK_THROWS_AS(pole.classical_limit(), PoleAtOne);
  for (int n = 0; n <= 8; ++n) {
    QScalar lim = qint_super(n).classical_limit();
    if (n % 2 == 0)
      CHECK(lim.is_zero());
    else
      CHECK(lim.is_one());
  }
  for (int n = 0; n <= 6; ++n)
    CHECK(qint_sl2(n).classical_limit() == QScalar(n));
}

TEST_CASE("coeff field: field axioms on randomized samples") {
  Rng rng;
  int inverse_cases = 0;
  for (int iter = 0; iter < 1100; ++iter) {
    QScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + QScalar()) == a);
    CHECK((a * QScalar(1)) == a);
    CHECK((a - a).is_zero());
    if (a.is_single_term()) {
      CHECK((a * a.inverse()).is_one());
      ++inverse_cases;
    }
  }
  CHECK(inverse_cases > 100);
}

TEST_CASE("coeff field: sqrt squares back to radicand") {
  Rng rng;
  for (int iter = 0; iter < 300; ++iter) {
    RatFun f = rng.ratfun();
    QScalar s = formal_sqrt(f);
    CHECK(s * s == QScalar(f));
  }
}

TEST_CASE("coeff field: print/parse round trip") {
  Rng rng;
  for (int iter = 0; iter < 300; ++iter) {
    QScalar a = rng.scalar();
    CHECK(parse_scalar(to_string(a)) == a);
  }
  CHECK(to_string(QScalar()) == "0");
  CHECK(to_string(QScalar::q_power(1)) == "q^(1/2)");
  CHECK(to_string(QScalar::q_power(-3)) == "q^(-3/2)");
  CHECK(parse_scalar("sqrt(4*q^2)") == parse_scalar("2*q"));
  CHECK(parse_scalar(to_string(kappa3())) == kappa3());
}

TEST_CASE("coeff field: numeric consistency at random rational q") {
  Rng rng;
  std::mt19937_64 g{7};
  int done = 0;
  while (done < 20) {
    int num = std::uniform_int_distribution<int>(1, 31)(g);
    if (num == 16) continue;  // q = 1 excluded
    double q = num / 16.0;
    double t = std::sqrt(q);
    QScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    // same expression tree, exact vs float
    QScalar exact = (a + b) * c - a * b;
    std::complex<double> approx = (a.eval(t) + b.eval(t)) * c.eval(t) - a.eval(t) * b.eval(t);
    std::complex<double> ev = exact.eval(t);
    double scale = std::max(1.0, std::abs(ev));
    CHECK(std::abs(ev - approx) / scale < 1e-9);
    ++done;
  }
}
