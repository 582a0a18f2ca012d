#include "support.hpp"

#include "qrr/errors.hpp"
#include "qrr/expoly/time_point.hpp"

#include <doctest.h>

using namespace qrr;
using namespace qrr::testing;

namespace {

double value_at(const ExpPolynomial& f, double t) {
  Rational q(t);
  RealInterval v = f.evaluate_real(q, 128);
  return (v.lo().to_double() + v.hi().to_double()) / 2;
}

const SymbolicState& qc1_state() {
  static SymbolicState st = closed_form_solution(load_model(model_path("qc1_bell.json")));
  return st;
}

}  // namespace

TEST_CASE("characteristic polynomial and squarefree part") {
  CMatrix m(2, 2);
  m(0, 0) = cr(2);
  m(0, 1) = cr(1);
  m(1, 1) = cr(2);
  CPoly p = characteristic_polynomial(m);
  // (x - 2)^2
  CHECK(p == CPoly({cr(4), cr(-4), cr(1)}));
  CHECK(squarefree_part(p) == CPoly({cr(-2), cr(1)}));
  CHECK(!evaluate_at_matrix(squarefree_part(p), m).is_zero());  // Jordan block
  CMatrix d(2, 2);
  d(0, 0) = cr(0, 1);
  d(1, 1) = cr(0, -1);
  CHECK(characteristic_polynomial(d) == CPoly({cr(1), cr(0), cr(1)}));
  CPoly q, r;
  divmod(CPoly({cr(-1), cr(0), cr(1)}), CPoly({cr(-1), cr(1)}), q, r);
  CHECK(q == CPoly({cr(1), cr(1)}));
  CHECK(r.is_zero());
}

TEST_CASE("defective generators are rejected") {
  GoverningMatrix gm;
  gm.dim = 2;
  gm.M = CMatrix(4, 4);
  gm.M(0, 0) = gm.M(1, 1) = cr(-1);
  gm.M(0, 1) = cr(1);
  CHECK_THROWS_AS(closed_form_solution(gm, CMatrix::identity(2), {}), DefectiveGenerator);
}

TEST_CASE("exp-polynomial canonical form, derivative and exact zeros") {
  ExpPolynomial f = ep(Rational(1, 8), 0, 0) - ep(Rational(1, 8), -4, 0);
  CHECK(f.size() == 2);
  CHECK((f - f).zero_test());
  CHECK(f.derivative() == ep(Rational(1, 2), -4, 0));
  CHECK(f.eval_sign_at(Rational(0)) == Sign::Zero);
  CHECK(f.eval_sign_at(Rational(1, 2)) == Sign::Positive);
  CHECK(f.eval_sign_at(Rational(-1, 2)) == Sign::Negative);
  ExpPolynomial g = ep(Rational(1), 0, 1) + ep(Rational(1), 0, -1);  // 2 cos t
  CHECK(g.real_part() == g);
  CHECK(g.imag_part().zero_test());
  CHECK(g.eval_sign_at(Rational(1)) == Sign::Positive);
  CHECK(g.eval_sign_at(Rational(2)) == Sign::Negative);
  // products collect equal exponents
  CHECK(pow(ep(Rational(1), -1, 0), 3) == ep(Rational(1), -3, 0));
}

TEST_CASE("closed form on the QC1 dynamics matches the hand-written trajectory") {
  const SymbolicState& st = qc1_state();
  ReferenceQc1 ref = reference_qc1();
  CHECK(st.exact);
  CHECK(st.at(0, 0) == ref.r00);
  CHECK(st.at(0, 3) == ref.r03);
  CHECK(st.at(3, 0) == ref.r30);
  CHECK(st.at(3, 3) == ref.r33);
  for (auto [i, j] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) CHECK(st.at(i, j) == ref.r11);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}})
    CHECK(st.at(i, j).zero_test());
  QctmcModel m = load_model(model_path("qc1_bell.json"));
  auto x = observables(m, st);
  REQUIRE(x.size() == 4);
  CHECK(x[0] == ref.x1);
  CHECK(x[1] == ref.x2);
  CHECK(x[2] == ref.x3);
  CHECK(x[3] == ref.x4);
  CHECK(x[1] - x[0] * x[0] == ref.phi);
  CHECK(ref.phi.size() == 9);
}

TEST_CASE("closed form agrees with RK4 integration of the operator equation") {
  QctmcModel m = load_model(model_path("qc1_bell.json"));
  const SymbolicState& st = qc1_state();
  for (double t : {0.25, 0.7, 1.3, 2.0}) {
    DMat rho = integrate_rk4(m, t);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        ComplexInterval v = st.at(i, j).evaluate(Rational(t), 128);
        double re = (v.re.lo().to_double() + v.re.hi().to_double()) / 2;
        double im = (v.im.lo().to_double() + v.im.hi().to_double()) / 2;
        CHECK(std::abs(CD(re, im) - rho[i][j]) < 1e-10);
      }
  }
}

TEST_CASE("literal QC1 needs the certified numeric fallback") {
  QctmcModel m = load_model(model_path("qc1.json"));
  CHECK_THROWS_AS(closed_form_solution(m), EigenvalueNotGaussianRational);
  ClosedFormOptions o;
  o.allow_fallback = true;
  SymbolicState st = closed_form_solution(m, o);
  CHECK(!st.exact);
  DMat rho = integrate_rk4(m, 1.0L);
  for (std::size_t i = 0; i < 4; ++i) {
    RealInterval v = st.at(i, i).evaluate_real(Rational(1), 128);
    CHECK(v.lo().to_double() <= static_cast<double>(rho[i][i].real()) + 1e-10);
    CHECK(v.hi().to_double() >= static_cast<double>(rho[i][i].real()) - 1e-10);
    CHECK(v.width() < 1e-12);
  }
}

TEST_CASE("ODE residual vanishes exactly on random solvable models") {
  std::mt19937_64 rng(20240611);
  int solved = 0;
  for (int k = 0; k < 10; ++k) {
    QctmcModel m = random_solvable_model(rng, k % 2 ? 2 : 1);
    REQUIRE(validate_model(m).ok());
    SymbolicState st = closed_form_solution(m);
    for (auto& r : lindblad_residual(m, st)) CHECK(r.zero_test());
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) CHECK(at_zero(st.at(i, j)) == m.rho0(i, j));
    ++solved;
  }
  CHECK(solved == 10);
}

TEST_CASE("sup_abs_bound is never exceeded on a dense grid") {
  ReferenceQc1 ref = reference_qc1();
  std::mt19937_64 rng(7);
  std::vector<ExpPolynomial> fs = {ref.phi, ref.phi.derivative(), ref.phi.derivative().derivative()};
  std::uniform_int_distribution<int> c(-9, 9), e(-5, 2), w(-4, 4);
  for (int k = 0; k < 10; ++k) {
    ExpPolynomial f;
    for (int j = 0; j < 4; ++j) {
      long a = e(rng), b = w(rng);
      Rational beta = ratio(c(rng), 4);
      f += ep(beta, a, b) + ep(beta, a, -b);
    }
    fs.push_back(f);
  }
  TimeBox box{Rational(0), Rational(5, 2)};
  for (auto& f : fs) {
    Rational bound = sup_abs_bound(f, box);
    double b = to_double(bound);
    double worst = 0;
    for (int k = 0; k <= 1000; ++k) worst = std::max(worst, std::abs(value_at(f, 2.5 * k / 1000)));
    CHECK(worst <= b);
  }
  // Tight on the observing expression's derivatives at t = 0.
  CHECK(std::abs(value_at(ref.phi.derivative(), 0) - 3.5) < 1e-15);
  CHECK(std::abs(value_at(ref.phi.derivative().derivative(), 0) + 10.5) < 1e-15);
}

TEST_CASE("centred-form enclosure contains point values") {
  DerivBundle d(reference_qc1().phi);
  for (auto [a, b] : {std::pair{Rational(0), Rational(1, 4)}, {Rational(1), Rational(3, 2)}}) {
    RealInterval e = d.enclose(a, b, 64);
    for (int k = 0; k <= 20; ++k) {
      Rational t = a + (b - a) * ratio(k, 20);
      RealInterval v = d.f().evaluate_real(t, 64);
      CHECK(e.lo().to_double() <= v.lo().to_double());
      CHECK(e.hi().to_double() >= v.hi().to_double());
    }
  }
}

TEST_CASE("time points order roots and rationals") {
  auto f = std::make_shared<const RootFunction>(reference_qc1().phi);
  auto c1 = std::make_shared<RootCell>(f, Rational(789, 800), Rational(1581, 1600), Sign::Negative);
  auto c2 = std::make_shared<RootCell>(f, Rational(39, 25), Rational(2499, 1600), Sign::Positive);
  TimePoint l1 = TimePoint::root(c1), l2 = TimePoint::root(c2);
  CHECK(l1 < l2);
  CHECK(TimePoint(Rational(49, 50)) < l1);
  CHECK(l1 < TimePoint(Rational(99, 100)));
  CHECK(l2 < TimePoint(Rational(1561, 1000)));
  CHECK(compare(l2 + Rational(-1), TimePoint(Rational(1, 2))) > 0);
  // Another bracket of the same root, from a scaled copy of the function.
  auto g = std::make_shared<const RootFunction>(ComplexRational(-3) * reference_qc1().phi);
  auto c3 = std::make_shared<RootCell>(g, Rational(49, 50), Rational(1), Sign::Positive);
  CHECK(compare(TimePoint::root(c3), l1) == 0);
  REQUIRE(l2.refine_to(pow2(-40)));
  CHECK(std::abs(l2.approx() - kLambda2) < 1e-11);
  CHECK(sign_at(*f, l1) == Sign::Zero);
  auto h = std::make_shared<const RootFunction>(reference_qc1().x2);
  CHECK(sign_at(*h, l1) == Sign::Positive);
}
