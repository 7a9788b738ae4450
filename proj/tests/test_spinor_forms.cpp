#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "spinrep/spinor_forms.hpp"

using namespace spinrep;
using namespace spinrep::spinor;
using clifford::GammaTag;
using clifford::Multivector;

namespace {

constexpr auto kM = clifford::Signature::Minkowski;

const Quaternion kOne(1, 0, 0, 0), kUnitI(0, 1, 0, 0), kUnitJ(0, 0, 1, 0), kUnitK(0, 0, 0, 1);

bool same(const Quaternion& a, const Quaternion& b, double tol = 0.0) { return boost::math::sup(a - b) <= tol; }

QuaternionMatrix random_matrix(testing::Gen& gen) {
  QuaternionMatrix m;
  for (auto& q : m.entries) q = gen.quaternion();
  return m;
}

}  // namespace

TEST_CASE("quaternion basics") {
  CHECK(same(kUnitI * kUnitJ, kUnitK));
  CHECK(same(kUnitI * kUnitJ * kUnitK, -kOne));
  CHECK(components(make_quaternion(1, 2, 3, 4)) == std::array<double, 4>{1, 2, 3, 4});
  testing::Gen gen(21);
  for (int n = 0; n < 100; ++n) {
    const auto p = gen.quaternion(), q = gen.quaternion();
    CHECK(std::abs(boost::math::abs(p * q) - boost::math::abs(p) * boost::math::abs(q)) <
          1e-12 * boost::math::abs(p) * boost::math::abs(q));
    const auto pc = components(p), qc = components(q);
    CHECK(dot(p, q) == doctest::Approx(pc[0] * qc[0] + pc[1] * qc[1] + pc[2] * qc[2] + pc[3] * qc[3]));
  }
}

TEST_CASE("quaternionic generator matrices") {
  const auto e0 = quaternion_rep_e(0);
  CHECK(same(e0(0, 0), kOne));
  CHECK(same(e0(0, 1), Quaternion()));
  CHECK(same(e0(1, 1), -kOne));
  const auto e1 = quaternion_rep_e(1);
  CHECK(same(e1(0, 1), kUnitI));
  CHECK(same(e1(1, 0), kUnitI));
  CHECK(same(e1(0, 0), Quaternion()));
  CHECK(max_abs_difference(e1 * e1, -1.0 * QuaternionMatrix::identity()) == 0.0);
  CHECK_THROWS_AS(quaternion_rep_e(4), std::out_of_range);
  CHECK_THROWS_AS(quaternion_rep_e(-1), std::out_of_range);

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto a = quaternion_rep_e(mu), b = quaternion_rep_e(nu);
      const double eta = mu == nu ? clifford::metric(kM, mu) : 0.0;
      CHECK(max_abs_difference(a * b + b * a, 2.0 * eta * QuaternionMatrix::identity()) == 0.0);
    }
}

TEST_CASE("complex embedding of quaternions") {
  const auto& g = quaternionic_gammas();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = mu == nu ? clifford::metric(kM, mu) : 0.0;
      CHECK((g[mu] * g[nu] + g[nu] * g[mu] - 2.0 * eta * Matrix4c::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
  testing::Gen gen(22);
  for (int n = 0; n < 50; ++n) {
    const auto p = gen.quaternion(), q = gen.quaternion();
    CHECK((complex_image(p * q) - complex_image(p) * complex_image(q)).cwiseAbs().maxCoeff() < 1e-12 * 16);
    const auto a = random_matrix(gen), b = random_matrix(gen);
    CHECK((complex_image(a * b) - complex_image(a) * complex_image(b)).cwiseAbs().maxCoeff() < 1e-12 * 64);
  }
}

TEST_CASE("operator_from_coeffs") {
  auto op = operator_from_coeffs(1.0, {}, 0.0);
  CHECK(same(op.q1, kOne));
  CHECK(same(op.q2, Quaternion()));
  op = operator_from_coeffs(0.0, {}, 1.0);
  CHECK(same(op.q1, Quaternion()));
  CHECK(same(op.q2, -kOne));
  op = operator_from_coeffs(0.0, {0, 0, 0, 0, 0, 1.0}, 0.0);
  CHECK(same(op.q1, kUnitI));
  CHECK(same(op.q2, Quaternion()));
  // s^{13} = 1 means s^{31} = -1 on the j unit.
  op = operator_from_coeffs(0.0, {0, 0, 0, 0, 1.0, 0}, 0.0);
  CHECK(same(op.q1, -kUnitJ));
  op = operator_from_coeffs(0.0, {1.0, 2.0, 3.0, 0, 0, 0}, 0.0);
  CHECK(same(op.q2, Quaternion(0, 1, 2, 3)));
}

TEST_CASE("even multivectors and the spinor operator") {
  testing::Gen gen(23);
  for (int n = 0; n < 100; ++n) {
    const auto even = gen.even_real();
    const auto op = operator_from_even(even);
    const auto back = even_from_operator(op);
    CHECK((back - even).max_norm() == 0.0);
    for (std::size_t s = 0; s < clifford::kBladeCount; ++s)
      if (clifford::blade_grade(s) % 2 == 1) CHECK(back[s] == Complex(0.0));

    // The displayed matrix is the image conjugated by [e0].
    const auto e0 = quaternion_rep_e(0);
    CHECK(max_abs_difference(operator_matrix(op), e0 * quaternion_image(even) * e0) < 1e-15);
  }
  CHECK_THROWS_AS(operator_from_even(Multivector::basis(kM, 1)), std::invalid_argument);
  CHECK_THROWS_AS(operator_from_even(Multivector::scalar(kM, Complex(0, 1))), std::invalid_argument);
}

TEST_CASE("M(2,H) image is a homomorphism") {
  testing::Gen gen(24);
  for (int n = 0; n < 100; ++n) {
    const auto a = gen.multivector(kM, false), b = gen.multivector(kM, false);
    const double scale = a.norm() * b.norm();
    CHECK(max_abs_difference(quaternion_image(a * b), quaternion_image(a) * quaternion_image(b)) < 1e-12 * scale);
    const Matrix4c via_h = complex_image(quaternion_image(a));
    const Matrix4c via_c = clifford::rep_matrix(a, quaternionic_gammas());
    CHECK((via_h - via_c).cwiseAbs().maxCoeff() < 1e-12 * a.norm());

    const auto x = gen.even_real(), y = gen.even_real();
    const auto ox = operator_matrix(operator_from_even(x)), oy = operator_matrix(operator_from_even(y));
    const auto oxy = operator_matrix(operator_from_even(x * y));
    CHECK(max_abs_difference(oxy, ox * oy) < 1e-12 * x.norm() * y.norm());
  }
  CHECK_THROWS_AS(quaternion_image(Multivector::scalar(kM, Complex(0, 1))), std::invalid_argument);
  CHECK_THROWS_AS(quaternion_image(Multivector::basis(clifford::Signature::Euclidean, 0)), std::invalid_argument);
}

TEST_CASE("classical_from_operator") {
  auto psi = classical_from_operator(operator_from_coeffs(1.0, {}, 0.0));
  CHECK(psi.components == Vector4c(1, 0, 0, 0));
  CHECK(psi.rep == GammaTag::Dirac);
  psi = classical_from_operator(operator_from_coeffs(0.0, {}, 1.0));
  CHECK(psi.components == Vector4c(0, 0, 1, 0));

  // s^{01} = 1: psi3 = p + s^{10} i = -i.  s^{03} = 1: psi4 = s^{02} + s^{30} i = -i.
  psi = classical_from_operator(operator_from_coeffs(0.0, {1, 0, 0, 0, 0, 0}, 0.0));
  CHECK(psi.components == Vector4c(0, 0, Complex(0, -1), 0));
  psi = classical_from_operator(operator_from_coeffs(0.0, {0, 0, 1, 0, 0, 0}, 0.0));
  CHECK(psi.components == Vector4c(0, 0, 0, Complex(0, -1)));
  psi = classical_from_operator(operator_from_coeffs(0.0, {0, 1, 0, 2, 3, 4}, 0.0));
  CHECK(psi.components == Vector4c(Complex(0, 4), Complex(3, 2), 0, Complex(1, 0)));

  testing::Gen gen(25);
  for (int n = 0; n < 100; ++n) {
    const auto op = operator_from_coeffs(gen.real(), gen.six(), gen.real());
    const auto back = operator_from_classical(classical_from_operator(op));
    CHECK(same(back.q1, op.q1, 1e-15));
    CHECK(same(back.q2, op.q2, 1e-15));
    const auto c = gen.spinor(GammaTag::Dirac);
    CHECK((classical_from_operator(operator_from_classical(c)).components - c.components).norm() == 0.0);
  }
}

TEST_CASE("algebraic spinors") {
  auto xi = algebraic_from_classical({Vector4c(1, 0, 0, 0), GammaTag::Dirac});
  Matrix4c expected = Matrix4c::Zero();
  expected(0, 0) = 1.0;
  CHECK(xi.matrix == expected);
  xi = algebraic_from_classical({Vector4c::Zero(), GammaTag::Dirac});
  CHECK(xi.matrix == Matrix4c::Zero());

  const Matrix4c f = clifford::rep_matrix(clifford::idempotent_f(true), clifford::gamma_rep(GammaTag::Dirac));
  testing::Gen gen(26);
  for (int n = 0; n < 100; ++n) {
    const auto psi = gen.spinor(GammaTag::Dirac);
    const auto a = algebraic_from_classical(psi);
    CHECK(a.matrix.rightCols<3>().isZero(0.0));
    CHECK((a.matrix * f - a.matrix).cwiseAbs().maxCoeff() < 1e-15 * psi.norm());
    CHECK(classical_from_algebraic(a).components == psi.components);
  }
  Matrix4c bad = Matrix4c::Zero();
  bad(1, 2) = 1.0;
  CHECK_THROWS_AS(classical_from_algebraic({bad}), std::invalid_argument);
}

TEST_CASE("ideal element in H2") {
  auto m = ideal_element_H2(kOne, Quaternion());
  CHECK(same(m(0, 0), kOne));
  CHECK(same(m(0, 1), Quaternion()));
  CHECK(same(m(1, 0), Quaternion()));
  CHECK(same(m(1, 1), Quaternion()));
  m = ideal_element_H2(kUnitI, kUnitK);
  CHECK(same(m(0, 0), kUnitI));
  CHECK(same(m(1, 0), kUnitK));
  CHECK(same(m(0, 1), Quaternion()));
  CHECK(same(m(1, 1), Quaternion()));

  // Left multiplication by an even element keeps the ideal and acts through operator_matrix.
  testing::Gen gen(27);
  for (int n = 0; n < 50; ++n) {
    const auto a = gen.even_real();
    const auto q1 = gen.quaternion(), q2 = gen.quaternion();
    const auto left = operator_matrix(operator_from_even(a)) * ideal_element_H2(q1, q2);
    CHECK(same(left(0, 1), Quaternion()));
    CHECK(same(left(1, 1), Quaternion()));
    const auto product = operator_from_even(a * even_from_operator({q1, q2}));
    const auto expected_ideal = ideal_element_H2(product.q1, product.q2);
    CHECK(max_abs_difference(left, expected_ideal) < 1e-12 * a.norm() * (boost::math::abs(q1) + boost::math::abs(q2)));
  }
}

TEST_CASE("representation change") {
  testing::Gen gen(28);
  for (int n = 0; n < 50; ++n) {
    const auto psi = gen.spinor(GammaTag::Weyl);
    const auto d = to_representation(psi, GammaTag::Dirac);
    CHECK(d.rep == GammaTag::Dirac);
    const auto back = to_representation(d, GammaTag::Weyl);
    CHECK((back.components - psi.components).norm() < 1e-14 * psi.norm());
    CHECK(to_representation(psi, GammaTag::Weyl).components == psi.components);
  }
}
