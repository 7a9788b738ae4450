#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "spinrep/clifford.hpp"

using namespace spinrep;
using namespace spinrep::clifford;

namespace {

constexpr auto kM = Signature::Minkowski;
constexpr auto kE = Signature::Euclidean;

Multivector mv(Signature sig, std::initializer_list<std::pair<std::size_t, Complex>> terms) {
  Multivector m(sig);
  for (auto [slot, value] : terms) m[slot] = value;
  return m;
}

double max_diff(const Multivector& a, const Multivector& b) { return (a - b).max_norm(); }

double rel_diff(const Matrix4c& a, const Matrix4c& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("blade layout") {
  CHECK(blade_name(0) == "1");
  CHECK(blade_name(5) == "e01");
  CHECK(blade_name(10) == "e23");
  CHECK(blade_name(14) == "e123");
  CHECK(blade_name(15) == "e0123");
  for (std::size_t slot = 0; slot < kBladeCount; ++slot) CHECK(blade_slot(blade_mask(slot)) == slot);
  int previous = 0;
  for (std::size_t slot = 0; slot < kBladeCount; ++slot) {
    CHECK(blade_grade(slot) >= previous);
    previous = blade_grade(slot);
  }
  CHECK(bivector_slot(0, 1) == 5);
  CHECK(bivector_slot(2, 3) == 10);
  CHECK_THROWS_AS(bivector_slot(1, 0), std::out_of_range);
  CHECK(signature_from_string("euclidean") == kE);
  CHECK_THROWS_AS(signature_from_string("lorentz"), std::invalid_argument);
}

TEST_CASE("geometric product examples") {
  const auto e0 = Multivector::basis(kM, 0);
  const auto e1 = Multivector::basis(kM, 1);
  CHECK(max_diff(e0 * e0, Multivector::scalar(kM, 1.0)) == 0.0);
  CHECK(max_diff(e1 * e1, Multivector::scalar(kM, -1.0)) == 0.0);
  CHECK((e0 * e1 + e1 * e0).is_zero());
  CHECK((e0 * e1)[5] == Complex(1.0));
  CHECK((e1 * e0)[5] == Complex(-1.0));
  CHECK_THROWS_AS(e0 * Multivector::basis(kE, 0), std::invalid_argument);
}

TEST_CASE("generator relations hold exactly") {
  for (auto sig : {kM, kE}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        const auto a = Multivector::basis(sig, mu);
        const auto b = Multivector::basis(sig, nu);
        const double eta = mu == nu ? metric(sig, mu) : 0.0;
        CHECK((a * b + b * a - Multivector::scalar(sig, 2.0 * eta)).is_zero());
      }
    }
  }
}

TEST_CASE("pseudoscalar square") {
  const auto m5 = Multivector::pseudoscalar(kM);
  const auto e5 = Multivector::pseudoscalar(kE);
  CHECK(max_diff(m5 * m5, Multivector::scalar(kM, -1.0)) == 0.0);
  CHECK(max_diff(e5 * e5, Multivector::scalar(kE, 1.0)) == 0.0);
}

TEST_CASE("quaternion units from bivectors") {
  const auto i = Multivector::blade(kM, {2, 3});
  const auto j = Multivector::blade(kM, {3, 1});
  const auto k = Multivector::blade(kM, {1, 2});
  const auto minus_one = Multivector::scalar(kM, -1.0);
  CHECK(max_diff(i * i, minus_one) == 0.0);
  CHECK(max_diff(j * j, minus_one) == 0.0);
  CHECK(max_diff(k * k, minus_one) == 0.0);
  CHECK(max_diff(i * j, k) == 0.0);
  CHECK(max_diff(i * j * k, minus_one) == 0.0);
}

TEST_CASE("reversion examples") {
  const auto one_plus_e0 = mv(kM, {{0, 1.0}, {1, 1.0}});
  CHECK(max_diff(reversion(one_plus_e0), one_plus_e0) == 0.0);
  const auto e01 = Multivector::blade(kM, {0, 1});
  CHECK(max_diff(reversion(e01), Multivector::blade(kM, {1, 0})) == 0.0);
  CHECK(max_diff(reversion(e01), -e01) == 0.0);
  const auto e5 = Multivector::pseudoscalar(kM);
  CHECK(max_diff(reversion(e5), e5) == 0.0);
}

TEST_CASE("grade projection") {
  const auto a = mv(kM, {{0, 3.0}, {1, 1.0}, {5, 2.0}});
  CHECK(max_diff(grade_projection(a, 0), Multivector::scalar(kM, 3.0)) == 0.0);
  CHECK(max_diff(grade_projection(a, 2), mv(kM, {{5, 2.0}})) == 0.0);
  CHECK_THROWS_AS(grade_projection(a, 5), std::out_of_range);
  CHECK_THROWS_AS(grade_projection(a, -1), std::out_of_range);

  testing::Gen gen(11);
  for (int n = 0; n < 100; ++n) {
    const auto r = gen.multivector(n % 2 ? kE : kM);
    Multivector sum(r.signature());
    for (int k = 0; k <= 4; ++k) {
      const auto part = grade_projection(r, k);
      for (std::size_t s = 0; s < kBladeCount; ++s)
        if (blade_grade(s) != k) CHECK(part[s] == Complex(0.0));
      sum += part;
    }
    CHECK(max_diff(sum, r) == 0.0);
  }
}

TEST_CASE("adjoint dagger") {
  const auto e0 = Multivector::basis(kM, 0);
  const auto e1 = Multivector::basis(kM, 1);
  CHECK(max_diff(adjoint_dagger(e0), e0) == 0.0);
  CHECK(max_diff(adjoint_dagger(e1), -e1) == 0.0);
  CHECK_THROWS_AS(adjoint_dagger(Multivector::basis(kE, 0)), std::invalid_argument);

  testing::Gen gen(12);
  for (auto tag : {GammaTag::Weyl, GammaTag::Dirac}) {
    const auto& rep = gamma_rep(tag);
    for (int n = 0; n < 100; ++n) {
      const auto a = gen.multivector(kM);
      CHECK(rel_diff(rep_matrix(adjoint_dagger(a), rep), rep_matrix(a, rep).adjoint()) < 1e-12);
      CHECK(max_diff(adjoint_dagger(adjoint_dagger(a)), a) < 1e-15);
    }
  }
}

TEST_CASE("associativity and reversion anti-automorphism") {
  testing::Gen gen(13);
  for (int n = 0; n < 100; ++n) {
    const auto sig = n % 2 ? kE : kM;
    const auto a = gen.multivector(sig), b = gen.multivector(sig), c = gen.multivector(sig);
    const double scale = a.norm() * b.norm() * c.norm();
    CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-12 * scale);
    CHECK(max_diff(reversion(a * b), reversion(b) * reversion(a)) < 1e-12 * a.norm() * b.norm());
  }
}

TEST_CASE("gamma representations") {
  for (auto tag : {GammaTag::Weyl, GammaTag::Dirac}) {
    const auto& g = gamma_rep(tag).gamma;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        const double eta = mu == nu ? metric(kM, mu) : 0.0;
        CHECK(rel_diff(g[mu] * g[nu] + g[nu] * g[mu], 2.0 * eta * Matrix4c::Identity()) == 0.0);
      }
  }
  const Matrix4c& u = weyl_to_dirac();
  CHECK(rel_diff(u * u.adjoint(), Matrix4c::Identity()) < 1e-15);
  for (int mu = 0; mu < 4; ++mu)
    CHECK(rel_diff(u * gamma_rep(GammaTag::Weyl).gamma[mu] * u.adjoint(), gamma_rep(GammaTag::Dirac).gamma[mu]) <
          1e-15);
  Matrix4c weyl0 = Matrix4c::Zero();
  weyl0.block<2, 2>(0, 2).setIdentity();
  weyl0.block<2, 2>(2, 0).setIdentity();
  CHECK(gamma_rep(GammaTag::Weyl).gamma[0] == weyl0);
  CHECK(gamma_tag_from_string("dirac") == GammaTag::Dirac);
  CHECK_THROWS_AS(gamma_tag_from_string("majorana"), std::invalid_argument);
}

TEST_CASE("rep_matrix") {
  const auto& weyl = gamma_rep(GammaTag::Weyl);
  CHECK(rep_matrix(Multivector::scalar(kM, 1.0), weyl) == Matrix4c::Identity());
  const auto a = mv(kM, {{0, 3.0}, {5, 1.0}});
  CHECK(std::abs(rep_matrix(a, weyl).trace() - Complex(12.0)) < 1e-15);
  const Matrix4c e01 = rep_matrix(Multivector::blade(kM, {0, 1}), weyl);
  CHECK(rel_diff(e01 * e01, Matrix4c::Identity()) == 0.0);
  CHECK_THROWS_AS(rep_matrix(Multivector::basis(kE, 0), weyl), std::invalid_argument);

  testing::Gen gen(14);
  for (auto tag : {GammaTag::Weyl, GammaTag::Dirac}) {
    const auto& rep = gamma_rep(tag);
    for (int n = 0; n < 100; ++n) {
      const auto x = gen.multivector(kM), y = gen.multivector(kM);
      const Matrix4c lhs = rep_matrix(x * y, rep);
      const Matrix4c rhs = rep_matrix(x, rep) * rep_matrix(y, rep);
      CHECK(rel_diff(lhs, rhs) < 1e-12);
      CHECK(std::abs(rep_matrix(x, rep).trace() - 4.0 * x[0]) < 1e-12 * x.norm());
    }
  }
}

TEST_CASE("primitive idempotents") {
  const auto f = idempotent_f(false);
  CHECK(max_diff(f * f, f) == 0.0);
  const auto fc = idempotent_f(true);
  CHECK(max_diff(fc * fc, fc) < 1e-16);
  Matrix4c expected = Matrix4c::Zero();
  expected(0, 0) = 1.0;
  CHECK(rel_diff(rep_matrix(fc, gamma_rep(GammaTag::Dirac)), expected) < 1e-16);
}
