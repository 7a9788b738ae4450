#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "spinrep/fierz.hpp"
#include "spinrep/lounesto.hpp"

using namespace spinrep;
using namespace spinrep::lounesto;
using clifford::GammaTag;

namespace {

constexpr std::array<LounestoClass, 6> kTable{LounestoClass::C1, LounestoClass::C2, LounestoClass::C3,
                                              LounestoClass::C4, LounestoClass::C5, LounestoClass::C6};

}  // namespace

TEST_CASE("class names") {
  for (auto c : {LounestoClass::C1, LounestoClass::C6, LounestoClass::Pole, LounestoClass::Flag,
                 LounestoClass::FlagPoleJ0, LounestoClass::Anomalous})
    CHECK(class_from_string(to_string(c)) == c);
  CHECK(class_from_string("5") == LounestoClass::C5);
  CHECK_THROWS_AS(class_from_string("7"), std::invalid_argument);
  CHECK_THROWS_AS(class_from_string("c5"), std::invalid_argument);
}

TEST_CASE("classification examples") {
  auto r = classify({Vector4c(1, 0, 0, 0), GammaTag::Weyl});
  CHECK(r.cls == LounestoClass::C6);
  CHECK(r.zero.sigma);
  CHECK(r.zero.omega);
  CHECK(r.zero.S);
  CHECK_FALSE(r.zero.K);
  CHECK_FALSE(r.zero.J);

  r = classify({Vector4c(1, 0, 1, 0), GammaTag::Weyl});
  CHECK(r.cls == LounestoClass::C2);
  CHECK(r.bilinears.sigma == doctest::Approx(2.0));

  r = classify({Vector4c(0, kI, 1, 0), GammaTag::Weyl});
  CHECK(r.cls == LounestoClass::C5);
  CHECK(r.zero.K);
  CHECK_FALSE(r.zero.S);

  CHECK_THROWS_AS(classify({Vector4c::Zero(), GammaTag::Weyl}), std::invalid_argument);
}

TEST_CASE("table rows from flags") {
  CHECK(class_from_flags({false, false, false, false, false}) == LounestoClass::C1);
  CHECK(class_from_flags({false, true, false, false, false}) == LounestoClass::C2);
  CHECK(class_from_flags({true, false, false, false, false}) == LounestoClass::C3);
  CHECK(class_from_flags({true, true, false, false, false}) == LounestoClass::C4);
  CHECK(class_from_flags({true, true, false, true, false}) == LounestoClass::C5);
  CHECK(class_from_flags({true, true, false, false, true}) == LounestoClass::C6);
  CHECK(class_from_flags({true, true, true, false, true}) == LounestoClass::Pole);
  CHECK(class_from_flags({true, true, true, true, false}) == LounestoClass::Flag);
  CHECK(class_from_flags({true, true, true, false, false}) == LounestoClass::FlagPoleJ0);
  CHECK(class_from_flags({true, true, true, true, true}) == LounestoClass::Anomalous);
  CHECK(class_from_flags({true, true, false, true, true}) == LounestoClass::Anomalous);
  CHECK(class_from_flags({false, false, false, true, false}) == LounestoClass::Anomalous);
  CHECK(class_from_flags({false, true, true, false, false}) == LounestoClass::Anomalous);
}

TEST_CASE("classify_bilinears") {
  const auto psi = generate(LounestoClass::C1, 3, 1).front();
  CHECK(classify_bilinears(bilinears::bilinear_covariants(psi)).cls == LounestoClass::C1);

  auto bad = bilinears::bilinear_covariants(psi);
  bad.sigma += 1.0 + std::abs(bad.sigma);
  CHECK(classify_bilinears(bad).cls == LounestoClass::Anomalous);

  // J = 0, K = 0 and a simple S: every identity is satisfied trivially.
  BilinearSet flag;
  flag.S = {0, 0, 0, 1, 0, 0};
  CHECK(fierz::fpk_residuals(flag).max_abs() == 0.0);
  CHECK(classify_bilinears(flag).cls == LounestoClass::Flag);

  // J = 0 with a lightlike K.
  BilinearSet pole;
  pole.K = {1, 0, 0, 1};
  CHECK(classify_bilinears(pole).cls == LounestoClass::Pole);
  pole.K = {1, 0, 0, 0};
  CHECK(classify_bilinears(pole).cls == LounestoClass::Anomalous);

  CHECK(classify_bilinears(BilinearSet{}).cls == LounestoClass::Anomalous);
}

TEST_CASE("generator soundness") {
  for (auto cls : kTable) {
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
      const auto batch = generate(cls, seed, 3);
      CHECK(batch.size() == 3);
      for (const auto& psi : batch) {
        const auto r = classify(psi);
        CAPTURE(to_string(cls));
        CHECK(r.cls == cls);
        CHECK_FALSE(r.zero.J);
        CHECK(r.margin > 1.0);
      }
    }
  }
}

TEST_CASE("generator determinism and shapes") {
  const auto a = generate(LounestoClass::C6, 7, 10);
  const auto b = generate(LounestoClass::C6, 7, 10);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].components == b[i].components);
    const bool upper = a[i].components.tail<2>().isZero(0.0);
    const bool lower = a[i].components.head<2>().isZero(0.0);
    CHECK(upper != lower);
  }
  for (const auto& psi : generate(LounestoClass::C5, 1, 10)) CHECK(classify(psi).cls == LounestoClass::C5);
  for (const auto& psi : generate(LounestoClass::C4, 3, 5)) CHECK(classify(psi).cls == LounestoClass::C4);

  CHECK_THROWS_AS(generate(LounestoClass::Anomalous, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate(LounestoClass::Pole, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate(LounestoClass::C1, 0, 0), std::invalid_argument);
}

TEST_CASE("rescaling invariance") {
  CHECK(rescale_class_invariance({Vector4c(1, 0, 1, 0), GammaTag::Weyl}, 3.0));
  CHECK(rescale_class_invariance({Vector4c(1, 0, 0, 0), GammaTag::Weyl}, kI));
  CHECK_THROWS_AS(rescale_class_invariance({Vector4c(1, 0, 0, 0), GammaTag::Weyl}, 0.0), std::invalid_argument);

  testing::Gen gen(51);
  for (int n = 0; n < 1000; ++n) {
    const auto cls = kTable[static_cast<std::size_t>(n % 6)];
    const auto psi = generate(cls, static_cast<std::uint64_t>(n), 1).front();
    const Complex c = std::polar(std::exp(gen.uniform(-5.0, 5.0)), gen.uniform(0.0, 6.3));
    CHECK(rescale_class_invariance(psi, c));
  }
}

TEST_CASE("classification is deterministic") {
  testing::Gen gen(52);
  for (int n = 0; n < 50; ++n) {
    const auto psi = gen.spinor();
    const auto a = classify(psi), b = classify(psi);
    CHECK(a.cls == b.cls);
    CHECK(a.margin == b.margin);
  }
}

TEST_CASE("chiral rotation") {
  testing::Gen gen(53);
  for (int n = 0; n < 100; ++n) {
    const auto psi = gen.spinor(n % 2 ? GammaTag::Weyl : GammaTag::Dirac);
    const double theta = gen.uniform(-3.0, 3.0);
    const auto b = bilinears::bilinear_covariants(psi);
    const auto r = bilinears::bilinear_covariants(chiral_rotation(psi, theta));
    const double scale = psi.components.squaredNorm();
    CHECK(std::abs(r.sigma - (std::cos(2 * theta) * b.sigma - std::sin(2 * theta) * b.omega)) < 1e-12 * scale);
    CHECK(std::abs(r.omega - (std::cos(2 * theta) * b.omega + std::sin(2 * theta) * b.sigma)) < 1e-12 * scale);
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(r.J[mu] - b.J[mu]) < 1e-12 * scale);
  }
}

TEST_CASE("near-threshold margin") {
  // sigma is a tiny multiple of |psi|^2: the margin reports how close it is to the cut.
  const auto base = generate(LounestoClass::C3, 2, 1).front();
  const auto tilted = chiral_rotation(base, 5e-8);
  const auto r = classify(tilted);
  CHECK(r.cls == LounestoClass::C1);
  CHECK(r.margin < 100.0);
  CHECK(classify(tilted, 1e-5).cls == LounestoClass::C3);
}
