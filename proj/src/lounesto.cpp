#include "spinrep/lounesto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "spinrep/classmap.hpp"
#include "spinrep/fierz.hpp"

namespace spinrep::lounesto {

namespace {

template <std::size_t N>
double euclidean_norm(const std::array<double, N>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

ClassificationReport evaluate(const BilinearSet& b, double scale, double tol) {
  ClassificationReport report;
  report.bilinears = b;
  report.tol = tol;

  const std::array<double, 5> norms{std::abs(b.sigma), std::abs(b.omega), euclidean_norm(b.J),
                                    euclidean_norm(b.K), euclidean_norm(b.S)};
  const double threshold = tol * scale;
  std::array<bool, 5> zero{};
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < norms.size(); ++i) {
    zero[i] = !(norms[i] > threshold) || scale == 0.0;
    if (!zero[i]) margin = std::min(margin, norms[i] / threshold);
  }
  report.zero = {zero[0], zero[1], zero[2], zero[3], zero[4]};
  report.margin = std::isinf(margin) ? 0.0 : margin;

  report.fpk_residual = fierz::fpk_residuals(b).max_abs();
  const bool fpk_ok = report.fpk_residual <= tol * scale * scale;
  report.cls = fpk_ok ? class_from_flags(report.zero) : LounestoClass::Anomalous;
  return report;
}

Vector4c random_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector4c v;
  for (int i = 0; i < 4; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

Eigen::Vector2cd random_pair(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return Eigen::Vector2cd(Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng)));
}

ClassicalSpinor candidate(LounestoClass cls, std::mt19937_64& rng) {
  ClassicalSpinor psi;
  psi.rep = clifford::GammaTag::Weyl;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin;
  switch (cls) {
    case LounestoClass::C1:
      psi.components = random_vector(rng);
      return psi;
    case LounestoClass::C2:
    case LounestoClass::C3: {
      psi.components = random_vector(rng);
      const auto b = bilinears::bilinear_covariants(psi);
      const double two_theta =
          (cls == LounestoClass::C2) ? std::atan2(-b.omega, b.sigma) : std::atan2(b.sigma, b.omega);
      return chiral_rotation(psi, 0.5 * two_theta);
    }
    case LounestoClass::C4: {
      auto phi = candidate(LounestoClass::C1, rng);
      const auto m = classmap::build_M(classmap::random_params(rng));
      psi.components = m.M * phi.components;
      return psi;
    }
    case LounestoClass::C5: {
      const Eigen::Vector2cd phi = random_pair(rng);
      Eigen::Matrix2cd sigma2;
      sigma2 << 0.0, -kI, kI, 0.0;
      const Eigen::Vector2cd partner = std::polar(1.0, angle(rng)) * (sigma2 * phi.conjugate());
      if (coin(rng))
        psi.components << phi, partner;
      else
        psi.components << partner, phi;
      return psi;
    }
    case LounestoClass::C6: {
      const Eigen::Vector2cd chi = random_pair(rng);
      if (coin(rng))
        psi.components << chi, Eigen::Vector2cd::Zero();
      else
        psi.components << Eigen::Vector2cd::Zero(), chi;
      return psi;
    }
    default:
      throw std::invalid_argument("generate: class " + std::string(to_string(cls)) +
                                  " has no spinor representative (J = psi^dagger psi > 0)");
  }
}

}  // namespace

std::string_view to_string(LounestoClass c) {
  switch (c) {
    case LounestoClass::C1: return "C1";
    case LounestoClass::C2: return "C2";
    case LounestoClass::C3: return "C3";
    case LounestoClass::C4: return "C4";
    case LounestoClass::C5: return "C5";
    case LounestoClass::C6: return "C6";
    case LounestoClass::Pole: return "Pole";
    case LounestoClass::Flag: return "Flag";
    case LounestoClass::FlagPoleJ0: return "FlagPoleJ0";
    case LounestoClass::Anomalous: return "Anomalous";
  }
  return "Anomalous";
}

LounestoClass class_from_string(std::string_view name) {
  static constexpr std::array<LounestoClass, 10> all{
      LounestoClass::C1,   LounestoClass::C2,   LounestoClass::C3,         LounestoClass::C4,
      LounestoClass::C5,   LounestoClass::C6,   LounestoClass::Pole,       LounestoClass::Flag,
      LounestoClass::FlagPoleJ0, LounestoClass::Anomalous};
  for (auto c : all) {
    const auto text = to_string(c);
    if (name == text || (text.size() == 2 && text[0] == 'C' && name == text.substr(1))) return c;
  }
  throw std::invalid_argument("unknown class '" + std::string(name) + "'");
}

LounestoClass class_from_flags(const ZeroFlags& z) {
  const bool regular = !z.sigma || !z.omega;
  if (z.J) {
    if (regular) return LounestoClass::Anomalous;
    if (!z.K && z.S) return LounestoClass::Pole;
    if (z.K && !z.S) return LounestoClass::Flag;
    if (!z.K && !z.S) return LounestoClass::FlagPoleJ0;
    return LounestoClass::Anomalous;
  }
  if (regular) {
    if (z.K || z.S) return LounestoClass::Anomalous;
    if (!z.sigma && !z.omega) return LounestoClass::C1;
    return z.omega ? LounestoClass::C2 : LounestoClass::C3;
  }
  if (!z.K && !z.S) return LounestoClass::C4;
  if (z.K && !z.S) return LounestoClass::C5;
  if (!z.K && z.S) return LounestoClass::C6;
  return LounestoClass::Anomalous;
}

ClassificationReport classify(const ClassicalSpinor& psi, double tol) {
  const double scale = psi.components.squaredNorm();
  if (!(scale > 0.0)) throw std::invalid_argument("classify: zero spinor");
  return evaluate(bilinears::bilinear_covariants(psi), scale, tol);
}

ClassificationReport classify_bilinears(const BilinearSet& b, double tol) {
  return evaluate(b, b.max_abs(), tol);
}

std::vector<ClassicalSpinor> generate(LounestoClass cls, std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("generate: count must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<ClassicalSpinor> out;
  out.reserve(static_cast<std::size_t>(count));
  const int max_attempts = 100 * count + 100;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < count; ++attempt) {
    ClassicalSpinor psi = candidate(cls, rng);
    if (psi.components.squaredNorm() == 0.0) continue;
    if (classify(psi).cls == cls) out.push_back(std::move(psi));
  }
  if (static_cast<int>(out.size()) < count)
    throw std::logic_error("generate: could not produce the requested number of " +
                           std::string(to_string(cls)) + " spinors");
  return out;
}

bool rescale_class_invariance(const ClassicalSpinor& psi, Complex c, double tol) {
  if (c == 0.0) throw std::invalid_argument("rescale_class_invariance: c must be nonzero");
  ClassicalSpinor scaled = psi;
  scaled.components *= c;
  return classify(scaled, tol).cls == classify(psi, tol).cls;
}

ClassicalSpinor chiral_rotation(const ClassicalSpinor& psi, double theta) {
  const auto& g = clifford::gamma_rep(psi.rep).gamma;
  const Matrix4c rotor = std::cos(theta) * Matrix4c::Identity() + std::sin(theta) * (g[0] * g[1] * g[2] * g[3]);
  return {rotor * psi.components, psi.rep};
}

}  // namespace spinrep::lounesto
