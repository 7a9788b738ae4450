#pragma once

#include <array>
#include <optional>

#include "spinrep/bilinears.hpp"
#include "spinrep/clifford.hpp"
#include "spinrep/spinor_forms.hpp"

namespace spinrep::fierz {

using bilinears::BilinearSet;
using clifford::Multivector;

// Vector J^mu e_mu and bivector sum_{mu<nu} S^{mu nu} e_mu e_nu (indices raised with the metric).
Multivector vector_part(const std::array<double, 4>& lower, clifford::Signature sig);
Multivector bivector_part(const BilinearSet& b);
// sum_{mu<nu} (A^mu B^nu - A^nu B^mu) e_mu e_nu
Multivector wedge(const std::array<double, 4>& a, const std::array<double, 4>& b, clifford::Signature sig);

struct FpkResiduals {
  double r1 = 0.0;  // J^2 - sigma^2 - omega^2
  double r2 = 0.0;  // K^2 + J^2
  double r3 = 0.0;  // J.K
  double r4 = 0.0;  // max-norm of J^K + (omega + sigma e0123) S

  double max_abs() const;
};

// Throws std::invalid_argument for a Euclidean set.
FpkResiduals fpk_residuals(const BilinearSet& b);

struct EuclideanFierzResiduals {
  double r1 = 0.0;  // J^2 - sigma^2 + omega^2
  double r2 = 0.0;  // J^2 - K^2
  double r3 = 0.0;  // J.K
  double r4 = 0.0;  // max-norm of J^K - (omega - sigma e5) S
  // max-norm of J^K - (sigma - e5 omega) S, kept for comparison; not an identity.
  double r4_swapped = 0.0;

  double max_abs() const;
};

// Throws std::invalid_argument for a Minkowski set.
EuclideanFierzResiduals euclidean_fierz_residuals(const BilinearSet& b);

// Z = sigma + J + i S + i K e0123 + omega e0123.
Multivector aggregate(const BilinearSet& b);

// |Z^2 - 4 sigma Z| <= tol |Z|^2 (coefficient max-norm against Euclidean norm).
bool is_boomerang(const Multivector& z, double sigma, double tol);
double boomerang_residual(const Multivector& z, double sigma);

// Residual max-norms of Z Gamma Z / 4 = (psibar Gamma psi) Z for
// Gamma = 1, e_mu, c_S [e_mu, e_nu], i e0123 e_mu and -e0123, in that order.
// Each entry is the maximum over the free indices.
std::array<double, 5> generalized_fpk_residuals(const Multivector& z, const BilinearSet& b,
                                                Complex c_S = bilinears::kSNormalization);

struct SingularAggregateParams {
  std::array<double, 4> J{};  // contravariant, lightlike
  std::array<double, 4> s{};  // contravariant, space-like, s.J = 0
  double h = 0.0;
};

// Z = J (1 + i s + i h e0123). Throws std::invalid_argument when J is zero or not
// lightlike, s is not space-like or s.J != 0 (relative tolerance 1e-12).
Multivector build_singular_aggregate(const SingularAggregateParams& p);

struct Reconstruction {
  spinor::ClassicalSpinor psi;
  Complex kernel;  // xi^dagger gamma0 Z xi
};

// psi' = e^{-i theta} Z xi / (2 sqrt(xi^dagger gamma0 Z xi)), in xi's representation.
// theta = 0 without a reference; with one, theta makes psi' match it.
// Throws std::domain_error when the kernel is degenerate.
Reconstruction reconstruct(const Multivector& z, const spinor::ClassicalSpinor& xi,
                           const std::optional<spinor::ClassicalSpinor>& psi_ref = std::nullopt);
// Picks the canonical basis spinor with the largest |xi^dagger gamma0 Z xi| (first on ties).
Reconstruction reconstruct(const Multivector& z, clifford::GammaTag rep,
                           const std::optional<spinor::ClassicalSpinor>& psi_ref = std::nullopt);

// Sine of the angle between the complex rays of a and b.
double ray_sine(const Vector4c& a, const Vector4c& b);

}  // namespace spinrep::fierz
