#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spinrep/bilinears.hpp"
#include "spinrep/spinor_forms.hpp"

namespace spinrep::lounesto {

using bilinears::BilinearSet;
using spinor::ClassicalSpinor;

enum class LounestoClass { C1, C2, C3, C4, C5, C6, Pole, Flag, FlagPoleJ0, Anomalous };

std::string_view to_string(LounestoClass c);
// Accepts the names produced by to_string and the bare digits "1".."6".
LounestoClass class_from_string(std::string_view name);

inline constexpr double kDefaultTol = 1e-8;

struct ZeroFlags {
  bool sigma = false;
  bool omega = false;
  bool J = false;
  bool K = false;
  bool S = false;
};

struct ClassificationReport {
  LounestoClass cls = LounestoClass::Anomalous;
  BilinearSet bilinears;
  ZeroFlags zero;
  double tol = kDefaultTol;
  // Smallest ratio norm / threshold over the covariants judged nonzero (0 if none).
  double margin = 0.0;
  double fpk_residual = 0.0;
};

// Row lookup from zero flags alone (no FPK gate).
LounestoClass class_from_flags(const ZeroFlags& z);

// Covariant norms are compared against tol |psi|^2. Throws std::invalid_argument for the zero spinor.
ClassificationReport classify(const ClassicalSpinor& psi, double tol = kDefaultTol);

// Thresholds scale with the largest covariant component; sets failing the FPK
// identities at tol (relative to that scale squared) are Anomalous.
ClassificationReport classify_bilinears(const BilinearSet& b, double tol = kDefaultTol);

// Deterministic representatives in the Weyl representation, each confirmed by classify.
// Throws std::invalid_argument for classes without spinor representatives or count < 1.
std::vector<ClassicalSpinor> generate(LounestoClass cls, std::uint64_t seed, int count);

// classify(c psi).cls == classify(psi).cls. Throws std::invalid_argument for c = 0.
bool rescale_class_invariance(const ClassicalSpinor& psi, Complex c, double tol = kDefaultTol);

// cos(theta) + sin(theta) gamma0123 applied in psi's representation;
// rotates (sigma, omega) by 2 theta.
ClassicalSpinor chiral_rotation(const ClassicalSpinor& psi, double theta);

}  // namespace spinrep::lounesto
