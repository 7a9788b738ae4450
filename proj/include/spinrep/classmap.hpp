#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "spinrep/lounesto.hpp"

namespace spinrep::classmap {

struct MappingParams {
  Complex m11, m12, m13, m14, m22, m41, m42, m43, m44;
};

inline constexpr std::array<const char*, 9> kParamNames{"m11", "m12", "m13", "m14", "m22",
                                                        "m41", "m42", "m43", "m44"};
std::array<Complex, 9> to_array(const MappingParams& p);
MappingParams from_array(const std::array<Complex, 9>& values);

struct MappingMatrix {
  Matrix4c M = Matrix4c::Zero();
  MappingParams params{};
};

// Rows 1 and 4 are free; row 2 = (m22 / m12) row 1, row 3 = -(m22* / m12*) row 4.
// Throws std::invalid_argument when m12 = 0.
MappingMatrix build_M(const MappingParams& p);

struct ConstraintResiduals {
  double gamma0 = 0.0;    // max |(M^dagger gamma0 M)_ij|
  double gamma123 = 0.0;  // max |(M^dagger gamma1 gamma2 gamma3 M)_ij|
};

// Weyl representation.
ConstraintResiduals constraint_residuals(const Matrix4c& M);

struct Class4Image {
  spinor::ClassicalSpinor psi;
  lounesto::ClassificationReport report;
  // True when the image misses class 4 because K, S or J fell below threshold.
  bool degenerate = false;
};

// Throws std::invalid_argument when phi is not a Weyl-representation regular spinor,
// std::domain_error when M phi vanishes (phi in the kernel of M).
Class4Image map_to_class4(const MappingMatrix& M, const spinor::ClassicalSpinor& phi,
                          double tol = lounesto::kDefaultTol);

// Hermiticity relations: m11, m12, m22 real; m14 = m41*; m13 = -m22 m14 / m12 = -m42*;
// m44 = -m12 m43 / m22; m12^2 = m11 m22; m43 real.
// Returns the names of the violated relations (relative tolerance tol).
std::vector<std::string> hermitian_violations(const MappingParams& p, double tol = 1e-12);
// Throws std::invalid_argument listing the violated relations.
MappingMatrix hermitian_constrain(const MappingParams& p);
// Parameters satisfying every relation, built from m11, m12 (real, nonzero), m14 and m43 (real).
MappingParams hermitian_params(double m11, double m12, Complex m14, double m43);

// |det M|.
double no_inverse_witness(const Matrix4c& M);
// Unit vector spanning part of the kernel (right singular vector of the smallest singular value).
Vector4c null_vector(const Matrix4c& M);

// Complex normal entries with |m12| >= 0.1.
MappingParams random_params(std::mt19937_64& rng);

}  // namespace spinrep::classmap
