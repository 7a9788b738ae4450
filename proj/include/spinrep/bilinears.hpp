#pragma once

#include <array>

#include "spinrep/clifford.hpp"
#include "spinrep/spinor_forms.hpp"

namespace spinrep::bilinears {

// S_{mu nu} = c_S psibar [gamma_mu, gamma_nu] psi. This value makes
// J ^ K = -(omega + sigma e0123) S hold as a multivector identity.
inline constexpr Complex kSNormalization{0.0, 0.5};

struct BilinearSet {
  double sigma = 0.0;
  double omega = 0.0;
  std::array<double, 4> J{};
  std::array<double, 4> K{};
  // S_{mu nu} for (01, 02, 03, 12, 13, 23), lower indices.
  std::array<double, 6> S{};
  clifford::Signature signature = clifford::Signature::Minkowski;

  double S_at(int mu, int nu) const;
  double max_abs() const;
};

// Minkowski (J.J, K.K, J.K) and Euclidean versions.
double dot(const std::array<double, 4>& a, const std::array<double, 4>& b, clifford::Signature sig);

using Row4c = Eigen::RowVector4cd;

// psi^dagger gamma0 in the spinor's own representation.
Row4c dirac_adjoint(const spinor::ClassicalSpinor& psi);

// Throws std::logic_error when a covariant has an imaginary residue above 1e-10 |psi|^2.
BilinearSet bilinear_covariants(const spinor::ClassicalSpinor& psi, Complex c_S = kSNormalization);

// psibar [gamma_mu, gamma_nu] psi without normalization, (01, 02, 03, 12, 13, 23).
std::array<Complex, 6> raw_commutator_bilinears(const spinor::ClassicalSpinor& psi);

// Euclidean Cl(4) layer, psibar = psi^dagger. The generators are Hermitian,
// square to the identity and give e5 = e0 e1 e2 e3 = [[0, I], [I, 0]].
const clifford::Generators& euclidean_generators();
BilinearSet euclidean_bilinears(const Vector4c& psi, Complex c_S = kSNormalization);

struct EuclideanComponents {
  double sigma = 0.0;
  double omega = 0.0;
  std::array<double, 4> J{};
};

// sigma = sum |psi_a|^2, omega = 2 Re(psi1 psi3* + psi2 psi4*),
// J0 = |psi1|^2 + |psi2|^2 - |psi3|^2 - |psi4|^2, J1 = 2 Im(psi1 psi4* + psi2 psi3*),
// J2 = 2 Re(psi2 psi3* - psi1 psi4*), J3 = -2 Im(psi3 psi1* + psi2 psi4*).
EuclideanComponents euclidean_components_closed_form(const Vector4c& psi);

// sigma = |q1|^2 + |q2|^2, omega = 2 Re(q1* q2), J0 = |q1|^2 - |q2|^2,
// J_i = 2 Re(q1* u_i q2) with u = (i, j, k).
EuclideanComponents quaternionic_euclidean_components(const spinor::Quaternion& q1,
                                                      const spinor::Quaternion& q2);

// H^2 -> C^4 for the Euclidean layer: (w1 + z1 i, y1 + x1 i, w2 + z2 i, y2 + x2 i).
Vector4c c4_from_quaternion_pair(const spinor::Quaternion& q1, const spinor::Quaternion& q2);

}  // namespace spinrep::bilinears
