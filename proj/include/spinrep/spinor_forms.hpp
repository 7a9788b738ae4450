#pragma once

#include <array>

#include <boost/math/quaternion.hpp>

#include "spinrep/clifford.hpp"

namespace spinrep::spinor {

// Components (w, x, y, z) are the coefficients of 1, i, j, k with
// i = e2 e3, j = e3 e1, k = e1 e2 in Cl(1,3). Under the geometric product
// these satisfy ij = k and ijk = -1.
using Quaternion = boost::math::quaternion<double>;

Quaternion make_quaternion(double w, double x, double y, double z);
std::array<double, 4> components(const Quaternion& q);
// Real part of p* q, i.e. the Euclidean dot product of the component 4-vectors.
double dot(const Quaternion& p, const Quaternion& q);

// 2x2 quaternionic matrix, row-major: {a00, a01, a10, a11}.
struct QuaternionMatrix {
  std::array<Quaternion, 4> entries{Quaternion(), Quaternion(), Quaternion(), Quaternion()};

  const Quaternion& operator()(int row, int col) const { return entries.at(2 * row + col); }
  Quaternion& operator()(int row, int col) { return entries.at(2 * row + col); }

  static QuaternionMatrix identity();
};

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);
QuaternionMatrix operator+(const QuaternionMatrix& a, const QuaternionMatrix& b);
QuaternionMatrix operator*(double factor, const QuaternionMatrix& a);
double max_abs_difference(const QuaternionMatrix& a, const QuaternionMatrix& b);

// [e0] = [[1,0],[0,-1]], [e1] = [[0,i],[i,0]], [e2] = [[0,j],[j,0]], [e3] = [[0,k],[k,0]].
// Throws std::out_of_range for mu outside 0..3.
QuaternionMatrix quaternion_rep_e(int mu);

// Image of a real Cl(1,3) multivector in M(2,H) through quaternion_rep_e.
// Throws std::invalid_argument when a coefficient has a nonzero imaginary part
// or the multivector is Euclidean.
QuaternionMatrix quaternion_image(const clifford::Multivector& a);

// Fixed embedding H -> M(2,C): i -> -i sigma_1, j -> -i sigma_2, k -> -i sigma_3.
Eigen::Matrix2cd complex_image(const Quaternion& q);
Matrix4c complex_image(const QuaternionMatrix& m);

// Gamma matrices obtained by embedding quaternion_rep_e(mu) into M(4,C).
const clifford::Generators& quaternionic_gammas();

// Even element s + s^{mu nu} e_mu e_nu + p e0123 written as (q1, q2):
//   q1 = s + s23 i + s31 j + s12 k,  q2 = -p + s01 i + s02 j + s03 k.
struct SpinorOperator {
  Quaternion q1;
  Quaternion q2;
};

// bivector holds s^{mu nu} for (01, 02, 03, 12, 13, 23).
SpinorOperator operator_from_coeffs(double s, const std::array<double, 6>& bivector, double p);
// Throws std::invalid_argument if the multivector has odd-grade or imaginary parts.
SpinorOperator operator_from_even(const clifford::Multivector& even);
clifford::Multivector even_from_operator(const SpinorOperator& op);
// [[q1, -q2], [q2, q1]]; equals [e0] quaternion_image(Psi) [e0].
QuaternionMatrix operator_matrix(const SpinorOperator& op);

struct ClassicalSpinor {
  Vector4c components = Vector4c::Zero();
  clifford::GammaTag rep = clifford::GammaTag::Weyl;

  double norm() const { return components.norm(); }
  bool is_zero() const { return components.isZero(0.0); }
};

// Same abstract spinor expressed in another gamma representation.
ClassicalSpinor to_representation(const ClassicalSpinor& psi, clifford::GammaTag target);

// psi1 = s + s23 i, psi2 = s13 + s12 i, psi3 = p + s10 i, psi4 = s02 + s30 i,
// with s^{nu mu} = -s^{mu nu}. The result is tagged with the Dirac representation.
ClassicalSpinor classical_from_operator(const SpinorOperator& op);
SpinorOperator operator_from_classical(const ClassicalSpinor& psi);

// Ideal element: the 4x4 matrix whose first column is psi, all else zero.
struct AlgebraicSpinor {
  Matrix4c matrix = Matrix4c::Zero();
};

AlgebraicSpinor algebraic_from_classical(const ClassicalSpinor& psi);
// Throws std::invalid_argument if columns 2..4 are not zero within tol.
ClassicalSpinor classical_from_algebraic(const AlgebraicSpinor& xi,
                                         clifford::GammaTag rep = clifford::GammaTag::Dirac,
                                         double tol = 0.0);

// [[q1, -q2], [q2, q1]] [f] with [f] = [[1, 0], [0, 0]].
QuaternionMatrix ideal_element_H2(const Quaternion& q1, const Quaternion& q2);

}  // namespace spinrep::spinor
