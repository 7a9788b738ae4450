#include "spinrep/spinor_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinrep::spinor {

using clifford::GammaTag;
using clifford::Multivector;
using clifford::Signature;

Quaternion make_quaternion(double w, double x, double y, double z) { return Quaternion(w, x, y, z); }

std::array<double, 4> components(const Quaternion& q) {
  return {q.R_component_1(), q.R_component_2(), q.R_component_3(), q.R_component_4()};
}

double dot(const Quaternion& p, const Quaternion& q) { return (boost::math::conj(p) * q).real(); }

QuaternionMatrix QuaternionMatrix::identity() {
  QuaternionMatrix m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  QuaternionMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

QuaternionMatrix operator+(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  QuaternionMatrix out;
  for (std::size_t i = 0; i < 4; ++i) out.entries[i] = a.entries[i] + b.entries[i];
  return out;
}

QuaternionMatrix operator*(double factor, const QuaternionMatrix& a) {
  QuaternionMatrix out;
  for (std::size_t i = 0; i < 4; ++i) out.entries[i] = factor * a.entries[i];
  return out;
}

double max_abs_difference(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < 4; ++i) out = std::max(out, boost::math::sup(a.entries[i] - b.entries[i]));
  return out;
}

QuaternionMatrix quaternion_rep_e(int mu) {
  QuaternionMatrix m;
  switch (mu) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m;
    case 1:
    case 2:
    case 3: {
      std::array<double, 4> unit{0.0, 0.0, 0.0, 0.0};
      unit[mu] = 1.0;
      const Quaternion u(unit[0], unit[1], unit[2], unit[3]);
      m(0, 1) = u;
      m(1, 0) = u;
      return m;
    }
    default:
      throw std::out_of_range("quaternion_rep_e: index must be 0..3");
  }
}

QuaternionMatrix quaternion_image(const Multivector& a) {
  if (a.signature() != Signature::Minkowski)
    throw std::invalid_argument("quaternion_image: Cl(1,3) multivector expected");
  QuaternionMatrix out;
  for (std::size_t slot = 0; slot < clifford::kBladeCount; ++slot) {
    const Complex c = a[slot];
    if (c.imag() != 0.0) throw std::invalid_argument("quaternion_image: real multivector expected");
    if (c.real() == 0.0) continue;
    QuaternionMatrix blade = QuaternionMatrix::identity();
    const unsigned mask = clifford::blade_mask(slot);
    for (int mu = 0; mu < 4; ++mu)
      if (mask & (1u << mu)) blade = blade * quaternion_rep_e(mu);
    out = out + c.real() * blade;
  }
  return out;
}

Eigen::Matrix2cd complex_image(const Quaternion& q) {
  const auto [w, x, y, z] = components(q);
  Eigen::Matrix2cd m;
  // w I - i (x sigma1 + y sigma2 + z sigma3)
  m << Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z);
  return m;
}

Matrix4c complex_image(const QuaternionMatrix& m) {
  Matrix4c out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = complex_image(m(r, c));
  return out;
}

const clifford::Generators& quaternionic_gammas() {
  static const clifford::Generators gammas = [] {
    clifford::Generators g;
    for (int mu = 0; mu < 4; ++mu) g[mu] = complex_image(quaternion_rep_e(mu));
    return g;
  }();
  return gammas;
}

SpinorOperator operator_from_coeffs(double s, const std::array<double, 6>& bivector, double p) {
  const double s01 = bivector[0], s02 = bivector[1], s03 = bivector[2];
  const double s12 = bivector[3], s13 = bivector[4], s23 = bivector[5];
  return {Quaternion(s, s23, -s13, s12), Quaternion(-p, s01, s02, s03)};
}

SpinorOperator operator_from_even(const Multivector& even) {
  if (even.signature() != Signature::Minkowski)
    throw std::invalid_argument("operator_from_even: Cl(1,3) multivector expected");
  for (std::size_t slot = 0; slot < clifford::kBladeCount; ++slot) {
    if (even[slot].imag() != 0.0)
      throw std::invalid_argument("operator_from_even: real multivector expected");
    if (clifford::blade_grade(slot) % 2 == 1 && even[slot] != 0.0)
      throw std::invalid_argument("operator_from_even: odd-grade component " + clifford::blade_name(slot));
  }
  std::array<double, 6> bivector{};
  for (std::size_t b = 0; b < 6; ++b) {
    const auto [mu, nu] = clifford::kBivectorPairs[b];
    bivector[b] = even[clifford::bivector_slot(mu, nu)].real();
  }
  return operator_from_coeffs(even[0].real(), bivector, even[15].real());
}

Multivector even_from_operator(const SpinorOperator& op) {
  const auto [s, s23, s31, s12] = components(op.q1);
  const auto [minus_p, s01, s02, s03] = components(op.q2);
  Multivector out(Signature::Minkowski);
  out[0] = s;
  out[clifford::bivector_slot(0, 1)] = s01;
  out[clifford::bivector_slot(0, 2)] = s02;
  out[clifford::bivector_slot(0, 3)] = s03;
  out[clifford::bivector_slot(1, 2)] = s12;
  out[clifford::bivector_slot(1, 3)] = -s31;
  out[clifford::bivector_slot(2, 3)] = s23;
  out[15] = -minus_p;
  return out;
}

QuaternionMatrix operator_matrix(const SpinorOperator& op) {
  QuaternionMatrix m;
  m(0, 0) = op.q1;
  m(0, 1) = -op.q2;
  m(1, 0) = op.q2;
  m(1, 1) = op.q1;
  return m;
}

ClassicalSpinor to_representation(const ClassicalSpinor& psi, GammaTag target) {
  if (psi.rep == target) return psi;
  const Matrix4c& u = clifford::weyl_to_dirac();
  ClassicalSpinor out;
  out.rep = target;
  out.components = (target == GammaTag::Dirac) ? Vector4c(u * psi.components)
                                               : Vector4c(u.adjoint() * psi.components);
  return out;
}

ClassicalSpinor classical_from_operator(const SpinorOperator& op) {
  const Multivector even = even_from_operator(op);
  const auto s = [&](int mu, int nu) { return even.bivector(mu, nu).real(); };
  const double scalar = even[0].real();
  const double p = even[15].real();
  ClassicalSpinor psi;
  psi.rep = GammaTag::Dirac;
  psi.components << Complex(scalar, s(2, 3)), Complex(s(1, 3), s(1, 2)), Complex(p, s(1, 0)),
      Complex(s(0, 2), s(3, 0));
  return psi;
}

SpinorOperator operator_from_classical(const ClassicalSpinor& psi) {
  const Vector4c& c = psi.components;
  // Inverse of classical_from_operator: every real component appears exactly once.
  const double scalar = c[0].real(), s23 = c[0].imag();
  const double s13 = c[1].real(), s12 = c[1].imag();
  const double p = c[2].real(), s01 = -c[2].imag();
  const double s02 = c[3].real(), s03 = -c[3].imag();
  return operator_from_coeffs(scalar, {s01, s02, s03, s12, s13, s23}, p);
}

AlgebraicSpinor algebraic_from_classical(const ClassicalSpinor& psi) {
  AlgebraicSpinor xi;
  xi.matrix.col(0) = psi.components;
  return xi;
}

ClassicalSpinor classical_from_algebraic(const AlgebraicSpinor& xi, GammaTag rep, double tol) {
  const double rest = xi.matrix.rightCols<3>().cwiseAbs().maxCoeff();
  if (rest > tol)
    throw std::invalid_argument("classical_from_algebraic: columns 2..4 of an ideal element must vanish");
  return {xi.matrix.col(0), rep};
}

QuaternionMatrix ideal_element_H2(const Quaternion& q1, const Quaternion& q2) {
  QuaternionMatrix f;
  f(0, 0) = 1.0;
  return operator_matrix({q1, q2}) * f;
}

}  // namespace spinrep::spinor
