#include "spinrep/classmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinrep::classmap {

using lounesto::LounestoClass;

std::array<Complex, 9> to_array(const MappingParams& p) {
  return {p.m11, p.m12, p.m13, p.m14, p.m22, p.m41, p.m42, p.m43, p.m44};
}

MappingParams from_array(const std::array<Complex, 9>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

MappingMatrix build_M(const MappingParams& p) {
  if (p.m12 == 0.0) throw std::invalid_argument("build_M: m12 must be nonzero");
  MappingMatrix out;
  out.params = p;
  Matrix4c& m = out.M;
  m.row(0) << p.m11, p.m12, p.m13, p.m14;
  m.row(3) << p.m41, p.m42, p.m43, p.m44;
  m.row(1) = (p.m22 / p.m12) * m.row(0);
  m.row(2) = -(std::conj(p.m22) / std::conj(p.m12)) * m.row(3);
  m(1, 1) = p.m22;
  return out;
}

ConstraintResiduals constraint_residuals(const Matrix4c& M) {
  const auto& g = clifford::gamma_rep(clifford::GammaTag::Weyl).gamma;
  const Matrix4c g123 = g[1] * g[2] * g[3];
  return {(M.adjoint() * g[0] * M).cwiseAbs().maxCoeff(), (M.adjoint() * g123 * M).cwiseAbs().maxCoeff()};
}

Class4Image map_to_class4(const MappingMatrix& M, const spinor::ClassicalSpinor& phi, double tol) {
  if (phi.rep != clifford::GammaTag::Weyl)
    throw std::invalid_argument("map_to_class4: the mapping matrix acts on Weyl-representation spinors");
  const auto source = lounesto::classify(phi, tol);
  if (source.cls != LounestoClass::C1 && source.cls != LounestoClass::C2 && source.cls != LounestoClass::C3)
    throw std::invalid_argument("map_to_class4: source spinor is " + std::string(lounesto::to_string(source.cls)) +
                                ", expected a regular class (C1, C2 or C3)");

  Class4Image image;
  image.psi = {M.M * phi.components, clifford::GammaTag::Weyl};
  const double scale = M.M.norm() * phi.norm();
  if (!(image.psi.norm() > 1e-12 * scale))
    throw std::domain_error("map_to_class4: M phi = 0, the source spinor lies in the kernel of M");
  image.report = lounesto::classify(image.psi, tol);
  image.degenerate = image.report.cls != LounestoClass::C4;
  return image;
}

std::vector<std::string> hermitian_violations(const MappingParams& p, double tol) {
  double scale = 0.0;
  for (const Complex& c : to_array(p)) scale = std::max(scale, std::abs(c));
  const double limit = tol * std::max(scale, 1.0);
  std::vector<std::string> out;
  const auto check = [&](bool ok, const char* relation) {
    if (!ok) out.emplace_back(relation);
  };
  const auto small = [&](Complex c) { return std::abs(c) <= limit; };

  check(small(p.m11.imag()), "m11 = m11*");
  check(small(p.m12.imag()), "m12 = m12*");
  check(small(p.m22.imag()), "m22 = m22*");
  check(small(p.m14 - std::conj(p.m41)), "m14 = m41*");
  if (p.m12 == 0.0 || p.m22 == 0.0) {
    check(false, "m12 != 0 and m22 != 0");
    return out;
  }
  check(small(p.m13 + p.m22 * p.m14 / p.m12), "m13 = -m22 m14 / m12");
  check(small(p.m13 + std::conj(p.m42)), "m13 = -m42*");
  check(small(p.m44 + p.m12 * p.m43 / p.m22), "m44 = -m12 m43 / m22");
  check(std::abs(p.m12 * p.m12 - p.m11 * p.m22) <= limit * std::max(scale, 1.0), "m12^2 = m11 m22");
  check(small(p.m43.imag()), "m43 = m43*");
  return out;
}

MappingMatrix hermitian_constrain(const MappingParams& p) {
  const auto violations = hermitian_violations(p);
  if (!violations.empty()) {
    std::string message = "hermitian_constrain: violated relations:";
    for (const auto& v : violations) message += " [" + v + "]";
    throw std::invalid_argument(message);
  }
  return build_M(p);
}

MappingParams hermitian_params(double m11, double m12, Complex m14, double m43) {
  if (m11 == 0.0 || m12 == 0.0) throw std::invalid_argument("hermitian_params: m11 and m12 must be nonzero");
  MappingParams p;
  p.m11 = m11;
  p.m12 = m12;
  p.m22 = m12 * m12 / m11;
  p.m14 = m14;
  p.m41 = std::conj(m14);
  p.m13 = -p.m22 * m14 / p.m12;
  p.m42 = -std::conj(p.m13);
  p.m43 = m43;
  p.m44 = -p.m12 * p.m43 / p.m22;
  return p;
}

double no_inverse_witness(const Matrix4c& M) { return std::abs(M.determinant()); }

Vector4c null_vector(const Matrix4c& M) {
  Eigen::JacobiSVD<Matrix4c> svd(M, Eigen::ComputeFullV);
  return svd.matrixV().col(3);
}

MappingParams random_params(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::array<Complex, 9> values;
  for (auto& v : values) v = Complex(normal(rng), normal(rng));
  MappingParams p = from_array(values);
  while (std::abs(p.m12) < 0.1) p.m12 = Complex(normal(rng), normal(rng));
  return p;
}

}  // namespace spinrep::classmap
