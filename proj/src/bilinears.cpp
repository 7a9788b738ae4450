#include "spinrep/bilinears.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinrep::bilinears {

using clifford::Signature;

namespace {

constexpr double kRealityTol = 1e-10;

struct RealityCheck {
  double scale;
  double worst = 0.0;

  double take(Complex value) {
    worst = std::max(worst, std::abs(value.imag()));
    return value.real();
  }

  void enforce(const char* where) const {
    if (worst > kRealityTol * scale)
      throw std::logic_error(std::string(where) + ": imaginary residue " + std::to_string(worst) +
                             " exceeds tolerance");
  }
};

BilinearSet covariants(const Row4c& bar, const Vector4c& psi, const clifford::Generators& g,
                       const Matrix4c& e5, double omega_sign, Complex c_S, Signature sig,
                       const char* where) {
  RealityCheck check{std::max(psi.squaredNorm(), 1e-300)};
  const auto form = [&](const Matrix4c& m) { return Complex((bar * m * psi)(0, 0)); };

  BilinearSet b;
  b.signature = sig;
  b.sigma = check.take((bar * psi)(0, 0));
  b.omega = check.take(omega_sign * form(e5));
  for (int mu = 0; mu < 4; ++mu) {
    b.J[mu] = check.take(form(g[mu]));
    b.K[mu] = check.take(kI * form(e5 * g[mu]));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    b.S[i] = check.take(c_S * form(g[mu] * g[nu] - g[nu] * g[mu]));
  }
  check.enforce(where);
  return b;
}

}  // namespace

double BilinearSet::S_at(int mu, int nu) const {
  if (mu == nu) return 0.0;
  if (mu > nu) return -S_at(nu, mu);
  const std::size_t slot = clifford::bivector_slot(mu, nu);
  return S[slot - clifford::bivector_slot(0, 1)];
}

double BilinearSet::max_abs() const {
  double out = std::max(std::abs(sigma), std::abs(omega));
  for (double v : J) out = std::max(out, std::abs(v));
  for (double v : K) out = std::max(out, std::abs(v));
  for (double v : S) out = std::max(out, std::abs(v));
  return out;
}

double dot(const std::array<double, 4>& a, const std::array<double, 4>& b, Signature sig) {
  double out = 0.0;
  for (int mu = 0; mu < 4; ++mu) out += clifford::metric(sig, mu) * a[mu] * b[mu];
  return out;
}

Row4c dirac_adjoint(const spinor::ClassicalSpinor& psi) {
  return psi.components.adjoint() * clifford::gamma_rep(psi.rep).gamma[0];
}

BilinearSet bilinear_covariants(const spinor::ClassicalSpinor& psi, Complex c_S) {
  const auto& g = clifford::gamma_rep(psi.rep).gamma;
  const Matrix4c e5 = g[0] * g[1] * g[2] * g[3];
  return covariants(dirac_adjoint(psi), psi.components, g, e5, -1.0, c_S, Signature::Minkowski,
                    "bilinear_covariants");
}

std::array<Complex, 6> raw_commutator_bilinears(const spinor::ClassicalSpinor& psi) {
  const auto& g = clifford::gamma_rep(psi.rep).gamma;
  const Row4c bar = dirac_adjoint(psi);
  std::array<Complex, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    out[i] = (bar * (g[mu] * g[nu] - g[nu] * g[mu]) * psi.components)(0, 0);
  }
  return out;
}

const clifford::Generators& euclidean_generators() {
  static const clifford::Generators gens = [] {
    clifford::Generators e;
    for (auto& m : e) m = Matrix4c::Zero();
    e[0].diagonal() << 1.0, 1.0, -1.0, -1.0;
    e[1](0, 3) = kI;
    e[1](1, 2) = kI;
    e[1](2, 1) = -kI;
    e[1](3, 0) = -kI;
    e[2](0, 3) = -1.0;
    e[2](1, 2) = 1.0;
    e[2](2, 1) = 1.0;
    e[2](3, 0) = -1.0;
    e[3](0, 2) = kI;
    e[3](1, 3) = -kI;
    e[3](2, 0) = -kI;
    e[3](3, 1) = kI;
    return e;
  }();
  return gens;
}

BilinearSet euclidean_bilinears(const Vector4c& psi, Complex c_S) {
  const auto& e = euclidean_generators();
  const Matrix4c e5 = e[0] * e[1] * e[2] * e[3];
  return covariants(psi.adjoint(), psi, e, e5, 1.0, c_S, Signature::Euclidean, "euclidean_bilinears");
}

EuclideanComponents euclidean_components_closed_form(const Vector4c& psi) {
  const Complex p1 = psi[0], p2 = psi[1], p3 = psi[2], p4 = psi[3];
  EuclideanComponents c;
  c.sigma = std::norm(p1) + std::norm(p2) + std::norm(p3) + std::norm(p4);
  c.omega = 2.0 * (p1 * std::conj(p3) + p2 * std::conj(p4)).real();
  c.J[0] = std::norm(p1) + std::norm(p2) - std::norm(p3) - std::norm(p4);
  c.J[1] = 2.0 * (p1 * std::conj(p4) + p2 * std::conj(p3)).imag();
  c.J[2] = 2.0 * (p2 * std::conj(p3) - p1 * std::conj(p4)).real();
  c.J[3] = -2.0 * (p3 * std::conj(p1) + p2 * std::conj(p4)).imag();
  return c;
}

EuclideanComponents quaternionic_euclidean_components(const spinor::Quaternion& q1,
                                                      const spinor::Quaternion& q2) {
  const double n1 = boost::math::norm(q1);
  const double n2 = boost::math::norm(q2);
  EuclideanComponents c;
  c.sigma = n1 + n2;
  c.omega = 2.0 * spinor::dot(q1, q2);
  c.J[0] = n1 - n2;
  const std::array<spinor::Quaternion, 3> units{spinor::Quaternion(0, 1, 0, 0), spinor::Quaternion(0, 0, 1, 0),
                                                spinor::Quaternion(0, 0, 0, 1)};
  for (int i = 0; i < 3; ++i) c.J[i + 1] = 2.0 * (boost::math::conj(q1) * units[i] * q2).real();
  return c;
}

Vector4c c4_from_quaternion_pair(const spinor::Quaternion& q1, const spinor::Quaternion& q2) {
  const auto [w1, x1, y1, z1] = spinor::components(q1);
  const auto [w2, x2, y2, z2] = spinor::components(q2);
  Vector4c psi;
  psi << Complex(w1, z1), Complex(y1, x1), Complex(w2, z2), Complex(y2, x2);
  return psi;
}

}  // namespace spinrep::bilinears
