#include "spinrep/fierz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinrep::fierz {

using clifford::Signature;

namespace {

Multivector bivector_from_upper(const std::array<double, 6>& upper, Signature sig) {
  Multivector out(sig);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    out[clifford::bivector_slot(mu, nu)] = upper[i];
  }
  return out;
}

void require_signature(const BilinearSet& b, Signature sig, const char* where) {
  if (b.signature != sig)
    throw std::invalid_argument(std::string(where) + ": expected " + std::string(clifford::to_string(sig)) +
                                " covariants");
}

}  // namespace

Multivector vector_part(const std::array<double, 4>& lower, Signature sig) {
  Multivector out(sig);
  for (int mu = 0; mu < 4; ++mu) out[clifford::blade_slot(1u << mu)] = clifford::metric(sig, mu) * lower[mu];
  return out;
}

Multivector bivector_part(const BilinearSet& b) {
  std::array<double, 6> upper{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    upper[i] = clifford::metric(b.signature, mu) * clifford::metric(b.signature, nu) * b.S[i];
  }
  return bivector_from_upper(upper, b.signature);
}

Multivector wedge(const std::array<double, 4>& a, const std::array<double, 4>& b, Signature sig) {
  std::array<double, 6> upper{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    const double factor = clifford::metric(sig, mu) * clifford::metric(sig, nu);
    upper[i] = factor * (a[mu] * b[nu] - a[nu] * b[mu]);
  }
  return bivector_from_upper(upper, sig);
}

double FpkResiduals::max_abs() const {
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

FpkResiduals fpk_residuals(const BilinearSet& b) {
  require_signature(b, Signature::Minkowski, "fpk_residuals");
  constexpr auto sig = Signature::Minkowski;
  const double jj = bilinears::dot(b.J, b.J, sig);
  FpkResiduals r;
  r.r1 = jj - b.sigma * b.sigma - b.omega * b.omega;
  r.r2 = bilinears::dot(b.K, b.K, sig) + jj;
  r.r3 = bilinears::dot(b.J, b.K, sig);
  const Multivector factor =
      Multivector::scalar(sig, b.omega) + Complex(b.sigma) * Multivector::pseudoscalar(sig);
  r.r4 = (wedge(b.J, b.K, sig) + factor * bivector_part(b)).max_norm();
  return r;
}

double EuclideanFierzResiduals::max_abs() const {
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
}

EuclideanFierzResiduals euclidean_fierz_residuals(const BilinearSet& b) {
  require_signature(b, Signature::Euclidean, "euclidean_fierz_residuals");
  constexpr auto sig = Signature::Euclidean;
  const double jj = bilinears::dot(b.J, b.J, sig);
  const Multivector e5 = Multivector::pseudoscalar(sig);
  const Multivector jk = wedge(b.J, b.K, sig);
  const Multivector s = bivector_part(b);
  EuclideanFierzResiduals r;
  r.r1 = jj - b.sigma * b.sigma + b.omega * b.omega;
  r.r2 = jj - bilinears::dot(b.K, b.K, sig);
  r.r3 = bilinears::dot(b.J, b.K, sig);
  r.r4 = (jk - (Multivector::scalar(sig, b.omega) - Complex(b.sigma) * e5) * s).max_norm();
  r.r4_swapped = (jk - (Multivector::scalar(sig, b.sigma) - Complex(b.omega) * e5) * s).max_norm();
  return r;
}

Multivector aggregate(const BilinearSet& b) {
  require_signature(b, Signature::Minkowski, "aggregate");
  constexpr auto sig = Signature::Minkowski;
  const Multivector e5 = Multivector::pseudoscalar(sig);
  Multivector z = Multivector::scalar(sig, b.sigma);
  z += vector_part(b.J, sig);
  z += kI * bivector_part(b);
  z += kI * (vector_part(b.K, sig) * e5);
  z += Complex(b.omega) * e5;
  return z;
}

double boomerang_residual(const Multivector& z, double sigma) { return (z * z - Complex(4.0 * sigma) * z).max_norm(); }

bool is_boomerang(const Multivector& z, double sigma, double tol) {
  const double scale = z.norm();
  return boomerang_residual(z, sigma) <= tol * scale * scale;
}

std::array<double, 5> generalized_fpk_residuals(const Multivector& z, const BilinearSet& b, Complex c_S) {
  require_signature(b, Signature::Minkowski, "generalized_fpk_residuals");
  constexpr auto sig = Signature::Minkowski;
  const Multivector e5 = Multivector::pseudoscalar(sig);
  const auto residual = [&](const Multivector& gamma, double value) {
    return (Complex(0.25) * (z * gamma * z) - Complex(value) * z).max_norm();
  };

  std::array<double, 5> out{};
  out[0] = residual(Multivector::scalar(sig, 1.0), b.sigma);
  for (int mu = 0; mu < 4; ++mu) {
    const Multivector e_mu = Multivector::basis(sig, mu);
    out[1] = std::max(out[1], residual(e_mu, b.J[mu]));
    out[3] = std::max(out[3], residual(kI * (e5 * e_mu), b.K[mu]));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = clifford::kBivectorPairs[i];
    const Multivector a = Multivector::basis(sig, mu);
    const Multivector c = Multivector::basis(sig, nu);
    out[2] = std::max(out[2], residual(c_S * (a * c - c * a), b.S[i]));
  }
  out[4] = residual(-e5, b.omega);
  return out;
}

Multivector build_singular_aggregate(const SingularAggregateParams& p) {
  constexpr auto sig = Signature::Minkowski;
  constexpr double tol = 1e-12;
  const auto upper_dot = [](const std::array<double, 4>& a, const std::array<double, 4>& c) {
    return a[0] * c[0] - a[1] * c[1] - a[2] * c[2] - a[3] * c[3];
  };
  double j_scale = 0.0, s_scale = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    j_scale += p.J[mu] * p.J[mu];
    s_scale += p.s[mu] * p.s[mu];
  }
  if (j_scale == 0.0) throw std::invalid_argument("build_singular_aggregate: J must be nonzero");
  if (std::abs(upper_dot(p.J, p.J)) > tol * j_scale)
    throw std::invalid_argument("build_singular_aggregate: J must be lightlike");
  if (!(upper_dot(p.s, p.s) < -tol * s_scale) || s_scale == 0.0)
    throw std::invalid_argument("build_singular_aggregate: s must be space-like");
  if (std::abs(upper_dot(p.s, p.J)) > tol * std::sqrt(j_scale * s_scale))
    throw std::invalid_argument("build_singular_aggregate: s must be orthogonal to J");

  Multivector j(sig), s(sig);
  for (int mu = 0; mu < 4; ++mu) {
    j[clifford::blade_slot(1u << mu)] = p.J[mu];
    s[clifford::blade_slot(1u << mu)] = p.s[mu];
  }
  const Multivector factor = Multivector::scalar(sig, 1.0) + kI * s + Complex(0.0, p.h) * Multivector::pseudoscalar(sig);
  return j * factor;
}

double ray_sine(const Vector4c& a, const Vector4c& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("ray_sine: zero vector");
  const Complex overlap = a.dot(b) / (na * na);
  return (b - overlap * a).norm() / nb;
}

Reconstruction reconstruct(const Multivector& z, const spinor::ClassicalSpinor& xi,
                           const std::optional<spinor::ClassicalSpinor>& psi_ref) {
  const auto& rep = clifford::gamma_rep(xi.rep);
  const Matrix4c zm = clifford::rep_matrix(z, rep);
  const Vector4c zxi = zm * xi.components;
  const Complex kernel = (xi.components.adjoint() * rep.gamma[0] * zxi)(0, 0);
  const double scale = zm.norm() * xi.components.squaredNorm();
  if (!(std::abs(kernel) > 1e-10 * scale))
    throw std::domain_error(
        "reconstruct: xi^dagger gamma0 Z xi vanishes for this test spinor; choose a different xi");

  Reconstruction out{{zxi / (2.0 * std::sqrt(kernel)), xi.rep}, kernel};
  if (psi_ref) {
    const Vector4c ref = spinor::to_representation(*psi_ref, xi.rep).components;
    const Complex overlap = out.psi.components.dot(ref);
    if (std::abs(overlap) > 0.0) out.psi.components *= overlap / std::abs(overlap);
  }
  return out;
}

Reconstruction reconstruct(const Multivector& z, clifford::GammaTag tag,
                           const std::optional<spinor::ClassicalSpinor>& psi_ref) {
  const auto& rep = clifford::gamma_rep(tag);
  const Matrix4c g0z = rep.gamma[0] * clifford::rep_matrix(z, rep);
  int best = 0;
  for (int a = 1; a < 4; ++a)
    if (std::abs(g0z(a, a)) > std::abs(g0z(best, best))) best = a;
  spinor::ClassicalSpinor xi;
  xi.rep = tag;
  xi.components[best] = 1.0;
  return reconstruct(z, xi, psi_ref);
}

}  // namespace spinrep::fierz
