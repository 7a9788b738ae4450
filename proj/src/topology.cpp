#include "spinrep/topology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinrep/fierz.hpp"

namespace spinrep::topology {

BilinearPoint project_regular(const BilinearPoint& p) {
  BilinearPoint out = p;
  out.K.fill(0.0);
  out.S.fill(0.0);
  return out;
}

namespace {

void validate(const PlanePath& path) {
  if (path.points.size() < 3) throw std::invalid_argument("winding_number: a path needs at least 3 points");
  if (path.points.front() != path.points.back())
    throw std::invalid_argument("winding_number: path is not closed (first point must equal last)");
}

}  // namespace

WindingReport winding_number(const PlanePath& path) {
  validate(path);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    const auto [ax, ay] = path.points[i];
    const auto [bx, by] = path.points[i + 1];
    const double na = std::hypot(ax, ay), nb = std::hypot(bx, by);
    if (na == 0.0 || nb == 0.0)
      throw std::domain_error("winding_number: vertex " + std::to_string(na == 0.0 ? i : i + 1) +
                              " lies at the origin");
    const double cross = ax * by - ay * bx;
    const double dot = ax * bx + ay * by;
    if (std::abs(cross) <= 1e-14 * na * nb && dot < 0.0)
      throw std::domain_error("winding_number: segment " + std::to_string(i) + " passes through the origin");
    const double step = std::atan2(cross, dot);
    if (std::abs(step) >= std::numbers::pi / 2)
      throw std::domain_error("winding_number: segment " + std::to_string(i) +
                              " turns by pi/2 or more around the origin; refine the path");
    total += step;
  }
  WindingReport report;
  report.raw_turns = total / (2.0 * std::numbers::pi);
  report.winding = static_cast<int>(std::lround(report.raw_turns));
  report.residue = std::abs(report.raw_turns - report.winding);
  if (report.residue >= 0.01)
    throw std::domain_error("winding_number: rounding residue " + std::to_string(report.residue) +
                            " is too large; refine the path");
  return report;
}

double winding_quadrature(const PlanePath& path, int subdivisions) {
  validate(path);
  if (subdivisions < 1) throw std::invalid_argument("winding_quadrature: subdivisions must be positive");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
    const auto [ax, ay] = path.points[i];
    const auto [bx, by] = path.points[i + 1];
    const double dx = (bx - ax) / subdivisions, dy = (by - ay) / subdivisions;
    for (int k = 0; k < subdivisions; ++k) {
      const double t = (k + 0.5) / subdivisions;
      const double x = ax + t * (bx - ax), y = ay + t * (by - ay);
      total += (x * dy - y * dx) / (x * x + y * y);
    }
  }
  return total / (2.0 * std::numbers::pi);
}

double regular_sphere_check(const Vector4c& psi) {
  const auto b = bilinears::euclidean_bilinears(psi);
  if (std::abs(b.sigma - 1.0) > 1e-8)
    throw std::invalid_argument("regular_sphere_check: sigma = " + std::to_string(b.sigma) +
                                "; normalize psi so that sigma = 1");
  const double jj = bilinears::dot(b.J, b.J, clifford::Signature::Euclidean);
  return std::abs(jj + b.omega * b.omega - 1.0);
}

bool fpk_membership(const BilinearPoint& p, double tol) {
  const double scale = p.max_abs();
  const double residual = p.signature == clifford::Signature::Minkowski
                              ? fierz::fpk_residuals(p).max_abs()
                              : fierz::euclidean_fierz_residuals(p).max_abs();
  return residual <= tol * scale * scale;
}

}  // namespace spinrep::topology
