#pragma once

#include <array>
#include <vector>

#include "spinrep/bilinears.hpp"

namespace spinrep::topology {

using BilinearPoint = bilinears::BilinearSet;

// (sigma, J, K, S, omega) -> (sigma, J, 0, 0, omega)
BilinearPoint project_regular(const BilinearPoint& p);

struct PlanePath {
  std::vector<std::array<double, 2>> points;  // (sigma, omega), first == last
};

struct WindingReport {
  int winding = 0;
  double raw_turns = 0.0;  // total signed angle / 2 pi
  double residue = 0.0;    // |raw_turns - winding|
};

// Throws std::invalid_argument for malformed paths (fewer than 3 points, not closed)
// and std::domain_error when a vertex or segment meets the origin, a segment turns
// by pi/2 or more, or the rounding residue reaches 0.01.
WindingReport winding_number(const PlanePath& path);

// Midpoint-rule quadrature of (sigma d omega - omega d sigma) / (sigma^2 + omega^2) / 2 pi,
// with each segment split into `subdivisions` pieces.
double winding_quadrature(const PlanePath& path, int subdivisions);

// |J^2 + omega^2 - 1| for the Euclidean covariants of psi.
// Throws std::invalid_argument when |sigma - 1| > 1e-8.
double regular_sphere_check(const Vector4c& psi);

// FPK residuals within tol times the squared largest component of P.
bool fpk_membership(const BilinearPoint& p, double tol);

}  // namespace spinrep::topology
