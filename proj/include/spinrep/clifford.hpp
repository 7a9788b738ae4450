#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace spinrep {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr Complex kI{0.0, 1.0};

}  // namespace spinrep

namespace spinrep::clifford {

enum class Signature { Minkowski, Euclidean };

std::string_view to_string(Signature sig);
Signature signature_from_string(std::string_view name);

// Diagonal metric entry eta_{mu mu}: (+,-,-,-) or (+,+,+,+).
double metric(Signature sig, int mu);

inline constexpr std::size_t kBladeCount = 16;

// Blades are stored in grade-then-lexicographic order:
//   1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23, e012, e013, e023, e123, e0123.
// Internally every blade is also identified by the bitmask of its generators.
unsigned blade_mask(std::size_t slot);
std::size_t blade_slot(unsigned mask);
int blade_grade(std::size_t slot);
std::string blade_name(std::size_t slot);

// Slot of the bivector e_mu e_nu (mu < nu), indexed 0..5 as 01,02,03,12,13,23.
std::size_t bivector_slot(int mu, int nu);
inline constexpr std::array<std::array<int, 2>, 6> kBivectorPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

class Multivector {
 public:
  using Coefficients = std::array<Complex, kBladeCount>;

  explicit Multivector(Signature sig = Signature::Minkowski) : sig_(sig) { coeffs_.fill(0.0); }
  Multivector(Signature sig, const Coefficients& coeffs) : sig_(sig), coeffs_(coeffs) {}

  static Multivector scalar(Signature sig, Complex value);
  static Multivector basis(Signature sig, int mu);
  // Product of the listed generators, in the given order.
  static Multivector blade(Signature sig, std::initializer_list<int> generators);
  static Multivector pseudoscalar(Signature sig);

  Signature signature() const { return sig_; }
  const Coefficients& coeffs() const { return coeffs_; }
  Complex operator[](std::size_t slot) const { return coeffs_.at(slot); }
  Complex& operator[](std::size_t slot) { return coeffs_.at(slot); }

  // Coefficient of the normalized blade e_mu e_nu for any mu != nu
  // (antisymmetric extension of the stored mu < nu slot).
  Complex bivector(int mu, int nu) const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(Complex factor);

  double max_norm() const;
  double norm() const;
  bool is_zero(double tol = 0.0) const { return max_norm() <= tol; }

 private:
  Signature sig_;
  Coefficients coeffs_;
};

Multivector operator+(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector value);
Multivector operator*(Multivector lhs, Complex factor);
Multivector operator*(Complex factor, Multivector rhs);

// Geometric product. Throws std::invalid_argument on signature mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector operator*(const Multivector& a, const Multivector& b);

// Grade-k part scaled by (-1)^{k(k-1)/2}.
Multivector reversion(const Multivector& a);
// Complex conjugate of every coefficient.
Multivector conjugate(const Multivector& a);
// Throws std::out_of_range for k outside 0..4.
Multivector grade_projection(const Multivector& a, int k);
// A^dagger = e0 reversion(A)^* e0. Minkowski only; throws std::invalid_argument otherwise.
Multivector adjoint_dagger(const Multivector& a);
// 1/2 (1 + e0), or the complexified 1/4 (1 + e0)(1 + i e1 e2).
Multivector idempotent_f(bool complexified);

// Gamma matrix representations of Cl(1,3).
enum class GammaTag { Weyl, Dirac };

std::string_view to_string(GammaTag tag);
GammaTag gamma_tag_from_string(std::string_view name);

struct GammaRep {
  GammaTag tag;
  std::array<Matrix4c, 4> gamma;
};

// Weyl: gamma0 = [[0, I], [I, 0]], gamma_k = [[0, sigma_k], [-sigma_k, 0]].
// Dirac: gamma0 = diag(I, -I), gamma_k as in Weyl.
const GammaRep& gamma_rep(GammaTag tag);

// U with gamma^Dirac_mu = U gamma^Weyl_mu U^dagger; psi_Dirac = U psi_Weyl.
const Matrix4c& weyl_to_dirac();

using Generators = std::array<Matrix4c, 4>;

// Image of a Minkowski multivector under e_mu -> gamma_mu.
// Throws std::invalid_argument for a Euclidean multivector.
Matrix4c rep_matrix(const Multivector& a, const GammaRep& rep);
// Same, for an arbitrary generator set (no signature check).
Matrix4c rep_matrix(const Multivector& a, const Generators& generators);
// Ordered product of the generators making up one blade slot.
Matrix4c blade_matrix(std::size_t slot, const Generators& generators);

}  // namespace spinrep::clifford
