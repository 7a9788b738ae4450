#include "spinrep/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinrep::clifford {

namespace {

constexpr std::array<unsigned, kBladeCount> kSlotToMask{
    0b0000,                          // 1
    0b0001, 0b0010, 0b0100, 0b1000,  // e0 e1 e2 e3
    0b0011, 0b0101, 0b1001,          // e01 e02 e03
    0b0110, 0b1010, 0b1100,          // e12 e13 e23
    0b0111, 0b1011, 0b1101, 0b1110,  // e012 e013 e023 e123
    0b1111};

constexpr std::array<std::size_t, kBladeCount> make_mask_to_slot() {
  std::array<std::size_t, kBladeCount> out{};
  for (std::size_t slot = 0; slot < kBladeCount; ++slot) out[kSlotToMask[slot]] = slot;
  return out;
}
constexpr auto kMaskToSlot = make_mask_to_slot();

struct ProductEntry {
  std::size_t slot;
  double sign;
};
using ProductTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

// Sign of the permutation that sorts the concatenation a_bits ++ b_bits,
// counted as the number of pairs (i in a, j in b) with i > j.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (int j = 0; j < 4; ++j) {
    if (!(b & (1u << j))) continue;
    for (int i = j + 1; i < 4; ++i)
      if (a & (1u << i)) ++swaps;
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

constexpr ProductTable make_table(Signature sig) {
  ProductTable table{};
  for (std::size_t x = 0; x < kBladeCount; ++x) {
    for (std::size_t y = 0; y < kBladeCount; ++y) {
      const unsigned a = kSlotToMask[x];
      const unsigned b = kSlotToMask[y];
      double sign = reorder_sign(a, b);
      const unsigned common = a & b;
      for (int mu = 0; mu < 4; ++mu) {
        if ((common & (1u << mu)) && sig == Signature::Minkowski && mu > 0) sign = -sign;
      }
      table[x][y] = {kMaskToSlot[a ^ b], sign};
    }
  }
  return table;
}

constexpr ProductTable kMinkowskiTable = make_table(Signature::Minkowski);
constexpr ProductTable kEuclideanTable = make_table(Signature::Euclidean);

const ProductTable& table_for(Signature sig) {
  return sig == Signature::Minkowski ? kMinkowskiTable : kEuclideanTable;
}

double reversion_sign(int grade) {
  return ((grade * (grade - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
}

// [[0, sigma_k], [-sigma_k, 0]]
Matrix4c spatial_gamma(int k) {
  using C = Complex;
  Eigen::Matrix2cd s;
  switch (k) {
    case 1: s << C(0), C(1), C(1), C(0); break;
    case 2: s << C(0), -kI, kI, C(0); break;
    default: s << C(1), C(0), C(0), C(-1); break;
  }
  Matrix4c m = Matrix4c::Zero();
  m.block<2, 2>(0, 2) = s;
  m.block<2, 2>(2, 0) = -s;
  return m;
}

GammaRep make_weyl() {
  GammaRep rep{GammaTag::Weyl, {}};
  rep.gamma[0] = Matrix4c::Zero();
  rep.gamma[0].block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
  rep.gamma[0].block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
  for (int k = 1; k < 4; ++k) rep.gamma[k] = spatial_gamma(k);
  return rep;
}

GammaRep make_dirac() {
  GammaRep rep{GammaTag::Dirac, {}};
  rep.gamma[0] = Matrix4c::Identity();
  rep.gamma[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
  for (int k = 1; k < 4; ++k) rep.gamma[k] = spatial_gamma(k);
  return rep;
}

}  // namespace

std::string_view to_string(Signature sig) {
  return sig == Signature::Minkowski ? "minkowski" : "euclidean";
}

Signature signature_from_string(std::string_view name) {
  if (name == "minkowski") return Signature::Minkowski;
  if (name == "euclidean") return Signature::Euclidean;
  throw std::invalid_argument("unknown signature '" + std::string(name) + "'");
}

double metric(Signature sig, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("generator index must be 0..3");
  return (sig == Signature::Minkowski && mu > 0) ? -1.0 : 1.0;
}

unsigned blade_mask(std::size_t slot) { return kSlotToMask.at(slot); }

std::size_t blade_slot(unsigned mask) {
  if (mask >= kBladeCount) throw std::out_of_range("blade mask out of range");
  return kMaskToSlot[mask];
}

int blade_grade(std::size_t slot) { return std::popcount(blade_mask(slot)); }

std::string blade_name(std::size_t slot) {
  const unsigned mask = blade_mask(slot);
  if (mask == 0) return "1";
  std::string name = "e";
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) name += static_cast<char>('0' + mu);
  return name;
}

std::size_t bivector_slot(int mu, int nu) {
  if (mu < 0 || nu > 3 || mu >= nu) throw std::out_of_range("bivector indices must satisfy 0 <= mu < nu <= 3");
  return blade_slot((1u << mu) | (1u << nu));
}

Multivector Multivector::scalar(Signature sig, Complex value) {
  Multivector out(sig);
  out.coeffs_[0] = value;
  return out;
}

Multivector Multivector::basis(Signature sig, int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("generator index must be 0..3");
  Multivector out(sig);
  out.coeffs_[blade_slot(1u << mu)] = 1.0;
  return out;
}

Multivector Multivector::blade(Signature sig, std::initializer_list<int> generators) {
  Multivector out = scalar(sig, 1.0);
  for (int mu : generators) out = out * basis(sig, mu);
  return out;
}

Multivector Multivector::pseudoscalar(Signature sig) { return blade(sig, {0, 1, 2, 3}); }

Complex Multivector::bivector(int mu, int nu) const {
  if (mu == nu) return 0.0;
  return mu < nu ? coeffs_[bivector_slot(mu, nu)] : -coeffs_[bivector_slot(nu, mu)];
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (rhs.sig_ != sig_) throw std::invalid_argument("multivector signature mismatch");
  for (std::size_t i = 0; i < kBladeCount; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (rhs.sig_ != sig_) throw std::invalid_argument("multivector signature mismatch");
  for (std::size_t i = 0; i < kBladeCount; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(Complex factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

double Multivector::max_norm() const {
  double out = 0.0;
  for (const auto& c : coeffs_) out = std::max(out, std::abs(c));
  return out;
}

double Multivector::norm() const {
  double sum = 0.0;
  for (const auto& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
Multivector operator-(Multivector value) { return value *= -1.0; }
Multivector operator*(Multivector lhs, Complex factor) { return lhs *= factor; }
Multivector operator*(Complex factor, Multivector rhs) { return rhs *= factor; }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw std::invalid_argument("geometric product of multivectors with different signatures");
  const ProductTable& table = table_for(a.signature());
  Multivector out(a.signature());
  for (std::size_t x = 0; x < kBladeCount; ++x) {
    const Complex ax = a[x];
    if (ax == 0.0) continue;
    for (std::size_t y = 0; y < kBladeCount; ++y) {
      const Complex by = b[y];
      if (by == 0.0) continue;
      const ProductEntry& e = table[x][y];
      out[e.slot] += e.sign * ax * by;
    }
  }
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

Multivector reversion(const Multivector& a) {
  Multivector out = a;
  for (std::size_t slot = 0; slot < kBladeCount; ++slot) out[slot] *= reversion_sign(blade_grade(slot));
  return out;
}

Multivector conjugate(const Multivector& a) {
  Multivector out = a;
  for (std::size_t slot = 0; slot < kBladeCount; ++slot) out[slot] = std::conj(a[slot]);
  return out;
}

Multivector grade_projection(const Multivector& a, int k) {
  if (k < 0 || k > 4) throw std::out_of_range("grade must be in 0..4");
  Multivector out(a.signature());
  for (std::size_t slot = 0; slot < kBladeCount; ++slot)
    if (blade_grade(slot) == k) out[slot] = a[slot];
  return out;
}

Multivector adjoint_dagger(const Multivector& a) {
  if (a.signature() != Signature::Minkowski)
    throw std::invalid_argument("adjoint_dagger is defined for the Minkowski signature only");
  const Multivector e0 = Multivector::basis(Signature::Minkowski, 0);
  return e0 * conjugate(reversion(a)) * e0;
}

Multivector idempotent_f(bool complexified) {
  constexpr auto sig = Signature::Minkowski;
  const Multivector one = Multivector::scalar(sig, 1.0);
  const Multivector half_plus = 0.5 * (one + Multivector::basis(sig, 0));
  if (!complexified) return half_plus;
  return half_plus * (0.5 * (one + kI * Multivector::blade(sig, {1, 2})));
}

std::string_view to_string(GammaTag tag) { return tag == GammaTag::Weyl ? "weyl" : "dirac"; }

GammaTag gamma_tag_from_string(std::string_view name) {
  if (name == "weyl") return GammaTag::Weyl;
  if (name == "dirac") return GammaTag::Dirac;
  throw std::invalid_argument("unknown gamma representation '" + std::string(name) + "'");
}

const GammaRep& gamma_rep(GammaTag tag) {
  static const GammaRep weyl = make_weyl();
  static const GammaRep dirac = make_dirac();
  return tag == GammaTag::Weyl ? weyl : dirac;
}

const Matrix4c& weyl_to_dirac() {
  static const Matrix4c u = [] {
    Matrix4c m;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    m.block<2, 2>(0, 0) = id;
    m.block<2, 2>(0, 2) = id;
    m.block<2, 2>(2, 0) = -id;
    m.block<2, 2>(2, 2) = id;
    return Matrix4c(m / std::sqrt(2.0));
  }();
  return u;
}

Matrix4c blade_matrix(std::size_t slot, const Generators& generators) {
  Matrix4c m = Matrix4c::Identity();
  const unsigned mask = blade_mask(slot);
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) m = m * generators[mu];
  return m;
}

Matrix4c rep_matrix(const Multivector& a, const Generators& generators) {
  Matrix4c out = Matrix4c::Zero();
  for (std::size_t slot = 0; slot < kBladeCount; ++slot)
    if (a[slot] != 0.0) out += a[slot] * blade_matrix(slot, generators);
  return out;
}

Matrix4c rep_matrix(const Multivector& a, const GammaRep& rep) {
  if (a.signature() != Signature::Minkowski)
    throw std::invalid_argument("gamma representations exist for Cl(1,3) only");
  return rep_matrix(a, rep.gamma);
}

}  // namespace spinrep::clifford
