#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace blochest {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kWeightTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdEigenvalueFloor = -1e-10;

/// A total-spin sector of an n-qubit space. Spin labels are stored doubled
/// (two_j = 2j) so half-integer spins stay exact integers.
struct SpinSector {
  int n = 0;
  int two_j = 0;

  SpinSector() = default;
  SpinSector(int n, int two_j);  // throws std::invalid_argument on bad parity/range

  int dimension() const { return two_j + 1; }
  double j() const { return 0.5 * two_j; }

  // Sector matrices are indexed with m descending: index k holds two_m = two_j - 2k.
  int two_m_of_index(int k) const { return two_j - 2 * k; }
  int index_of_two_m(int two_m) const { return (two_j - two_m) / 2; }

  bool operator==(const SpinSector&) const = default;
};

/// All sectors of n qubits, highest spin first: two_j = n, n-2, ..., n mod 2.
std::vector<SpinSector> sectors_of(int n);

/// Exact binomial coefficient, valid for 0 <= n <= 64 (C(64,32) fits in 64 bits).
std::uint64_t binomial(int n, int k);

/// Multiplicity d_j of the spin-j sector: C(N, N/2-j) - C(N, N/2-j-1).
std::uint64_t sector_multiplicity(int n, int two_j);

/// Exact integer identity sum_j d_j (2j+1) == 2^n, for n <= 64.
bool sector_dimensions_sum_to_full_space(int n);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector normalized() const;  // throws std::domain_error on (near-)zero vector

  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline BlochVector z_axis() { return {0.0, 0.0, 1.0}; }
BlochVector cross(const BlochVector& a, const BlochVector& b);
/// Rotates v about the unit axis by the given angle (right-hand rule).
BlochVector rotated_vector(const BlochVector& v, const BlochVector& axis, double angle);

/// Sector density matrix lambda in the |j,m> basis, index k <-> two_m = two_j - 2k.
/// The constructor checks the shape; Hermiticity/PSD/trace are checked by
/// validate_schur_state so that invalid matrices can still be constructed and
/// reported.
struct SectorState {
  SpinSector sector;
  Matrix lambda;

  SectorState(SpinSector sector, Matrix lambda);
};

/// Single-particle reduction of a sector state: populations a, b along the
/// quantization axis (a + b = 1), coherence c, and the sector Bloch vector
/// (c + c*, -2 Im c, a - b) of length sqrt((a-b)^2 + 4|c|^2).
struct SectorReduction {
  double a = 0.5;
  double b = 0.5;
  Complex c{0.0, 0.0};
  BlochVector bloch;

  double length() const { return bloch.length(); }
};

SectorReduction sector_reduced_density(const SectorState& state);

struct SchurEntry {
  double weight = 0.0;
  SectorState state;
};

/// Permutation-invariant n-qubit state as sector weights p_j plus one
/// representative sector matrix per occupied sector. Absent sectors have
/// p_j = 0. The multiplicity average over equivalent alpha blocks is implied,
/// not stored.
struct SchurState {
  int n = 0;
  std::vector<SchurEntry> entries;
};

/// Local Bloch vector of the full state: (2/N) sum_j p_j j r_j.
BlochVector reduce_full(const SchurState& state);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks weights (nonnegative, sum 1), sector parity/uniqueness, and each
/// lambda for Hermiticity, unit trace, and positive semi-definiteness.
ValidationReport validate_schur_state(const SchurState& state);

// Spin operators in the (two_j+1)-dimensional irrep, same index convention as
// SectorState (k <-> m = j - k). J_- |j,m> = sqrt((j+m)(j-m+1)) |j,m-1>.
Matrix spin_z(int two_j);
Matrix spin_lowering(int two_j);
Matrix spin_x(int two_j);
Matrix spin_y(int two_j);

/// Rotation exp(-i angle (axis . J)) in the spin-j irrep; axis must be unit.
Matrix spin_rotation(int two_j, const BlochVector& axis, double angle);

/// A rotation mapping +z to the given unit direction (identity when direction
/// is +z, rotation about x by pi when it is -z).
Matrix rotation_z_to(int two_j, const BlochVector& direction);

SectorState rotated(const SectorState& state, const BlochVector& axis, double angle);
SchurState rotated(const SchurState& state, const BlochVector& axis, double angle);

}  // namespace blochest
