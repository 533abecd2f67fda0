#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <memory>

#include "bosonic/combinatorics.hpp"
#include "bosonic/rng.hpp"

namespace bosonic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// An m x m unitary acting on the modes.
class Interferometer {
 public:
  /// Throws std::invalid_argument unless ||U^dagger U - I||_max <= 1e-12.
  explicit Interferometer(ComplexMatrix matrix);

  static Interferometer identity(unsigned m);

  unsigned modes() const { return static_cast<unsigned>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  Interferometer operator*(const Interferometer& other) const;

  static constexpr double kUnitarityTolerance = 1e-12;

 private:
  ComplexMatrix matrix_;
};

/// Largest entry of |A^dagger A - I|.
double unitarity_defect(const ComplexMatrix& a);

/// Haar-distributed U(m) element: Ginibre QR with the phases of diag(R)
/// folded into Q. Deterministic in `rng`.
Interferometer haar_unitary(unsigned m, CounterRng& rng);
Interferometer haar_unitary(unsigned m, std::uint64_t seed);

/// Ryser's formula with Gray-code subset order, O(2^k k). Per of the empty
/// matrix is 1.
Complex permanent(const ComplexMatrix& a);

namespace detail {
/// Glynn's formula, Gray-code order. Kept as an independent cross-check.
Complex permanent_glynn(const ComplexMatrix& a);
}  // namespace detail

/// <t| phi_n(U) |s> = Per(U_{t,s}) / sqrt(prod s_i! prod t_j!), where the
/// n x n submatrix takes row j of U t_j times (output) and column i s_i times
/// (input).
Complex amplitude(const Interferometer& u, const Occupation& input, const Occupation& output);

/// |amplitude|^2.
double output_probability(const Interferometer& u, const Occupation& input,
                          const Occupation& output);

/// Matrix of phi_n(U) on the n-photon sector; entry (t, s) = amplitude(u, s, t).
struct HomomorphismMatrix {
  std::shared_ptr<const FockBasis> basis;
  ComplexMatrix matrix;

  static constexpr double kUnitarityTolerance = 1e-9;
};

HomomorphismMatrix homomorphism_matrix(const Interferometer& u, unsigned n);

}  // namespace bosonic
