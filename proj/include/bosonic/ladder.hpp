#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <memory>
#include <vector>

#include "bosonic/combinatorics.hpp"
#include "bosonic/interferometer.hpp"
#include "bosonic/rational.hpp"

namespace bosonic {

/// Dense complex operator on the n-photon sector W_n.
class SectorOperator {
 public:
  SectorOperator(std::shared_ptr<const FockBasis> basis, ComplexMatrix matrix);

  static SectorOperator zero(unsigned m, unsigned n);
  static SectorOperator identity(unsigned m, unsigned n);
  /// |s><s|.
  static SectorOperator fock_projector(const Occupation& s);

  unsigned modes() const { return basis_->modes(); }
  unsigned photons() const { return basis_->photons(); }
  std::size_t dim() const { return basis_->size(); }
  const std::shared_ptr<const FockBasis>& basis() const { return basis_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Fixed at construction: matrix == matrix^dagger within 1e-12 (relative to ||X||_max).
  bool hermitian() const { return hermitian_; }

  SectorOperator operator+(const SectorOperator& other) const;
  SectorOperator operator-(const SectorOperator& other) const;
  SectorOperator operator*(Complex scale) const;

  static constexpr double kHermitianTolerance = 1e-12;

 private:
  std::shared_ptr<const FockBasis> basis_;
  ComplexMatrix matrix_;
  bool hermitian_;
};

/// Exact operator diagonal in the Fock basis (Fock projectors and their
/// ladder images). Always hermitian.
class DiagonalOperator {
 public:
  DiagonalOperator(std::shared_ptr<const FockBasis> basis, std::vector<Rational> diagonal);

  static DiagonalOperator zero(unsigned m, unsigned n);
  static DiagonalOperator identity(unsigned m, unsigned n);
  static DiagonalOperator fock_projector(const Occupation& s);

  unsigned modes() const { return basis_->modes(); }
  unsigned photons() const { return basis_->photons(); }
  std::size_t dim() const { return basis_->size(); }
  const std::shared_ptr<const FockBasis>& basis() const { return basis_; }
  const std::vector<Rational>& diagonal() const { return diagonal_; }
  const Rational& operator[](std::size_t i) const { return diagonal_[i]; }

  bool hermitian() const { return true; }
  bool is_zero() const;

  SectorOperator to_dense() const;

  DiagonalOperator operator+(const DiagonalOperator& other) const;
  DiagonalOperator operator-(const DiagonalOperator& other) const;
  DiagonalOperator operator*(const Rational& scale) const;

  friend bool operator==(const DiagonalOperator& a, const DiagonalOperator& b);

 private:
  std::shared_ptr<const FockBasis> basis_;
  std::vector<Rational> diagonal_;
};

/// L(X) = sum_s a_s X a_s^dagger : W_n -> W_{n-1}. Throws for n = 0.
SectorOperator lower(const SectorOperator& x);
DiagonalOperator lower(const DiagonalOperator& x);

/// R(X) = sum_s a_s^dagger X a_s : W_n -> W_{n+1}.
SectorOperator raise(const SectorOperator& x);
DiagonalOperator raise(const DiagonalOperator& x);

/// j-fold lowering; j = 0 is the identity. Throws for j > n.
SectorOperator lower_power(const SectorOperator& x, unsigned j);
DiagonalOperator lower_power(const DiagonalOperator& x, unsigned j);
SectorOperator raise_power(const SectorOperator& x, unsigned j);
DiagonalOperator raise_power(const DiagonalOperator& x, unsigned j);

/// The scalar m + 2n by which H = [L, R] acts on W_n.
unsigned long commutator_h(unsigned n, unsigned m);

Complex trace(const SectorOperator& x);
Rational trace(const DiagonalOperator& x);

/// Hilbert-Schmidt pairing Tr[A^dagger B].
Complex hs_inner(const SectorOperator& a, const SectorOperator& b);
Rational hs_inner(const DiagonalOperator& a, const DiagonalOperator& b);
double hs_norm_sq(const SectorOperator& x);
Rational hs_norm_sq(const DiagonalOperator& x);

/// phi_n(U) X phi_n(U)^dagger.
SectorOperator conjugate(const HomomorphismMatrix& phi, const SectorOperator& x);

// ---------------------------------------------------------------------------
// Assembled ladder maps on vectorized operator spaces. vec(X) stacks columns:
// entry (p, q) of X sits at p + D q.

using ExactMap = Eigen::SparseMatrix<std::int64_t>;
using RealMap = Eigen::SparseMatrix<double>;

/// Matrices of L : W_n -> W_{n-1} and R : W_n -> W_{n+1} in the orthonormal
/// basis |P><Q|.
RealMap lower_map(unsigned m, unsigned n);
RealMap raise_map(unsigned m, unsigned n);

/// The same maps in the rescaled basis E_PQ = sqrt(P! Q!) |P><Q|, where every
/// entry is an integer: L E_PQ = sum_s p_s q_s E_{P-e_s, Q-e_s} and
/// R E_PQ = sum_s E_{P+e_s, Q+e_s}. The rescaling is a diagonal similarity,
/// so commutation identities can be checked exactly here.
ExactMap lower_map_exact(unsigned m, unsigned n);
ExactMap raise_map_exact(unsigned m, unsigned n);

/// Exact rank over the rationals.
std::size_t exact_rank(const ExactMap& map);

}  // namespace bosonic
