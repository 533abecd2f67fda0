#pragma once

#include <vector>

#include "bosonic/combinatorics.hpp"
#include "bosonic/ladder.hpp"
#include "bosonic/rational.hpp"

namespace bosonic {

/// d_k = (2k+m-1)/(m-1) C(k+m-2, k)^2. Throws DegenerateModesError for m = 1.
BigInt irrep_dim(unsigned m, unsigned k);

/// alpha_{r,j+1,n} = (n-r)! (m+n+r-1)! / ((j-r)! (j+m+r-1)!), for r <= j <= n.
Rational alpha(unsigned r, unsigned j, unsigned n, unsigned m);

/// beta(r, k) = (k-r+1)(m+r+k), eigenvalue of L R on the r-th irrep of W_k.
Rational beta(unsigned r, unsigned k, unsigned m);

/// All components P_0(O), ..., P_n(O). They sum to O and are pairwise
/// orthogonal.
std::vector<SectorOperator> decompose(const SectorOperator& o);
std::vector<DiagonalOperator> decompose(const DiagonalOperator& o);

SectorOperator project(const SectorOperator& o, unsigned k);
DiagonalOperator project(const DiagonalOperator& o, unsigned k);

/// g_l(O) = Tr[(L^{n-l} O)^2] for l = 0..n.
std::vector<Rational> g_values(const DiagonalOperator& o);
std::vector<double> g_values(const SectorOperator& o);

/// ||P_k(O)||^2 from the g-values alone. The dense overload requires a
/// hermitian operator.
Rational irrep_norm_closed(const DiagonalOperator& o, unsigned k);
double irrep_norm_closed(const SectorOperator& o, unsigned k);
std::vector<Rational> irrep_norms_closed(const DiagonalOperator& o);
std::vector<double> irrep_norms_closed(const SectorOperator& o);

/// g_l(|R><R|) = ((n-l)!)^2 sum_{|b| = n-l, b <= R} prod_i C(R_i, b_i)^2.
BigInt g_fock(const Occupation& r, unsigned l);

/// sum over all R in the (m, n) basis of g_{n-k}(|R><R|).
Rational g_fock_sum(unsigned m, unsigned n, unsigned k);

template <typename Norm>
struct IrrepSpectrum {
  struct Entry {
    unsigned k;
    BigInt dim;
    Norm norm_sq;
  };
  unsigned m = 0;
  unsigned n = 0;
  std::vector<Entry> entries;

  Norm total() const {
    Norm t = 0;
    for (const auto& e : entries) t += e.norm_sq;
    return t;
  }
};

IrrepSpectrum<Rational> spectrum(const DiagonalOperator& o);
IrrepSpectrum<double> spectrum(const SectorOperator& o);

/// Nullity of the assembled lowering map W_n -> W_{n-1}. Refuses D > 64.
BigInt kernel_dim_check(unsigned m, unsigned n);

}  // namespace bosonic
