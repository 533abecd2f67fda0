#pragma once

// Brute-force reference implementations. Nothing here calls into the code
// under test except for types.

#include <Eigen/Dense>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Counts = std::vector<unsigned>;
using Complex = std::complex<double>;

/// All occupation vectors of n photons in m modes, lexicographically sorted.
inline void fill_states(Counts& c, unsigned i, unsigned left, std::vector<Counts>& out) {
  if (i + 1 == c.size()) {
    c[i] = left;
    out.push_back(c);
    return;
  }
  for (unsigned v = 0; v <= left; ++v) {
    c[i] = v;
    fill_states(c, i + 1, left - v, out);
  }
}

inline std::vector<Counts> fock_states(unsigned m, unsigned n) {
  std::vector<Counts> out;
  Counts c(m, 0);
  fill_states(c, 0, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::map<Counts, std::size_t> index_of(const std::vector<Counts>& states) {
  std::map<Counts, std::size_t> idx;
  for (std::size_t i = 0; i < states.size(); ++i) idx[states[i]] = i;
  return idx;
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return factorial(unsigned(n)) / (factorial(unsigned(k)) * factorial(unsigned(n - k)));
}

inline mpq_class rising(const mpq_class& x, unsigned p) {
  mpq_class out = 1;
  for (unsigned i = 0; i < p; ++i) out *= x + i;
  return out;
}

/// Term-by-term 2F1(-k, a; b; z).
inline mpq_class hyp2f1(unsigned k, const mpq_class& a, const mpq_class& b, const mpq_class& z) {
  mpq_class sum = 0;
  mpq_class zp = 1;
  for (unsigned p = 0; p <= k; ++p) {
    mpq_class term = rising(mpq_class(-long(k)), p) * rising(a, p) / (rising(b, p) * mpq_class(factorial(p)));
    sum += term * zp;
    zp *= z;
  }
  return sum;
}

/// Permutation-sum permanent.
inline Complex permanent(const Eigen::MatrixXcd& a) {
  const int n = int(a.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0;
  do {
    Complex p = 1;
    for (int i = 0; i < n; ++i) p *= a(i, perm[i]);
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Matrix of the annihilation operator a_s from the n-photon to the
/// (n-1)-photon sector, in the sorted bases above.
inline Eigen::MatrixXd annihilation(unsigned m, unsigned n, unsigned s) {
  const auto hi = fock_states(m, n);
  const auto lo = fock_states(m, n - 1);
  const auto lo_idx = index_of(lo);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(lo.size(), hi.size());
  for (std::size_t j = 0; j < hi.size(); ++j) {
    if (hi[j][s] == 0) continue;
    Counts t = hi[j];
    --t[s];
    a(lo_idx.at(t), j) = std::sqrt(double(hi[j][s]));
  }
  return a;
}

/// L(X) = sum_s a_s X a_s^dagger from explicit operator matrices.
inline Eigen::MatrixXcd lower(const Eigen::MatrixXcd& x, unsigned m, unsigned n) {
  const auto lo = fock_states(m, n - 1);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(lo.size(), lo.size());
  for (unsigned s = 0; s < m; ++s) {
    const Eigen::MatrixXcd a = annihilation(m, n, s).cast<Complex>();
    out += a * x * a.adjoint();
  }
  return out;
}

/// R(X) = sum_s a_s^dagger X a_s.
inline Eigen::MatrixXcd raise(const Eigen::MatrixXcd& x, unsigned m, unsigned n) {
  const auto hi = fock_states(m, n + 1);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(hi.size(), hi.size());
  for (unsigned s = 0; s < m; ++s) {
    const Eigen::MatrixXcd a = annihilation(m, n + 1, s).cast<Complex>();
    out += a.adjoint() * x * a;
  }
  return out;
}

/// Tr[(L^{n-l} |R><R|)^2] by explicit matrices; the diagonal stays exact in
/// double for these sizes.
inline double g_by_lowering(const Counts& r, unsigned l) {
  const unsigned m = unsigned(r.size());
  const unsigned n = std::accumulate(r.begin(), r.end(), 0u);
  const auto states = fock_states(m, n);
  const auto idx = index_of(states);
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(states.size(), states.size());
  x(idx.at(r), idx.at(r)) = 1;
  for (unsigned j = n; j > l; --j) x = lower(x, m, j);
  return (x * x).trace().real();
}

/// g_l(R) by summing bounded compositions directly.
inline mpz_class g_exhaustive(const Counts& r, unsigned l) {
  const unsigned m = unsigned(r.size());
  const unsigned n = std::accumulate(r.begin(), r.end(), 0u);
  mpz_class sum = 0;
  for (const auto& b : fock_states(m, n - l)) {
    bool ok = true;
    mpz_class prod = 1;
    for (unsigned i = 0; i < m && ok; ++i) {
      ok = b[i] <= r[i];
      const mpz_class c = choose(r[i], b[i]);
      prod *= c * c;
    }
    if (ok) sum += prod;
  }
  const mpz_class f = factorial(n - l);
  return f * f * sum;
}

/// Composite Simpson on [a, b] with `intervals` (even) subintervals.
template <typename F>
double simpson(F f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3;
}

/// D_+(y) = (1/2) int_0^inf exp(-t^2/4) sin(y t) dt, truncated at t = 20.
inline double dawson_sine_integral(double y) {
  return 0.5 * simpson([y](double t) { return std::exp(-t * t / 4) * std::sin(y * t); }, 0.0, 20.0,
                       200000);
}

/// D_+(y) = exp(-y^2) int_0^y exp(t^2) dt.
inline double dawson_exp_integral(double y) {
  return simpson([y](double t) { return std::exp(t * t - y * y); }, 0.0, y, 200000);
}

}  // namespace oracle
