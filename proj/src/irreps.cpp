#include "bosonic/irreps.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>
#include <stdexcept>
#include <string>

#include "bosonic/errors.hpp"

namespace bosonic {

namespace {

void require_modes(unsigned m, const char* what) {
  if (m < 2) throw DegenerateModesError(what);
}

void require_index(unsigned k, unsigned n, const char* what) {
  if (k > n) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(k) +
                            " exceeds photon number " + std::to_string(n));
  }
}

SectorOperator scaled(const SectorOperator& x, const Rational& c) { return x * Complex(to_double(c)); }
DiagonalOperator scaled(const DiagonalOperator& x, const Rational& c) { return x * c; }

template <typename Op>
std::vector<Op> decompose_impl(const Op& o) {
  const unsigned m = o.modes();
  const unsigned n = o.photons();
  require_modes(m, "irrep decomposition needs m >= 2");

  std::vector<Op> lowered{o};
  for (unsigned j = 1; j <= n; ++j) lowered.push_back(lower(lowered.back()));

  std::vector<Op> parts;
  parts.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Op acc = raise_power(lowered[n - k], n - k);
    for (unsigned r = 0; r < k; ++r) acc = acc - scaled(parts[r], alpha(r, k, n, m));
    parts.push_back(scaled(acc, 1 / alpha(k, k, n, m)));
  }
  return parts;
}

// Coefficient of g_l in ||P_k||^2.
Rational norm_coefficient(unsigned k, unsigned l, unsigned n, unsigned m) {
  Rational c = 1 / (Rational(factorial(k - l)) * pochhammer(long(k + l + m) - 1, k - l));
  if ((k - l) % 2) c = -c;
  return c / alpha(k, k, n, m);
}

template <typename Scalar>
std::vector<Scalar> closed_norms(const std::vector<Scalar>& g, unsigned n, unsigned m) {
  std::vector<Scalar> out;
  out.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Scalar acc = 0;
    for (unsigned l = 0; l <= k; ++l) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        acc += norm_coefficient(k, l, n, m) * g[l];
      } else {
        acc += to_double(norm_coefficient(k, l, n, m)) * g[l];
      }
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace

BigInt irrep_dim(unsigned m, unsigned k) {
  require_modes(m, "irrep dimension divides by m - 1");
  const BigInt c = binomial(long(k) + m - 2, k);
  BigInt out = BigInt(2ul * k + m - 1) * c * c;
  out /= (m - 1);
  return out;
}

Rational alpha(unsigned r, unsigned j, unsigned n, unsigned m) {
  if (r > j || j > n) {
    throw std::out_of_range("alpha needs r <= j <= n (got r=" + std::to_string(r) +
                            ", j=" + std::to_string(j) + ", n=" + std::to_string(n) + ")");
  }
  Rational out(factorial(n - r) * factorial(m + n + r - 1),
               factorial(j - r) * factorial(j + m + r - 1));
  out.canonicalize();
#ifdef BOSONIC_MUTANT_ALPHA_SIGN
  out = -out;
#endif
  return out;
}

Rational beta(unsigned r, unsigned k, unsigned m) {
  if (r > k) throw std::out_of_range("beta needs r <= k");
  return Rational(BigInt(k - r + 1) * BigInt(m + r + k));
}

std::vector<SectorOperator> decompose(const SectorOperator& o) { return decompose_impl(o); }
std::vector<DiagonalOperator> decompose(const DiagonalOperator& o) { return decompose_impl(o); }

SectorOperator project(const SectorOperator& o, unsigned k) {
  require_index(k, o.photons(), "project");
  return decompose_impl(o)[k];
}

DiagonalOperator project(const DiagonalOperator& o, unsigned k) {
  require_index(k, o.photons(), "project");
  return decompose_impl(o)[k];
}

std::vector<Rational> g_values(const DiagonalOperator& o) {
  const unsigned n = o.photons();
  std::vector<Rational> g(n + 1);
  DiagonalOperator x = o;
  for (unsigned j = 0; j <= n; ++j) {
    if (j) x = lower(x);
    g[n - j] = hs_norm_sq(x);
  }
  return g;
}

std::vector<double> g_values(const SectorOperator& o) {
  const unsigned n = o.photons();
  std::vector<double> g(n + 1);
  SectorOperator x = o;
  for (unsigned j = 0; j <= n; ++j) {
    if (j) x = lower(x);
    g[n - j] = (x.matrix() * x.matrix()).trace().real();
  }
  return g;
}

std::vector<Rational> irrep_norms_closed(const DiagonalOperator& o) {
  require_modes(o.modes(), "irrep norms need m >= 2");
  return closed_norms(g_values(o), o.photons(), o.modes());
}

std::vector<double> irrep_norms_closed(const SectorOperator& o) {
  require_modes(o.modes(), "irrep norms need m >= 2");
  if (!o.hermitian()) {
    throw std::invalid_argument("closed-form irrep norms need a hermitian operator");
  }
  return closed_norms(g_values(o), o.photons(), o.modes());
}

Rational irrep_norm_closed(const DiagonalOperator& o, unsigned k) {
  require_index(k, o.photons(), "irrep_norm_closed");
  return irrep_norms_closed(o)[k];
}

double irrep_norm_closed(const SectorOperator& o, unsigned k) {
  require_index(k, o.photons(), "irrep_norm_closed");
  return irrep_norms_closed(o)[k];
}

BigInt g_fock(const Occupation& r, unsigned l) {
  const unsigned n = r.total();
  require_index(l, n, "g_fock");
  const unsigned budget = n - l;
  // sum over b <= R with |b| = budget of prod C(R_i, b_i)^2
  std::function<BigInt(unsigned, unsigned)> walk = [&](unsigned mode, unsigned left) -> BigInt {
    if (mode == r.modes()) return left == 0 ? BigInt(1) : BigInt(0);
    BigInt acc = 0;
    for (unsigned b = 0; b <= std::min(left, r[mode]); ++b) {
      const BigInt c = binomial(r[mode], b);
      acc += c * c * walk(mode + 1, left - b);
    }
    return acc;
  };
  const BigInt f = factorial(budget);
  return f * f * walk(0, budget);
}

Rational g_fock_sum(unsigned m, unsigned n, unsigned k) {
  require_index(k, n, "g_fock_sum");
  if (m == 0) throw std::invalid_argument("g_fock_sum needs m >= 1");
  const Rational half_m1 = make_rational(long(m) + 1, 2);
  Rational out(basis_size(m, n) * factorial(n) * factorial(k), factorial(n - k));
  out.canonicalize();
  out *= pochhammer(Rational(n - k) + half_m1, k) / pochhammer(half_m1, k);
  return out;
}

IrrepSpectrum<Rational> spectrum(const DiagonalOperator& o) {
  IrrepSpectrum<Rational> s{o.modes(), o.photons(), {}};
  const auto norms = irrep_norms_closed(o);
  for (unsigned k = 0; k <= o.photons(); ++k) s.entries.push_back({k, irrep_dim(o.modes(), k), norms[k]});
  return s;
}

IrrepSpectrum<double> spectrum(const SectorOperator& o) {
  IrrepSpectrum<double> s{o.modes(), o.photons(), {}};
  const auto norms = irrep_norms_closed(o);
  for (unsigned k = 0; k <= o.photons(); ++k) s.entries.push_back({k, irrep_dim(o.modes(), k), norms[k]});
  return s;
}

BigInt kernel_dim_check(unsigned m, unsigned n) {
  require_modes(m, "kernel check needs m >= 2");
  const BigInt d = basis_size(m, n);
  if (d > 64) throw std::length_error("kernel check refuses sectors with D > 64");
  const unsigned long dim = d.get_ui();
  if (n == 0) return BigInt(1);
  const ExactMap l = lower_map_exact(m, n);
  return BigInt(static_cast<unsigned long>(dim * dim - exact_rank(l)));
}

}  // namespace bosonic
