#include "bosonic/verify.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bosonic/anticoncentration.hpp"
#include "bosonic/combinatorics.hpp"
#include "bosonic/interferometer.hpp"
#include "bosonic/irreps.hpp"
#include "bosonic/ladder.hpp"
#include "bosonic/moments.hpp"
#include "bosonic/parallel.hpp"

namespace bosonic {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }

  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": threw " + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

std::string sector(unsigned m, unsigned n) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

ComplexMatrix random_hermitian(unsigned d, CounterRng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(d, d);
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned i = 0; i < d; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return (a + a.adjoint()) * 0.5;
}

DiagonalOperator random_diagonal(unsigned m, unsigned n, CounterRng& rng) {
  auto basis = enumerate_basis(m, n);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> d(basis->size());
  for (auto& x : d) x = make_rational(num(rng), den(rng));
  return DiagonalOperator(std::move(basis), std::move(d));
}

Occupation permuted(const Occupation& s, const std::vector<unsigned>& perm) {
  std::vector<unsigned> c(s.modes());
  for (unsigned i = 0; i < s.modes(); ++i) c[perm[i]] = s[i];
  return Occupation(std::move(c));
}

bool zero(const ExactMap& a) {
  for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
    for (ExactMap::InnerIterator it(a, c); it; ++it) {
      if (it.value() != 0) return false;
    }
  }
  return true;
}

double max_abs(const ComplexMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

// ---------------------------------------------------------------------------

void suite_combinatorics(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 1; m <= o.max_modes + 2; ++m) {
    for (unsigned n = 0; n <= o.max_photons; ++n) {
      const auto basis = enumerate_basis(m, n);
      c.check(BigInt(static_cast<unsigned long>(basis->size())) == basis_size(m, n),
              "basis size " + sector(m, n));
      bool ok = true;
      for (std::size_t i = 0; i < basis->size(); ++i) {
        ok = ok && basis->rank(basis->state(i)) == i && basis->unrank(i) == basis->state(i);
        if (i) ok = ok && basis->state(i - 1) < basis->state(i);
      }
      c.check(ok, "rank/unrank/order " + sector(m, n));
    }
  }
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned n = 0; n <= m; ++n) {
      const Rational binomial_form(binomial(m, n), binomial(long(m) + n - 1, n));
      Rational b = binomial_form;
      b.canonicalize();
      c.check(collision_free_ratio(m, n) == b, "collision-free ratio " + sector(m, n));
    }
  }
  for (unsigned k = 0; k <= 6; ++k) {
    Rational direct = 0;
    const Rational a = make_rational(3, 2), b = make_rational(-7, 3), z = make_rational(-1);
    for (unsigned p = 0; p <= k; ++p) {
      Rational t = Rational(binomial(k, p)) * pochhammer(a, p) / pochhammer(b, p);
      for (unsigned i = 0; i < p; ++i) t *= -z;
      direct += t;
    }
    c.check(hyp2f1_terminating(k, a, b, z) == direct, "2F1 term sum k=" + std::to_string(k));
  }
}

void suite_interferometer(Checker& c, const VerifyOptions& o, std::uint64_t seed) {
  CounterRng rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (unsigned k = 1; k <= 8; ++k) {
    ComplexMatrix a(k, k);
    for (unsigned j = 0; j < k; ++j) {
      for (unsigned i = 0; i < k; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        a(i, j) = Complex(re, im);
      }
    }
    const Complex r = permanent(a);
    const Complex gl = detail::permanent_glynn(a);
    c.check(std::abs(r - gl) <= 1e-9 * (1 + std::abs(r)), "Ryser vs Glynn k=" + std::to_string(k));
  }
  for (unsigned m = 1; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= std::min(3u, o.max_photons); ++n) {
      c.guard("homomorphism " + sector(m, n), [&] {
        const auto u = haar_unitary(m, rng);
        const auto v = haar_unitary(m, rng);
        const auto pu = homomorphism_matrix(u, n);
        const auto pv = homomorphism_matrix(v, n);
        const auto puv = homomorphism_matrix(u * v, n);
        c.check(unitarity_defect(pu.matrix) <= 1e-9, "phi unitary " + sector(m, n));
        c.check(max_abs(puv.matrix - pu.matrix * pv.matrix) <= 1e-9,
                "phi(UV) = phi(U) phi(V) " + sector(m, n));
        double total = 0;
        const auto in = pu.basis->state(0);
        for (const auto& s : pu.basis->states()) total += output_probability(u, in, s);
        c.check(close(total, 1.0, 1e-10), "probabilities sum to 1 " + sector(m, n));
      });
    }
  }
}

void suite_ladder(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 1; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= std::min(3u, o.max_photons); ++n) {
      const auto d = static_cast<Eigen::Index>(enumerate_basis(m, n)->size());
      const std::int64_t h = static_cast<std::int64_t>(commutator_h(n, m));
      const ExactMap r_n = raise_map_exact(m, n);
      const ExactMap l_up = lower_map_exact(m, n + 1);
      ExactMap hn = l_up * r_n;
      if (n > 0) hn = hn - ExactMap(raise_map_exact(m, n - 1) * lower_map_exact(m, n));
      ExactMap id(d * d, d * d);
      id.setIdentity();
      const ExactMap expect_h = id * h;
      c.check(zero(hn - expect_h), "H = (m+2n) id, exact " + sector(m, n));

      ExactMap hn1 = lower_map_exact(m, n + 2) * raise_map_exact(m, n + 1) -
                     ExactMap(raise_map_exact(m, n) * lower_map_exact(m, n + 1));
      const ExactMap hr = hn1 * r_n - ExactMap(r_n * hn);
      c.check(zero(hr - ExactMap(r_n * std::int64_t{2})), "[H,R] = 2R exact " + sector(m, n));
      if (n > 0) {
        const ExactMap l_n = lower_map_exact(m, n);
        ExactMap hlow = lower_map_exact(m, n) * raise_map_exact(m, n - 1);
        if (n > 1) hlow = hlow - ExactMap(raise_map_exact(m, n - 2) * lower_map_exact(m, n - 1));
        const ExactMap hl = hlow * l_n - ExactMap(l_n * hn);
        c.check(zero(hl + ExactMap(l_n * std::int64_t{2})),
                "[H,L] = -2L exact " + sector(m, n));
      }

      RealMap hf = lower_map(m, n + 1) * raise_map(m, n);
      if (n > 0) hf = hf - RealMap(raise_map(m, n - 1) * lower_map(m, n));
      RealMap idf(d * d, d * d);
      idf.setIdentity();
      c.check((hf - idf * double(h)).norm() <= 1e-10, "H = (m+2n) id, floating " + sector(m, n));
      c.check(RealMap(raise_map(m, n) - RealMap(lower_map(m, n + 1).transpose())).norm() == 0,
              "R is the adjoint of L " + sector(m, n));
    }
  }
}

void suite_dimensions(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 2; m <= 6; ++m) {
    for (unsigned n = 0; n <= 6; ++n) {
      BigInt total = 0;
      for (unsigned k = 0; k <= n; ++k) total += irrep_dim(m, k);
      const BigInt d = basis_size(m, n);
      c.check(total == d * d, "sum of d_k " + sector(m, n));
    }
  }
  for (unsigned m = 2; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= o.max_photons; ++n) {
      if (basis_size(m, n) > 64) continue;
      c.guard("kernel " + sector(m, n), [&] {
        c.check(kernel_dim_check(m, n) == irrep_dim(m, n), "nullity of L = d_n " + sector(m, n));
      });
    }
  }
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        for (unsigned r = 0; r <= j; ++r) {
          Rational product = 1;
          for (unsigned i = j; i < n; ++i) product *= beta(r, i, m);
          c.check(alpha(r, j, n, m) == product, "alpha telescoping " + sector(m, n));
        }
        c.check(alpha(j, j, n, m) == Rational(factorial(n - j)) * pochhammer(long(m) + 2 * j, n - j),
                "alpha diagonal form " + sector(m, n));
      }
      for (unsigned k = 1; k <= n; ++k) {
        for (unsigned r = 0; r < k; ++r) {
          c.check(beta(r, k, m) - beta(r, k - 1, m) == long(commutator_h(k, m)),
                  "beta increments " + sector(m, n));
        }
      }
    }
  }
}

void check_diagonal_decomposition(Checker& c, const DiagonalOperator& op, const std::string& tag) {
  const unsigned n = op.photons();
  const auto parts = decompose(op);
  const auto closed = irrep_norms_closed(op);
  DiagonalOperator sum = DiagonalOperator::zero(op.modes(), n);
  Rational parseval = 0;
  bool orthogonal = true;
  bool closed_ok = true;
  for (unsigned k = 0; k <= n; ++k) {
    sum = sum + parts[k];
    const Rational nk = hs_norm_sq(parts[k]);
    parseval += nk;
    closed_ok = closed_ok && nk == closed[k];
    for (unsigned j = 0; j < k; ++j) orthogonal = orthogonal && hs_inner(parts[j], parts[k]) == 0;
  }
  c.check(sum == op, "completeness " + tag);
  c.check(parseval == hs_norm_sq(op), "Parseval " + tag);
  c.check(orthogonal, "orthogonality " + tag);
  c.check(closed_ok, "closed norm = projection norm " + tag);
  if (n > 0) c.check(lower(parts[n]).is_zero(), "top component in ker L " + tag);
  if (n + 1 <= 5) {
    bool eigen = true;
    for (unsigned r = 0; r <= n; ++r) {
      eigen = eigen && lower(raise(parts[r])) == parts[r] * beta(r, n, op.modes());
    }
    c.check(eigen, "L R acts as beta " + tag);
  }
}

void suite_irrep_norms(Checker& c, const VerifyOptions& o, std::uint64_t seed) {
  for (unsigned m = 2; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= o.max_photons; ++n) {
      const auto basis = enumerate_basis(m, n);
      for (const auto& s : basis->states()) {
        c.guard("Fock " + s.to_string(), [&] {
          check_diagonal_decomposition(c, DiagonalOperator::fock_projector(s), "Fock " + s.to_string());
        });
      }
    }
  }
  CounterRng rng(seed);
  for (unsigned trial = 0; trial < 10; ++trial) {
    const unsigned m = 2 + trial % std::max(1u, o.max_modes - 1);
    const unsigned n = trial % (std::min(3u, o.max_photons) + 1);
    c.guard("random diagonal " + sector(m, n), [&] {
      check_diagonal_decomposition(c, random_diagonal(m, n, rng), "random diagonal " + sector(m, n));
    });
  }
  for (unsigned trial = 0; trial < 10; ++trial) {
    const unsigned m = 2 + trial % std::max(1u, std::min(3u, o.max_modes) - 1);
    const unsigned n = trial % (std::min(3u, o.max_photons) + 1);
    const std::string tag = "random hermitian " + sector(m, n);
    c.guard(tag, [&] {
      const auto basis = enumerate_basis(m, n);
      const SectorOperator op(basis, random_hermitian(unsigned(basis->size()), rng));
      const double scale = hs_norm_sq(op);
      const auto parts = decompose(op);
      const auto closed = irrep_norms_closed(op);
      const auto phi = homomorphism_matrix(haar_unitary(m, rng), n);
      const auto rotated_parts = decompose(conjugate(phi, op));
      double total = 0;
      bool orthogonal = true, closed_ok = true, invariant = true;
      ComplexMatrix sum = ComplexMatrix::Zero(op.matrix().rows(), op.matrix().cols());
      for (unsigned k = 0; k <= n; ++k) {
        const double nk = hs_norm_sq(parts[k]);
        total += nk;
        sum += parts[k].matrix();
        closed_ok = closed_ok && close(nk, closed[k], 1e-9 * scale);
        invariant = invariant && close(hs_norm_sq(rotated_parts[k]), nk, 1e-8 * scale);
        for (unsigned j = 0; j < k; ++j) {
          orthogonal = orthogonal && std::abs(hs_inner(parts[j], parts[k])) <= 1e-10 * scale;
        }
      }
      c.check(max_abs(sum - op.matrix()) <= 1e-10 * std::sqrt(scale), "completeness " + tag);
      c.check(close(total, scale, 1e-9 * scale), "Parseval " + tag);
      c.check(orthogonal, "orthogonality " + tag);
      c.check(closed_ok, "closed norm = projection norm " + tag);
      c.check(invariant, "norms invariant under conjugation " + tag);
    });
  }
}

void suite_g(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 1; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= o.max_photons; ++n) {
      const auto basis = enumerate_basis(m, n);
      std::vector<Rational> sums(n + 1, Rational(0));
      for (const auto& s : basis->states()) {
        const auto g = g_values(DiagonalOperator::fock_projector(s));
        for (unsigned l = 0; l <= n; ++l) {
          const BigInt gf = g_fock(s, l);
          c.check(Rational(gf) == g[l], "g_fock vs ladder " + s.to_string() + " l=" + std::to_string(l));
          sums[l] += gf;
        }
      }
      for (unsigned k = 0; k <= n; ++k) {
        c.check(g_fock_sum(m, n, k) == sums[n - k], "g sum " + sector(m, n) + " k=" + std::to_string(k));
      }
      for (unsigned l = 0; l <= n; ++l) {
        const BigInt f = factorial(n - l);
        if (n <= m) {
          c.check(g_fock(Occupation::collision_free(m, n), l) == f * f * binomial(n, n - l),
                  "g collision-free " + sector(m, n));
        }
        const BigInt b = binomial(n, n - l);
        c.check(g_fock(Occupation::bunched(m, n), l) == f * f * b * b, "g bunched " + sector(m, n));
      }
    }
  }
}

void suite_moments(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 2; m <= 8; ++m) {
    const auto e1 = Occupation::collision_free(m, 1);
    c.check(fock_second_moment(e1, e1) == make_rational(2, long(m) * (m + 1)),
            "single-photon fourth moment m=" + std::to_string(m));
  }
  for (unsigned m = 2; m <= o.max_modes; ++m) {
    for (unsigned n = 1; n <= std::min(3u, o.max_photons); ++n) {
      const auto basis = enumerate_basis(m, n);
      std::vector<unsigned> reverse(m), shift(m);
      for (unsigned i = 0; i < m; ++i) {
        reverse[i] = m - 1 - i;
        shift[i] = (i + 1) % m;
      }
      const Rational first = make_rational(1) / Rational(basis_size(m, n));
      for (const auto& in : basis->states()) {
        for (const auto& out : basis->states()) {
          const Rational mom = fock_second_moment(in, out);
          c.check(mom >= first * first, "second >= first^2 " + in.to_string() + out.to_string());
          c.check(mom == fock_second_moment(permuted(in, reverse), permuted(out, reverse)) &&
                      mom == fock_second_moment(permuted(in, shift), permuted(out, shift)),
                  "mode permutation invariance " + in.to_string() + out.to_string());
          c.check(first_moment(DiagonalOperator::fock_projector(in),
                               DiagonalOperator::fock_projector(out)) == first,
                  "first moment 1/D " + sector(m, n));
        }
      }
    }
  }
}

void suite_p2_routes(Checker& c, const VerifyOptions&, std::uint64_t) {
  for (unsigned m = 2; m <= 10; ++m) {
    for (unsigned n = 0; n <= 10; ++n) {
      c.guard("P2 routes " + sector(m, n), [&] {
        const Rational closed = p2_closed(m, n);
        c.check(closed == p2_beta(m, n), "closed = beta " + sector(m, n));
        const double integral = p2_integral(m, n);
        c.check(close(to_double(closed), integral, 1e-9 * to_double(closed)),
                "closed ~ integral " + sector(m, n));
        c.check(closed >= 1 && closed <= Rational(basis_size(m, n)), "1 <= P2 <= D " + sector(m, n));
      });
    }
  }
  for (unsigned m = 2; m <= 50; ++m) {
    c.check(p2_closed(m, 1) == make_rational(2 * long(m), long(m) + 1),
            "single-photon law m=" + std::to_string(m));
  }
  c.check(p2_closed(1, 7) == 1 && p2_beta(1, 7) == 1, "one mode gives 1");
}

void suite_pipeline(Checker& c, const VerifyOptions& o, std::uint64_t) {
  for (unsigned m = 2; m <= o.max_modes; ++m) {
    for (unsigned n = 0; n <= std::min({3u, o.max_photons, m}); ++n) {
      c.guard("pipeline " + sector(m, n), [&] {
        const auto basis = enumerate_basis(m, n);
        const auto cf = Occupation::collision_free(m, n);
        Rational sum = 0;
        for (const auto& s : basis->states()) sum += fock_second_moment(cf, s);
        c.check(p2_closed(m, n) == Rational(basis_size(m, n)) * sum, "P2 from second moments " + sector(m, n));
      });
    }
  }
}

double dawson_by_quadrature(double y) {
  using Rule = boost::math::quadrature::gauss<double, 16>;
  const int panels = 64;
  const double h = y / panels;
  double sum = 0;
  for (int p = 0; p < panels; ++p) {
    const double a = h * p;
    sum += 0.5 * h * Rule::integrate([&](double x) {
      const double t = a + 0.5 * h * (x + 1.0);
      return std::exp(t * t - y * y);
    }, -1.0, 1.0);
  }
  return sum;
}

void suite_asymptotics(Checker& c, const VerifyOptions&, std::uint64_t) {
  for (double y : {0.05, 0.5, 1.0, 2.0, 3.9, 4.1, 5.5, 6.4, 6.6, 8.0, 12.0}) {
    const double ref = dawson_by_quadrature(y);
    c.check(std::abs(dawson(y) - ref) <= 1e-12 * ref, "Dawson vs quadrature y=" + std::to_string(y));
    c.check(dawson(-y) == -dawson(y), "Dawson odd y=" + std::to_string(y));
  }
  c.check(dawson(0) == 0, "Dawson at 0");
  c.check(std::abs(50 * dawson(50) - 0.5) <= 1e-3, "Dawson tail");
  c.check(classify_regime(100, 10).regime == Regime::quadratic, "regime m=n^2");
  c.check(classify_regime(100, 50).regime == Regime::linear, "regime m=2n");
  c.check(classify_regime(1000, 10).regime == Regime::dilute, "regime m=n^3");
  c.check(classify_regime(1, 10).regime == Regime::degenerate, "regime m=1");
  c.check(close(asymptote(40, 20, 2, 1), 3, 1e-15), "linear asymptote c=2");
  c.check(close(asymptote(200, 20, 10, 1), 11, 1e-15), "linear asymptote c=10");
  c.check(close(asymptote(8000, 20, 1, 3), 20, 1e-15), "dilute asymptote");
  c.check(close(asymptote(400, 20, 1, 2), std::sqrt(2.0) * dawson(1 / std::sqrt(2.0)) * 20, 1e-12),
          "quadratic asymptote");
  const double ratio = to_double(collision_free_ratio(10000, 100));
  c.check(std::abs(ratio - std::exp(-1.0)) <= 0.02 * std::exp(-1.0), "collision-free ratio at m=n^2");
  c.check(close(pz_bound(3, 2, 0.5), 0.25 / (5.0 / 3.0), 1e-15), "Paley-Zygmund bound (3,2)");
}

// ---------------------------------------------------------------------------

bool within(const MomentEstimate& e, double target, double sigmas) {
  return std::abs(e.mean - target) <= sigmas * e.std_error;
}

void suite_mc_moments(Checker& c, const VerifyOptions& o, std::uint64_t seed) {
  const auto basis = enumerate_basis(3, 2);
  CounterRng pick(seed ^ 0xabcdefULL);
  std::uniform_int_distribution<std::size_t> idx(0, basis->size() - 1);
  for (unsigned i = 0; i < 5; ++i) {
    const auto& in = basis->state(idx(pick));
    const auto& out = basis->state(idx(pick));
    const auto est = mc_second_moment(in, out, o.mc_samples, seed + i, o.jobs);
    c.check(within(est, to_double(fock_second_moment(in, out)), 3),
            "MC second moment " + in.to_string() + "->" + out.to_string());
  }
  const auto e1 = Occupation::collision_free(3, 1);
  c.check(within(mc_second_moment(e1, e1, o.mc_samples, seed + 7, o.jobs), 1.0 / 6, 3),
          "MC single-photon fourth moment");
  const auto cf = Occupation::collision_free(3, 2);
  c.check(within(mc_first_moment(cf, Occupation::bunched(3, 2), o.mc_samples, seed + 8, o.jobs), 1.0 / 6, 3),
          "MC first moment");
}

void suite_mc_p2(Checker& c, const VerifyOptions& o, std::uint64_t seed) {
  c.check(within(mc_p2(3, 2, o.mc_samples, seed, o.jobs), 5.0 / 3, 3), "MC P2(3,2)");
  c.check(within(mc_p2(2, 1, o.mc_samples, seed + 1, o.jobs), 4.0 / 3, 3), "MC P2(2,1)");
  const auto one = mc_p2(1, 1, 100, seed);
  c.check(one.mean == 1 && one.variance == 0, "MC P2 one mode");
}

void suite_pz(Checker& c, const VerifyOptions& o, std::uint64_t seed) {
  const auto est = pz_empirical(3, 2, 0.5, o.mc_samples, seed, o.jobs);
  c.check(est.mean >= pz_bound(3, 2, 0.5) - 3 * est.std_error, "Paley-Zygmund empirical (3,2)");
}

struct SuiteDef {
  const char* name;
  bool stochastic;
  void (*run)(Checker&, const VerifyOptions&, std::uint64_t);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all = {
      {"combinatorics", false, suite_combinatorics},
      {"interferometer", false, suite_interferometer},
      {"ladder-sl2", false, suite_ladder},
      {"irrep-dimensions", false, suite_dimensions},
      {"irrep-norms", false, suite_irrep_norms},
      {"g-formulas", false, suite_g},
      {"moments-exact", false, suite_moments},
      {"p2-routes", false, suite_p2_routes},
      {"pipeline", false, suite_pipeline},
      {"asymptotics", false, suite_asymptotics},
      {"mc-moments", true, suite_mc_moments},
      {"mc-p2", true, suite_mc_p2},
      {"paley-zygmund", true, suite_pz},
  };
  return all;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (name == s.name) return s;
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace

std::vector<std::string> verify_suite_names(bool include_mc) {
  std::vector<std::string> out;
  for (const auto& s : suites()) {
    if (include_mc || !s.stochastic) out.emplace_back(s.name);
  }
  return out;
}

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& options,
                             std::uint64_t seed) {
  const auto& def = find_suite(name);
  SuiteResult result;
  result.name = def.name;
  result.stochastic = def.stochastic;
  Checker checker(result);
  const auto start = std::chrono::steady_clock::now();
  checker.guard(def.name, [&] { def.run(checker, options, seed); });
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  const auto names = verify_suite_names(!options.skip_mc);
  VerifyOptions inner = options;
  // Parallelism goes to the suites; the MC estimators inside run serially.
  inner.jobs = 1;
  return parallel_map<SuiteResult>(names.size(), options.jobs, [&](std::size_t i) {
    SuiteResult r = run_verify_suite(names[i], inner, options.seed);
    if (!r.passed() && r.stochastic) {
      const double first = r.seconds;
      r = run_verify_suite(names[i], inner, options.seed ^ 0x9e3779b97f4a7c15ULL);
      r.attempts = 2;
      r.seconds += first;
    }
    return r;
  });
}

void print_verify_report(std::ostream& out, const std::vector<SuiteResult>& results) {
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures
        << " failures";
    if (r.attempts > 1) out << ", retried";
    out << ", " << std::fixed;
    out.precision(2);
    out << r.seconds << " s)\n";
    out.unsetf(std::ios::floatfield);
    if (!r.passed()) {
      ++failed;
      out << "  first failing case: " << (r.first_failure.empty() ? "no cases ran" : r.first_failure)
          << "\n";
    }
  }
  out << (failed ? "FAIL" : "PASS") << ": " << results.size() - failed << "/" << results.size()
      << " suites passed\n";
}

}  // namespace bosonic
