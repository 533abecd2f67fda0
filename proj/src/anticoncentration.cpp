#include "bosonic/anticoncentration.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bosonic/errors.hpp"
#include "bosonic/interferometer.hpp"

namespace bosonic {

namespace {

BigInt rising(long x, unsigned p) {
  BigInt out = 1;
  for (unsigned i = 0; i < p; ++i) out *= BigInt(x + long(i));
  return out;
}

}  // namespace

Rational p2_closed(unsigned m, unsigned n) {
  if (m == 0) throw std::invalid_argument("P2 needs m >= 1");
  if (m == 1) return 1;
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rational prefactor(rising(long(m) + k - 1, k), rising(long(m) + n, k));
    prefactor.canonicalize();
    const Rational f = hyp2f1_terminating(k, Rational(long(n) - k + 1),
                                          Rational(2 - long(m) - 2 * long(k)), Rational(-1));
    total += prefactor * f;
  }
  return total;
}

Rational p2_beta(unsigned m, unsigned n) {
  if (m == 0) throw std::invalid_argument("P2 needs m >= 1");
  if (m == 1) return 1;
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt num = 0;
    for (unsigned j = 0; j <= k; ++j) {
      BigInt term = binomial(k, j) * rising(long(n) - k + 1, j) * rising(long(m) + k - 1, k - j);
      if (j % 2) {
        num -= term;
      } else {
        num += term;
      }
    }
    Rational t(num, rising(long(m) + n, k));
    t.canonicalize();
    total += t;
  }
  return total;
}

double p2_integral(unsigned m, unsigned n, double tolerance) {
  if (m == 0 || m + n < 2) throw std::invalid_argument("integral form needs m >= 1 and m + n >= 2");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  using Rule = boost::math::quadrature::gauss<double, 16>;
  const double power = double(n) + m - 2;
  const double scale = double(n) + m - 1;
  const double freq = double(n) + 1;

  // cos^power falls below exp(-cut) beyond `upper`; the discarded tail is
  // at most scale * (pi/2) * exp(-cut).
  double upper = std::numbers::pi / 2;
  if (power > 0) {
    const double cut = std::max(40.0, std::log(scale * std::numbers::pi / tolerance) + 5.0);
    upper = std::min(upper, std::acos(std::exp(-cut / power)));
  }

  auto integrand = [&](double t) {
    const double c = std::cos(t);
    const double envelope = power == 0 ? 1.0 : std::exp(power * std::log(c));
    return envelope * std::sin(freq * t);
  };
  auto composite = [&](std::size_t panels, double& abs_sum) {
    const double h = upper / double(panels);
    double sum = 0;
    abs_sum = 0;
    for (std::size_t p = 0; p < panels; ++p) {
      const double a = h * double(p);
      const double panel = Rule::integrate(
          [&](double x) { return integrand(a + 0.5 * h * (x + 1.0)); }, -1.0, 1.0);
      sum += 0.5 * h * panel;
      abs_sum += 0.5 * h * std::abs(panel);
    }
    return scale * sum;
  };

  std::size_t panels = std::max<std::size_t>(8, 2 * (std::size_t(n) + 1));
  const std::size_t budget = panels << 12;
  double abs_sum = 0;
  double previous = composite(panels, abs_sum);
  while (panels < budget) {
    panels *= 2;
    const double current = composite(panels, abs_sum);
    const double floor = 64 * std::numeric_limits<double>::epsilon() * scale * abs_sum;
    if (std::abs(current - previous) <= std::max(tolerance, floor)) return current;
    previous = current;
  }
  throw ConvergenceError("P2 integral did not reach tolerance " + std::to_string(tolerance) +
                         " within " + std::to_string(budget) + " panels (m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
}

namespace {

void require_sampling_sizes(unsigned m, unsigned n, std::uint64_t samples) {
  if (samples < 100) throw std::invalid_argument("Monte-Carlo estimates need at least 100 samples");
  if (n > 10) throw std::invalid_argument("Monte-Carlo P2 is limited to n <= 10");
  if (m < n) throw std::invalid_argument("collision-free input needs m >= n");
}

// p_U(S) for every S in the basis, collision-free input.
std::vector<double> output_distribution(const Interferometer& u, const FockBasis& basis,
                                        const Occupation& input) {
  std::vector<double> p(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) p[i] = output_probability(u, input, basis.state(i));
  return p;
}

}  // namespace

MomentEstimate mc_p2(unsigned m, unsigned n, std::uint64_t samples, std::uint64_t seed,
                     unsigned workers) {
  if (m == 0) throw std::invalid_argument("P2 needs m >= 1");
  if (m == 1) {
    if (samples < 100) throw std::invalid_argument("Monte-Carlo estimates need at least 100 samples");
    return {1.0, 0.0, 0.0, samples};
  }
  require_sampling_sizes(m, n, samples);
  auto basis = enumerate_basis(m, n);
  const auto input = Occupation::collision_free(m, n);
  const double d = double(basis->size());
  return parallel_estimate(samples, seed, workers, [&](CounterRng& rng) {
    const auto p = output_distribution(haar_unitary(m, rng), *basis, input);
    double s = 0;
    for (double x : p) s += x * x;
    return d * s;
  });
}

double dawson(double y) {
  if (y < 0) return -dawson(-y);
  if (y == 0) return 0.0;
  if (y < 6.5) {
    // exp(-y^2) sum_k y^(2k+1) / (k! (2k+1)); every term positive
    const double y2 = y * y;
    double a = y;
    double sum = 0;
    for (unsigned k = 0; k < 1000; ++k) {
      const double term = a / double(2 * k + 1);
      sum += term;
      if (term < 1e-18 * sum) break;
      a *= y2 / double(k + 1);
    }
    return std::exp(-y2) * sum;
  }
  double t = 0;
  for (unsigned k = 40; k >= 1; --k) t = (0.5 * k) / (y - t);
  return 0.5 / (y - t);
}

double asymptote(unsigned m, unsigned n, double c, double beta) {
  if (beta < 1) throw std::invalid_argument("asymptotic laws need beta >= 1");
  if (!(c > 0)) throw std::invalid_argument("scaling constant c must be positive");
  if (n == 0) throw std::invalid_argument("asymptotic laws need n >= 1");
  const double expected = std::round(c * std::pow(double(n), beta));
  if (double(m) != expected) {
    throw std::invalid_argument("m=" + std::to_string(m) + " is not round(c n^beta) for n=" +
                                std::to_string(n));
  }
  if (std::abs(beta - 2) <= 1e-12) {
    const double r = std::sqrt(2 * c);
    return r * dawson(1 / r) * n;
  }
  if (beta < 2) return double(m) / n + 1;
  return double(n);
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::linear: return "linear";
    case Regime::intermediate: return "intermediate";
    case Regime::quadratic: return "quadratic";
    case Regime::dilute: return "dilute";
    case Regime::degenerate: return "degenerate";
    case Regime::unclassified: return "unclassified";
  }
  return "unclassified";
}

RegimeInfo classify_regime(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw std::invalid_argument("regime needs m, n >= 1");
  RegimeInfo info{Regime::unclassified, std::numeric_limits<double>::quiet_NaN(),
                  collision_free_ratio(m, n)};
  if (n >= 2) info.exponent = std::log(double(m)) / std::log(double(n));
  if (m == 1) {
    info.regime = Regime::degenerate;
  } else if (n >= kMinClassifiedPhotons) {
    if (info.exponent < kLinearUpper) {
      info.regime = Regime::linear;
    } else if (info.exponent < kQuadraticLower) {
      info.regime = Regime::intermediate;
    } else if (info.exponent <= kQuadraticUpper) {
      info.regime = Regime::quadratic;
    } else {
      info.regime = Regime::dilute;
    }
  }
  return info;
}

std::optional<double> asymptote_for(unsigned m, unsigned n) {
  switch (classify_regime(m, n).regime) {
    case Regime::degenerate: return 1.0;
    case Regime::unclassified: return std::nullopt;
    case Regime::linear:
    case Regime::intermediate: return double(m) / n + 1;
    case Regime::quadratic: {
      const double r = std::sqrt(2 * double(m) / (double(n) * n));
      return r * dawson(1 / r) * n;
    }
    case Regime::dilute: return double(n);
  }
  return std::nullopt;
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

}  // namespace

double pz_bound(unsigned m, unsigned n, double alpha) {
  require_alpha(alpha);
  const double p2 = n > kExactPathMaxPhotons && m > 1 ? p2_integral(m, n, kLargePathTolerance)
                                                      : to_double(p2_closed(m, n));
  return (1 - alpha) * (1 - alpha) / p2;
}

MomentEstimate pz_empirical(unsigned m, unsigned n, double alpha, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers) {
  require_alpha(alpha);
  if (m == 0) throw std::invalid_argument("needs m >= 1");
  require_sampling_sizes(m, n, samples);
  auto basis = enumerate_basis(m, n);
  const auto input = Occupation::collision_free(m, n);
  const double threshold = alpha / double(basis->size());
  return parallel_estimate(samples, seed, workers, [&](CounterRng& rng) {
    const auto p = output_distribution(haar_unitary(m, rng), *basis, input);
    std::size_t hits = 0;
    for (double x : p) hits += x >= threshold;
    return double(hits) / double(p.size());
  });
}

std::string to_string(P2Method method) {
  switch (method) {
    case P2Method::closed: return "closed";
    case P2Method::beta: return "beta";
    case P2Method::integral: return "integral";
    case P2Method::mc: return "mc";
  }
  return "closed";
}

std::optional<P2Method> parse_p2_method(const std::string& name) {
  if (name == "closed") return P2Method::closed;
  if (name == "beta") return P2Method::beta;
  if (name == "integral") return P2Method::integral;
  if (name == "mc") return P2Method::mc;
  return std::nullopt;
}

P2Report evaluate_p2(unsigned m, unsigned n, const P2Options& options) {
  if (m == 0) throw std::invalid_argument("P2 needs m >= 1");
  P2Report report;
  report.m = m;
  report.n = n;
  report.requested = options.method;
  report.method = options.method;
  report.regime = n == 0 ? RegimeInfo{m == 1 ? Regime::degenerate : Regime::unclassified,
                                      std::numeric_limits<double>::quiet_NaN(), Rational(1)}
                         : classify_regime(m, n);
  report.asymptote = n == 0 ? std::optional<double>(m == 1 ? 1.0 : std::nan(""))
                            : asymptote_for(m, n);
  if (report.asymptote && std::isnan(*report.asymptote)) report.asymptote.reset();

  bool exact_route = options.method == P2Method::closed || options.method == P2Method::beta;
  if (exact_route && n > kExactPathMaxPhotons && !options.force_exact && m > 1) {
    report.method = P2Method::integral;
    exact_route = false;
  }

  if (m == 1) {
    report.p2 = 1.0;
    if (options.method == P2Method::mc) {
      report.mc = MomentEstimate{1.0, 0.0, 0.0, options.samples};
    } else if (exact_route) {
      report.exact = Rational(1);
    }
  } else if (exact_route) {
    report.exact = options.method == P2Method::beta ? p2_beta(m, n) : p2_closed(m, n);
    report.p2 = to_double(*report.exact);
  } else if (report.method == P2Method::integral) {
    const double tol = options.method == P2Method::integral ? options.tolerance : kLargePathTolerance;
    report.p2 = p2_integral(m, n, tol);
  } else {
    report.mc = mc_p2(m, n, options.samples, options.seed, options.workers);
    report.p2 = report.mc->mean;
  }
  report.pz_bound_half = 0.25 / report.p2;
  return report;
}

}  // namespace bosonic
