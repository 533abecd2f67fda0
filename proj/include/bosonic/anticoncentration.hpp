#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bosonic/moments.hpp"
#include "bosonic/rational.hpp"

namespace bosonic {

/// sum_k (m+k-1)_k/(m+n)_k 2F1(-k, n-k+1; 2-m-2k; -1). Returns 1 for m = 1.
Rational p2_closed(unsigned m, unsigned n);

/// sum_k sum_j (-1)^j C(k,j) (n-k+1)_j (m+k-1)_{k-j} / (m+n)_k. Returns 1 for m = 1.
Rational p2_beta(unsigned m, unsigned n);

/// (n+m-1) int_0^{pi/2} cos^{n+m-2}(t) sin((n+1)t) dt by composite 16-point
/// Gauss-Legendre. Refines by panel doubling until successive estimates agree
/// to `tolerance` (or to the rounding floor of the sum); throws
/// ConvergenceError when the panel budget runs out.
double p2_integral(unsigned m, unsigned n, double tolerance = 1e-10);

/// |Phi| sum_S p_U(S)^2 averaged over Haar draws, collision-free input.
/// Needs m >= n, n <= 10, samples >= 100. m = 1 gives exactly 1.
MomentEstimate mc_p2(unsigned m, unsigned n, std::uint64_t samples, std::uint64_t seed,
                     unsigned workers = 1);

/// D_+(y) = exp(-y^2) int_0^y exp(t^2) dt, odd in y.
double dawson(double y);

/// Limit law for m = round(c n^beta): m/n + 1 below beta = 2,
/// sqrt(2c) D_+(1/sqrt(2c)) n at beta = 2, n above. Throws for beta < 1 or
/// when m does not match (c, beta).
double asymptote(unsigned m, unsigned n, double c, double beta);

enum class Regime { linear, intermediate, quadratic, dilute, degenerate, unclassified };

std::string to_string(Regime r);

struct RegimeInfo {
  Regime regime;
  /// ln m / ln n; NaN when n < 2.
  double exponent;
  Rational collision_free_ratio;
};

// Bands on ln m / ln n.
inline constexpr double kLinearUpper = 1.2;
inline constexpr double kQuadraticLower = 1.85;
inline constexpr double kQuadraticUpper = 2.15;
inline constexpr unsigned kMinClassifiedPhotons = 5;

/// linear below 1.2, intermediate below 1.85, quadratic up to 2.15, dilute
/// above. m = 1 is degenerate; n < 5 is left unclassified.
RegimeInfo classify_regime(unsigned m, unsigned n);

/// Limit law for the classified regime, with c = m/n (linear, intermediate)
/// or m/n^2 (quadratic). Empty when unclassified.
std::optional<double> asymptote_for(unsigned m, unsigned n);

/// (1-alpha)^2 / P2(m, n), a lower bound on Pr[p_U(S) >= alpha/|Phi|].
double pz_bound(unsigned m, unsigned n, double alpha);

/// Per Haar draw, the fraction of outcomes S with p_U(S) >= alpha/|Phi|
/// (collision-free input); averaged over draws.
MomentEstimate pz_empirical(unsigned m, unsigned n, double alpha, std::uint64_t samples,
                            std::uint64_t seed, unsigned workers = 1);

enum class P2Method { closed, beta, integral, mc };

std::string to_string(P2Method method);
std::optional<P2Method> parse_p2_method(const std::string& name);

/// Above this photon number the exact routes hand over to the integral.
inline constexpr unsigned kExactPathMaxPhotons = 300;
inline constexpr double kLargePathTolerance = 1e-12;

struct P2Options {
  P2Method method = P2Method::closed;
  /// Disable the hand-over to the integral for large n.
  bool force_exact = false;
  double tolerance = 1e-10;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct P2Report {
  unsigned m = 0;
  unsigned n = 0;
  P2Method requested = P2Method::closed;
  /// The route that actually produced `p2`.
  P2Method method = P2Method::closed;
  double p2 = 0.0;
  std::optional<Rational> exact;
  std::optional<MomentEstimate> mc;
  RegimeInfo regime;
  std::optional<double> asymptote;
  double pz_bound_half = 0.0;
};

P2Report evaluate_p2(unsigned m, unsigned n, const P2Options& options = {});

}  // namespace bosonic
