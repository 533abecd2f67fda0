#pragma once

#include <cstdint>
#include <functional>

#include "bosonic/combinatorics.hpp"
#include "bosonic/ladder.hpp"
#include "bosonic/rational.hpp"
#include "bosonic/rng.hpp"

namespace bosonic {

struct MomentEstimate {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// One-pass mean/variance; merge() combines disjoint shards.
class Welford {
 public:
  void add(double x);
  void merge(const Welford& other);

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const;
  MomentEstimate estimate() const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Runs `draw` `samples` times, sharded over `workers` threads. Worker w owns
/// the stream CounterRng::for_worker(seed, w) and a contiguous slice of the
/// samples, so the result depends only on (seed, samples, workers).
MomentEstimate parallel_estimate(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                                 const std::function<double(CounterRng&)>& draw);

/// E_U[Tr(rho phi(U)^dagger O phi(U))^2] = sum_k ||P_k rho||^2 ||P_k O||^2 / d_k.
Rational second_moment(const DiagonalOperator& rho, const DiagonalOperator& obs);
double second_moment(const SectorOperator& rho, const SectorOperator& obs);

/// E_U[p_U(output)^2] for Fock input and output; 1 when m = 1.
Rational fock_second_moment(const Occupation& input, const Occupation& output);

/// E_U[p_U(output)] = 1/D. Both arguments must be rank-one Fock projectors.
Rational first_moment(const DiagonalOperator& rho, const DiagonalOperator& obs);

/// Monte-Carlo estimate of E_U[p_U(output)^2]; samples >= 100.
MomentEstimate mc_second_moment(const Occupation& input, const Occupation& output,
                                std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

/// Monte-Carlo estimate of E_U[p_U(output)].
MomentEstimate mc_first_moment(const Occupation& input, const Occupation& output,
                               std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace bosonic
