#include "bosonic/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bosonic/errors.hpp"
#include "bosonic/interferometer.hpp"
#include "bosonic/irreps.hpp"

namespace bosonic {

void Welford::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void Welford::merge(const Welford& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double Welford::variance() const {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

MomentEstimate Welford::estimate() const {
  const double var = variance();
  const double se = count_ ? std::sqrt(var / static_cast<double>(count_)) : 0.0;
  return {mean_, var, se, count_};
}

MomentEstimate parallel_estimate(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                                 const std::function<double(CounterRng&)>& draw) {
  if (workers == 0) workers = 1;
  if (workers > samples) workers = static_cast<unsigned>(samples ? samples : 1);
  std::vector<Welford> shards(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = samples * w / workers;
    const std::uint64_t end = samples * (w + 1) / workers;
    CounterRng rng = CounterRng::for_worker(seed, w);
    for (std::uint64_t i = begin; i < end; ++i) shards[w].add(draw(rng));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Welford total;
  for (const auto& s : shards) total.merge(s);
  return total.estimate();
}

namespace {

template <typename A, typename B>
void require_matching(const A& rho, const B& obs) {
  if (rho.modes() != obs.modes() || rho.photons() != obs.photons()) {
    throw std::invalid_argument("state and observable live on different sectors");
  }
  if (rho.modes() < 2) throw DegenerateModesError("second moment needs m >= 2");
}

bool is_fock_projector(const DiagonalOperator& x) {
  std::size_t ones = 0;
  for (const auto& v : x.diagonal()) {
    if (v == 1) {
      ++ones;
    } else if (v != 0) {
      return false;
    }
  }
  return ones == 1;
}

void require_mc_inputs(const Occupation& input, const Occupation& output, std::uint64_t samples) {
  if (samples < 100) throw std::invalid_argument("Monte-Carlo estimates need at least 100 samples");
  if (input.modes() != output.modes() || input.total() != output.total()) {
    throw std::invalid_argument("input and output occupations are in different sectors");
  }
}

}  // namespace

Rational second_moment(const DiagonalOperator& rho, const DiagonalOperator& obs) {
  require_matching(rho, obs);
  const auto a = irrep_norms_closed(rho);
  const auto b = irrep_norms_closed(obs);
  Rational out = 0;
  for (unsigned k = 0; k <= rho.photons(); ++k) {
    out += a[k] * b[k] / Rational(irrep_dim(rho.modes(), k));
  }
  return out;
}

double second_moment(const SectorOperator& rho, const SectorOperator& obs) {
  require_matching(rho, obs);
  const auto a = irrep_norms_closed(rho);
  const auto b = irrep_norms_closed(obs);
  double out = 0;
  for (unsigned k = 0; k <= rho.photons(); ++k) {
    out += a[k] * b[k] / to_double(Rational(irrep_dim(rho.modes(), k)));
  }
  return out;
}

Rational fock_second_moment(const Occupation& input, const Occupation& output) {
  if (input.modes() != output.modes() || input.total() != output.total()) {
    throw std::invalid_argument("input and output occupations are in different sectors");
  }
  if (input.modes() == 1) return 1;
  return second_moment(DiagonalOperator::fock_projector(input),
                       DiagonalOperator::fock_projector(output));
}

Rational first_moment(const DiagonalOperator& rho, const DiagonalOperator& obs) {
  if (rho.modes() != obs.modes() || rho.photons() != obs.photons()) {
    throw std::invalid_argument("state and observable live on different sectors");
  }
  if (!is_fock_projector(rho) || !is_fock_projector(obs)) {
    throw std::invalid_argument("first moment is defined here only for rank-one Fock projectors");
  }
  return Rational(BigInt(1), basis_size(rho.modes(), rho.photons()));
}

MomentEstimate mc_second_moment(const Occupation& input, const Occupation& output,
                                std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  require_mc_inputs(input, output, samples);
  const unsigned m = input.modes();
  // one mode: the only outcome has probability exactly 1
  if (m == 1) return {1.0, 0.0, 0.0, samples};
  return parallel_estimate(samples, seed, workers, [&](CounterRng& rng) {
    const double p = output_probability(haar_unitary(m, rng), input, output);
    return p * p;
  });
}

MomentEstimate mc_first_moment(const Occupation& input, const Occupation& output,
                               std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  require_mc_inputs(input, output, samples);
  const unsigned m = input.modes();
  // one mode: the only outcome has probability exactly 1
  if (m == 1) return {1.0, 0.0, 0.0, samples};
  return parallel_estimate(samples, seed, workers, [&](CounterRng& rng) {
    return output_probability(haar_unitary(m, rng), input, output);
  });
}

}  // namespace bosonic
