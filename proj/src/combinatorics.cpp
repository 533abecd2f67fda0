#include "bosonic/combinatorics.hpp"

#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace bosonic {

// ---------------------------------------------------------------------------
// Occupation

Occupation::Occupation(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("occupation needs at least one mode");
  total_ = std::accumulate(counts_.begin(), counts_.end(), 0u);
}

Occupation Occupation::collision_free(unsigned m, unsigned n) {
  if (n > m) throw std::invalid_argument("collision-free state needs n <= m");
  std::vector<unsigned> c(m, 0);
  for (unsigned i = 0; i < n; ++i) c[i] = 1;
  return Occupation(std::move(c));
}

Occupation Occupation::bunched(unsigned m, unsigned n, unsigned mode) {
  if (mode >= m) throw std::invalid_argument("mode index out of range");
  std::vector<unsigned> c(m, 0);
  c[mode] = n;
  return Occupation(std::move(c));
}

bool Occupation::is_collision_free() const {
  for (unsigned c : counts_) {
    if (c > 1) return false;
  }
  return true;
}

Occupation Occupation::plus(unsigned mode) const {
  auto c = counts_;
  ++c.at(mode);
  return Occupation(std::move(c));
}

Occupation Occupation::minus(unsigned mode) const {
  auto c = counts_;
  if (c.at(mode) == 0) throw std::invalid_argument("no photon to remove");
  --c[mode];
  return Occupation(std::move(c));
}

std::string Occupation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// FockBasis

namespace {

constexpr std::size_t kMaxBasisSize = std::size_t{1} << 26;

void enumerate_into(std::vector<unsigned>& prefix, unsigned mode, unsigned remaining,
                    std::vector<Occupation>& out) {
  const auto m = static_cast<unsigned>(prefix.size());
  if (mode + 1 == m) {
    prefix[mode] = remaining;
    out.emplace_back(prefix);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    prefix[mode] = v;
    enumerate_into(prefix, mode + 1, remaining - v, out);
  }
}

}  // namespace

FockBasis::FockBasis(unsigned m, unsigned n) : m_(m), n_(n) {
  if (m == 0) throw std::invalid_argument("Fock basis needs m >= 1");
  const BigInt exact = basis_size(m, n);
  if (exact > BigInt(static_cast<unsigned long>(kMaxBasisSize))) {
    throw std::length_error("Fock basis too large to enumerate: " + exact.get_str());
  }

  const unsigned rows = n + m + 1;
  const unsigned cols = n + 1;
  pascal_.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (unsigned a = 0; a < rows; ++a) {
    pascal_[static_cast<std::size_t>(a) * cols] = 1;
    for (unsigned b = 1; b < cols && b <= a; ++b) {
      const auto up = pascal_[static_cast<std::size_t>(a - 1) * cols + b];
      const auto diag = pascal_[static_cast<std::size_t>(a - 1) * cols + b - 1];
      if (up > std::numeric_limits<std::uint64_t>::max() - diag) {
        throw std::overflow_error("binomial table overflow");
      }
      pascal_[static_cast<std::size_t>(a) * cols + b] = up + diag;
    }
  }

  states_.reserve(exact.get_ui());
  std::vector<unsigned> prefix(m, 0);
  enumerate_into(prefix, 0, n, states_);
}

std::uint64_t FockBasis::choose(unsigned a, unsigned b) const {
  return pascal_[static_cast<std::size_t>(a) * (n_ + 1) + b];
}

std::size_t FockBasis::rank(const Occupation& s) const {
  if (s.modes() != m_ || s.total() != n_) {
    throw std::invalid_argument("occupation " + s.to_string() + " not in basis (m=" +
                                std::to_string(m_) + ", n=" + std::to_string(n_) + ")");
  }
  // States preceding s that agree on modes < i and have a smaller count in
  // mode i: sum_{v < s_i} C(rem - v + k - 1, k - 1) = C(rem + k, rem) - C(rem - s_i + k, rem - s_i)
  // with k = m - i - 1 trailing modes.
  std::uint64_t index = 0;
  unsigned rem = n_;
  for (unsigned i = 0; i + 1 < m_; ++i) {
    const unsigned k = m_ - i - 1;
    const unsigned si = s[i];
    index += choose(rem + k, rem) - choose(rem - si + k, rem - si);
    rem -= si;
  }
  return static_cast<std::size_t>(index);
}

Occupation FockBasis::unrank(std::size_t index) const {
  if (index >= states_.size()) throw std::out_of_range("basis index out of range");
  std::vector<unsigned> c(m_, 0);
  std::uint64_t left = index;
  unsigned rem = n_;
  for (unsigned i = 0; i + 1 < m_; ++i) {
    const unsigned k = m_ - i - 1;
    unsigned v = 0;
    // Block of states with count v in mode i has C(rem - v + k - 1, k - 1) members.
    while (true) {
      const std::uint64_t block = choose(rem - v + k - 1, rem - v);
      if (left < block) break;
      left -= block;
      ++v;
    }
    c[i] = v;
    rem -= v;
  }
  c[m_ - 1] = rem;
  return Occupation(std::move(c));
}

std::shared_ptr<const FockBasis> enumerate_basis(unsigned m, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const FockBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({m, n}); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const FockBasis>(m, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace({m, n}, std::move(basis)).first->second;
}

BigInt basis_size(unsigned m, unsigned n) {
  if (m == 0) throw std::invalid_argument("basis size needs m >= 1");
  return binomial(static_cast<long>(n) + m - 1, n);
}

// ---------------------------------------------------------------------------
// Factorials, binomials, Pochhammer symbols

namespace {

struct FactorialCache {
  std::shared_mutex mutex;
  std::deque<BigInt> table{BigInt(1)};
  std::size_t limit = 4096;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

void set_factorial_cache_limit(std::size_t limit) {
  auto& cache = factorial_cache();
  std::unique_lock lock(cache.mutex);
  cache.limit = limit;
  if (cache.table.size() > limit + 1) cache.table.resize(limit + 1);
}

std::size_t factorial_cache_limit() {
  auto& cache = factorial_cache();
  std::shared_lock lock(cache.mutex);
  return cache.limit;
}

BigInt factorial(unsigned n) {
  auto& cache = factorial_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (n < cache.table.size()) return cache.table[n];
    if (n > cache.limit) {
      BigInt out;
      mpz_fac_ui(out.get_mpz_t(), n);
      return out;
    }
  }
  std::unique_lock lock(cache.mutex);
  while (cache.table.size() <= n) {
    const auto next = cache.table.size();
    cache.table.push_back(cache.table.back() * static_cast<unsigned long>(next));
  }
  return cache.table[n];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (static_cast<std::size_t>(n) <= factorial_cache_limit()) {
    const auto un = static_cast<unsigned>(n);
    const auto uk = static_cast<unsigned>(k);
    return factorial(un) / (factorial(uk) * factorial(un - uk));
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational pochhammer(const Rational& x, unsigned p) {
  Rational out = 1;
  Rational factor = x;
  for (unsigned i = 0; i < p; ++i) {
    out *= factor;
    factor += 1;
  }
  return out;
}

Rational pochhammer(long x, unsigned p) {
  BigInt out = 1;
  for (unsigned i = 0; i < p; ++i) out *= BigInt(x + static_cast<long>(i));
  return Rational(out);
}

Rational hyp2f1_terminating(unsigned k, const Rational& a, const Rational& b, const Rational& z) {
  for (unsigned j = 0; j < k; ++j) {
    if (b + j == 0) {
      throw std::domain_error("2F1 denominator Pochhammer (b)_p vanishes at b = " + to_string(b));
    }
  }
  // Horner evaluation of the terminating series: ratio of consecutive terms is
  // -(k - p + 1)/p * (a + p - 1)/(b + p - 1) * z.
  Rational acc = 1;
  for (unsigned p = k; p >= 1; --p) {
    Rational ratio = make_rational(-static_cast<long>(k - p + 1), static_cast<long>(p));
    ratio *= (a + (p - 1)) / (b + (p - 1));
    acc = 1 + ratio * z * acc;
  }
  return acc;
}

Rational collision_free_ratio(unsigned m, unsigned n) {
  if (m < n) return 0;
  Rational out = 1;
  for (unsigned j = 0; j < n; ++j) {
    out *= make_rational(static_cast<long>(m - j), static_cast<long>(m + j));
  }
  return out;
}

}  // namespace bosonic
