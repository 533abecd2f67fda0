#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bosonic/rational.hpp"

namespace bosonic {

/// Photon counts per mode; the label of one Fock basis state.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<unsigned> counts);

  /// |1,...,1,0,...,0> with n ones; requires n <= m.
  static Occupation collision_free(unsigned m, unsigned n);
  /// All n photons in `mode`.
  static Occupation bunched(unsigned m, unsigned n, unsigned mode = 0);

  unsigned modes() const { return static_cast<unsigned>(counts_.size()); }
  unsigned total() const { return total_; }
  const std::vector<unsigned>& counts() const { return counts_; }
  unsigned operator[](std::size_t i) const { return counts_[i]; }

  bool is_collision_free() const;

  /// Copy with one photon added to (removed from) `mode`.
  Occupation plus(unsigned mode) const;
  Occupation minus(unsigned mode) const;

  std::string to_string() const;

  friend bool operator==(const Occupation&, const Occupation&) = default;
  friend std::strong_ordering operator<=>(const Occupation& a, const Occupation& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

/// The ordered n-photon, m-mode Fock basis. States are sorted lexicographically
/// ascending, so (0,...,0,n) has index 0.
class FockBasis {
 public:
  FockBasis(unsigned m, unsigned n);

  unsigned modes() const { return m_; }
  unsigned photons() const { return n_; }
  std::size_t size() const { return states_.size(); }

  const std::vector<Occupation>& states() const { return states_; }
  const Occupation& state(std::size_t i) const { return states_.at(i); }

  /// O(m) stars-and-bars rank; throws on a mode/photon mismatch.
  std::size_t rank(const Occupation& s) const;
  Occupation unrank(std::size_t index) const;

 private:
  // C(a, b) for a <= n + m, b <= n.
  std::uint64_t choose(unsigned a, unsigned b) const;

  unsigned m_;
  unsigned n_;
  std::vector<std::uint64_t> pascal_;
  std::vector<Occupation> states_;
};

/// Shared, cached basis for (m, n). Thread-safe.
std::shared_ptr<const FockBasis> enumerate_basis(unsigned m, unsigned n);

/// |Phi_m^n| = C(n + m - 1, n), exactly.
BigInt basis_size(unsigned m, unsigned n);

BigInt factorial(unsigned n);
/// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Factorials up to this bound are memoized (default 4096).
void set_factorial_cache_limit(std::size_t limit);
std::size_t factorial_cache_limit();

/// Rising factorial x (x+1) ... (x+p-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned p);
Rational pochhammer(long x, unsigned p);

/// sum_{p=0}^{k} (-1)^p C(k,p) (a)_p / (b)_p z^p, i.e. 2F1(-k, a; b; z).
/// Throws std::domain_error when (b)_p vanishes for some p <= k.
Rational hyp2f1_terminating(unsigned k, const Rational& a, const Rational& b, const Rational& z);

/// prod_{j<n} (m-j)/(m+j) = C(m,n)/C(m+n-1,n); zero when m < n.
Rational collision_free_ratio(unsigned m, unsigned n);

}  // namespace bosonic
