#include "bosonic/interferometer.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace bosonic {

double unitarity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  const ComplexMatrix d = a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols());
  return d.cwiseAbs().maxCoeff();
}

Interferometer::Interferometer(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("interferometer must be a non-empty square matrix");
  }
  if (const double defect = unitarity_defect(matrix_); !(defect <= kUnitarityTolerance)) {
    throw std::invalid_argument("interferometer matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
}

Interferometer Interferometer::identity(unsigned m) {
  return Interferometer(ComplexMatrix::Identity(m, m));
}

Interferometer Interferometer::operator*(const Interferometer& other) const {
  if (modes() != other.modes()) throw std::invalid_argument("mode count mismatch");
  ComplexMatrix product = matrix_ * other.matrix_;
  // Re-orthonormalize accumulated rounding so long products stay admissible.
  Eigen::HouseholderQR<ComplexMatrix> qr(product);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(product.rows(), product.cols());
  const auto r = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < q.cols(); ++j) q.col(j) *= r(j) / std::abs(r(j));
  return Interferometer(std::move(q));
}

Interferometer haar_unitary(unsigned m, CounterRng& rng) {
  if (m == 0) throw std::invalid_argument("haar_unitary needs m >= 1");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix z(m, m);
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < m; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, m);
  const auto r = qr.matrixQR().diagonal();
  for (unsigned j = 0; j < m; ++j) q.col(j) *= r(j) / std::abs(r(j));
  return Interferometer(std::move(q));
}

Interferometer haar_unitary(unsigned m, std::uint64_t seed) {
  CounterRng rng(seed);
  return haar_unitary(m, rng);
}

Complex permanent(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent needs a square matrix");
  const auto n = static_cast<unsigned>(a.rows());
  if (n == 0) return 1.0;
  if (n >= 63) throw std::invalid_argument("permanent size too large");

  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < subsets; ++g) {
    const int j = std::countr_zero(g);
    const std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    const double sign_col = (gray & bit) ? 1.0 : -1.0;
    for (unsigned i = 0; i < n; ++i) row_sums[i] += sign_col * a(i, j);
    Complex prod = 1.0;
    for (unsigned i = 0; i < n; ++i) prod *= row_sums[i];
    total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

namespace detail {

Complex permanent_glynn(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent needs a square matrix");
  const auto n = static_cast<unsigned>(a.rows());
  if (n == 0) return 1.0;
  if (n >= 63) throw std::invalid_argument("permanent size too large");

  std::vector<Complex> col_sums(n, 0.0);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) col_sums[j] += a(i, j);
  }
  std::vector<double> delta(n, 1.0);
  double sign = 1.0;
  auto product = [&] {
    Complex p = 1.0;
    for (unsigned j = 0; j < n; ++j) p *= col_sums[j];
    return p;
  };
  Complex total = product();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < steps; ++g) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(g)) + 1;
    delta[i] = -delta[i];
    sign = -sign;
    for (unsigned j = 0; j < n; ++j) col_sums[j] += 2.0 * delta[i] * a(i, j);
    total += sign * product();
  }
  return total / std::ldexp(1.0, static_cast<int>(n - 1));
}

}  // namespace detail

namespace {

void check_pair(const Interferometer& u, const Occupation& input, const Occupation& output) {
  if (input.modes() != u.modes() || output.modes() != u.modes()) {
    throw std::invalid_argument("occupation mode count does not match interferometer");
  }
  if (input.total() != output.total()) {
    throw std::invalid_argument("input and output photon totals differ: " + input.to_string() +
                                " vs " + output.to_string());
  }
}

std::vector<unsigned> repeated_indices(const Occupation& s) {
  std::vector<unsigned> out;
  out.reserve(s.total());
  for (unsigned i = 0; i < s.modes(); ++i) out.insert(out.end(), s[i], i);
  return out;
}

double factorial_product(const Occupation& s) {
  double out = 1.0;
  for (unsigned c : s.counts()) out *= std::tgamma(c + 1.0);
  return out;
}

}  // namespace

Complex amplitude(const Interferometer& u, const Occupation& input, const Occupation& output) {
  check_pair(u, input, output);
  const unsigned n = input.total();
  if (n == 0) return 1.0;
  const auto rows = repeated_indices(output);
  const auto cols = repeated_indices(input);
  ComplexMatrix sub(n, n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) sub(a, b) = u.matrix()(rows[a], cols[b]);
  }
  return permanent(sub) / std::sqrt(factorial_product(input) * factorial_product(output));
}

double output_probability(const Interferometer& u, const Occupation& input,
                          const Occupation& output) {
  return std::norm(amplitude(u, input, output));
}

HomomorphismMatrix homomorphism_matrix(const Interferometer& u, unsigned n) {
  auto basis = enumerate_basis(u.modes(), n);
  const auto d = static_cast<Eigen::Index>(basis->size());
  ComplexMatrix phi(d, d);
  for (Eigen::Index s = 0; s < d; ++s) {
    for (Eigen::Index t = 0; t < d; ++t) {
      phi(t, s) = amplitude(u, basis->state(s), basis->state(t));
    }
  }
  if (const double defect = unitarity_defect(phi);
      !(defect <= HomomorphismMatrix::kUnitarityTolerance)) {
    throw std::runtime_error("lifted representation lost unitarity (defect " +
                             std::to_string(defect) + ")");
  }
  return {std::move(basis), std::move(phi)};
}

}  // namespace bosonic
