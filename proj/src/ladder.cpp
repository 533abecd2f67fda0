#include "bosonic/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bosonic {

namespace {

bool hermitian_within(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

// For every state P of the (m, n) basis and mode s, the index of P + e_s in
// the (m, n + 1) basis, stored at P * m + s.
std::vector<std::size_t> up_table(const FockBasis& low, const FockBasis& high) {
  const unsigned m = low.modes();
  std::vector<std::size_t> table(low.size() * m);
  for (std::size_t p = 0; p < low.size(); ++p) {
    for (unsigned s = 0; s < m; ++s) table[p * m + s] = high.rank(low.state(p).plus(s));
  }
  return table;
}

void require_same_sector(const FockBasis& a, const FockBasis& b) {
  if (a.modes() != b.modes() || a.photons() != b.photons()) {
    throw std::invalid_argument("operators live on different sectors");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SectorOperator

SectorOperator::SectorOperator(std::shared_ptr<const FockBasis> basis, ComplexMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (!basis_) throw std::invalid_argument("null basis");
  const auto d = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("operator matrix does not match basis dimension");
  }
  hermitian_ = hermitian_within(matrix_, kHermitianTolerance);
}

SectorOperator SectorOperator::zero(unsigned m, unsigned n) {
  auto basis = enumerate_basis(m, n);
  const auto d = static_cast<Eigen::Index>(basis->size());
  return SectorOperator(std::move(basis), ComplexMatrix::Zero(d, d));
}

SectorOperator SectorOperator::identity(unsigned m, unsigned n) {
  auto basis = enumerate_basis(m, n);
  const auto d = static_cast<Eigen::Index>(basis->size());
  return SectorOperator(std::move(basis), ComplexMatrix::Identity(d, d));
}

SectorOperator SectorOperator::fock_projector(const Occupation& s) {
  auto basis = enumerate_basis(s.modes(), s.total());
  const auto d = static_cast<Eigen::Index>(basis->size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  const auto i = static_cast<Eigen::Index>(basis->rank(s));
  m(i, i) = 1.0;
  return SectorOperator(std::move(basis), std::move(m));
}

SectorOperator SectorOperator::operator+(const SectorOperator& other) const {
  require_same_sector(*basis_, *other.basis_);
  return SectorOperator(basis_, matrix_ + other.matrix_);
}

SectorOperator SectorOperator::operator-(const SectorOperator& other) const {
  require_same_sector(*basis_, *other.basis_);
  return SectorOperator(basis_, matrix_ - other.matrix_);
}

SectorOperator SectorOperator::operator*(Complex scale) const {
  return SectorOperator(basis_, matrix_ * scale);
}

// ---------------------------------------------------------------------------
// DiagonalOperator

DiagonalOperator::DiagonalOperator(std::shared_ptr<const FockBasis> basis,
                                   std::vector<Rational> diagonal)
    : basis_(std::move(basis)), diagonal_(std::move(diagonal)) {
  if (!basis_) throw std::invalid_argument("null basis");
  if (diagonal_.size() != basis_->size()) {
    throw std::invalid_argument("diagonal length does not match basis dimension");
  }
}

DiagonalOperator DiagonalOperator::zero(unsigned m, unsigned n) {
  auto basis = enumerate_basis(m, n);
  std::vector<Rational> d(basis->size(), Rational(0));
  return DiagonalOperator(std::move(basis), std::move(d));
}

DiagonalOperator DiagonalOperator::identity(unsigned m, unsigned n) {
  auto basis = enumerate_basis(m, n);
  std::vector<Rational> d(basis->size(), Rational(1));
  return DiagonalOperator(std::move(basis), std::move(d));
}

DiagonalOperator DiagonalOperator::fock_projector(const Occupation& s) {
  auto basis = enumerate_basis(s.modes(), s.total());
  std::vector<Rational> d(basis->size(), Rational(0));
  d[basis->rank(s)] = 1;
  return DiagonalOperator(std::move(basis), std::move(d));
}

bool DiagonalOperator::is_zero() const {
  return std::all_of(diagonal_.begin(), diagonal_.end(), [](const Rational& q) { return q == 0; });
}

SectorOperator DiagonalOperator::to_dense() const {
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = to_double(diagonal_[i]);
  return SectorOperator(basis_, std::move(m));
}

DiagonalOperator DiagonalOperator::operator+(const DiagonalOperator& other) const {
  require_same_sector(*basis_, *other.basis_);
  auto d = diagonal_;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += other.diagonal_[i];
  return DiagonalOperator(basis_, std::move(d));
}

DiagonalOperator DiagonalOperator::operator-(const DiagonalOperator& other) const {
  require_same_sector(*basis_, *other.basis_);
  auto d = diagonal_;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= other.diagonal_[i];
  return DiagonalOperator(basis_, std::move(d));
}

DiagonalOperator DiagonalOperator::operator*(const Rational& scale) const {
  auto d = diagonal_;
  for (auto& x : d) x *= scale;
  return DiagonalOperator(basis_, std::move(d));
}

bool operator==(const DiagonalOperator& a, const DiagonalOperator& b) {
  return a.modes() == b.modes() && a.photons() == b.photons() && a.diagonal_ == b.diagonal_;
}

// ---------------------------------------------------------------------------
// Lowering and raising

SectorOperator lower(const SectorOperator& x) {
  if (x.photons() == 0) throw std::invalid_argument("cannot lower the vacuum sector");
  const unsigned m = x.modes();
  auto low = enumerate_basis(m, x.photons() - 1);
  const auto up = up_table(*low, *x.basis());
  const auto d = static_cast<Eigen::Index>(low->size());
  ComplexMatrix y = ComplexMatrix::Zero(d, d);
  for (Eigen::Index q = 0; q < d; ++q) {
    const auto& qs = low->state(q);
    for (Eigen::Index p = 0; p < d; ++p) {
      const auto& ps = low->state(p);
      Complex acc = 0.0;
      for (unsigned s = 0; s < m; ++s) {
        const double f = std::sqrt(double(ps[s] + 1) * double(qs[s] + 1));
        acc += f * x.matrix()(up[p * m + s], up[q * m + s]);
      }
      y(p, q) = acc;
    }
  }
  return SectorOperator(std::move(low), std::move(y));
}

SectorOperator raise(const SectorOperator& x) {
  const unsigned m = x.modes();
  auto high = enumerate_basis(m, x.photons() + 1);
  const auto up = up_table(*x.basis(), *high);
  const auto d = static_cast<Eigen::Index>(x.dim());
  const auto dh = static_cast<Eigen::Index>(high->size());
  ComplexMatrix y = ComplexMatrix::Zero(dh, dh);
  for (Eigen::Index q = 0; q < d; ++q) {
    const auto& qs = x.basis()->state(q);
    for (Eigen::Index p = 0; p < d; ++p) {
      const auto& ps = x.basis()->state(p);
      const Complex v = x.matrix()(p, q);
      if (v == Complex(0.0)) continue;
      for (unsigned s = 0; s < m; ++s) {
        const double f = std::sqrt(double(ps[s] + 1) * double(qs[s] + 1));
        y(up[p * m + s], up[q * m + s]) += f * v;
      }
    }
  }
  return SectorOperator(std::move(high), std::move(y));
}

DiagonalOperator lower(const DiagonalOperator& x) {
  if (x.photons() == 0) throw std::invalid_argument("cannot lower the vacuum sector");
  const unsigned m = x.modes();
  auto low = enumerate_basis(m, x.photons() - 1);
  const auto up = up_table(*low, *x.basis());
  std::vector<Rational> y(low->size(), Rational(0));
  for (std::size_t p = 0; p < low->size(); ++p) {
    const auto& ps = low->state(p);
    for (unsigned s = 0; s < m; ++s) y[p] += (ps[s] + 1) * x[up[p * m + s]];
  }
  return DiagonalOperator(std::move(low), std::move(y));
}

DiagonalOperator raise(const DiagonalOperator& x) {
  const unsigned m = x.modes();
  auto high = enumerate_basis(m, x.photons() + 1);
  const auto up = up_table(*x.basis(), *high);
  std::vector<Rational> y(high->size(), Rational(0));
  for (std::size_t p = 0; p < x.dim(); ++p) {
    if (x[p] == 0) continue;
    const auto& ps = x.basis()->state(p);
    for (unsigned s = 0; s < m; ++s) y[up[p * m + s]] += (ps[s] + 1) * x[p];
  }
  return DiagonalOperator(std::move(high), std::move(y));
}

namespace {

template <typename Op>
Op lower_power_impl(const Op& x, unsigned j) {
  if (j > x.photons()) throw std::invalid_argument("cannot lower more times than photons present");
  Op out = x;
  for (unsigned i = 0; i < j; ++i) out = lower(out);
  return out;
}

template <typename Op>
Op raise_power_impl(const Op& x, unsigned j) {
  Op out = x;
  for (unsigned i = 0; i < j; ++i) out = raise(out);
  return out;
}

}  // namespace

SectorOperator lower_power(const SectorOperator& x, unsigned j) { return lower_power_impl(x, j); }
DiagonalOperator lower_power(const DiagonalOperator& x, unsigned j) {
  return lower_power_impl(x, j);
}
SectorOperator raise_power(const SectorOperator& x, unsigned j) { return raise_power_impl(x, j); }
DiagonalOperator raise_power(const DiagonalOperator& x, unsigned j) {
  return raise_power_impl(x, j);
}

unsigned long commutator_h(unsigned n, unsigned m) { return m + 2ul * n; }

Complex trace(const SectorOperator& x) { return x.matrix().trace(); }

Rational trace(const DiagonalOperator& x) {
  Rational t = 0;
  for (const auto& v : x.diagonal()) t += v;
  return t;
}

Complex hs_inner(const SectorOperator& a, const SectorOperator& b) {
  require_same_sector(*a.basis(), *b.basis());
  return (a.matrix().adjoint() * b.matrix()).trace();
}

Rational hs_inner(const DiagonalOperator& a, const DiagonalOperator& b) {
  require_same_sector(*a.basis(), *b.basis());
  Rational t = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a[i] * b[i];
  return t;
}

double hs_norm_sq(const SectorOperator& x) { return x.matrix().squaredNorm(); }

Rational hs_norm_sq(const DiagonalOperator& x) { return hs_inner(x, x); }

SectorOperator conjugate(const HomomorphismMatrix& phi, const SectorOperator& x) {
  require_same_sector(*phi.basis, *x.basis());
  return SectorOperator(x.basis(), phi.matrix * x.matrix() * phi.matrix.adjoint());
}

// ---------------------------------------------------------------------------
// Assembled maps

namespace {

template <typename Scalar, typename Value>
Eigen::SparseMatrix<Scalar> assemble_lower(unsigned m, unsigned n, Value value) {
  auto high = enumerate_basis(m, n);
  const auto dh = static_cast<Eigen::Index>(high->size());
  if (n == 0) return Eigen::SparseMatrix<Scalar>(0, dh * dh);
  auto low = enumerate_basis(m, n - 1);
  const auto dl = static_cast<Eigen::Index>(low->size());
  const auto up = up_table(*low, *high);
  std::vector<Eigen::Triplet<Scalar>> entries;
  entries.reserve(static_cast<std::size_t>(dl * dl) * m);
  for (Eigen::Index q = 0; q < dl; ++q) {
    for (Eigen::Index p = 0; p < dl; ++p) {
      for (unsigned s = 0; s < m; ++s) {
        const auto row = p + dl * q;
        const auto col = static_cast<Eigen::Index>(up[p * m + s]) +
                         dh * static_cast<Eigen::Index>(up[q * m + s]);
        entries.emplace_back(row, col, value(low->state(p)[s] + 1, low->state(q)[s] + 1));
      }
    }
  }
  Eigen::SparseMatrix<Scalar> out(dl * dl, dh * dh);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

}  // namespace

RealMap lower_map(unsigned m, unsigned n) {
  return assemble_lower<double>(m, n, [](unsigned a, unsigned b) { return std::sqrt(double(a) * b); });
}

RealMap raise_map(unsigned m, unsigned n) {
  RealMap out = lower_map(m, n + 1).transpose();
  return out;
}

ExactMap lower_map_exact(unsigned m, unsigned n) {
  return assemble_lower<std::int64_t>(
      m, n, [](unsigned a, unsigned b) { return static_cast<std::int64_t>(a) * b; });
}

ExactMap raise_map_exact(unsigned m, unsigned n) {
  ExactMap pattern = assemble_lower<std::int64_t>(m, n + 1, [](unsigned, unsigned) {
    return std::int64_t{1};
  });
  ExactMap out = pattern.transpose();
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const ExactMap& map) {
  // The maps are block-diagonal (they preserve P - Q); eliminate each
  // connected block separately.
  const auto rows = static_cast<std::size_t>(map.rows());
  const auto cols = static_cast<std::size_t>(map.cols());
  DisjointSets sets(rows + cols);
  for (Eigen::Index c = 0; c < map.outerSize(); ++c) {
    for (ExactMap::InnerIterator it(map, c); it; ++it) {
      if (it.value() != 0) sets.unite(static_cast<std::size_t>(it.row()), rows + c);
    }
  }
  std::vector<std::vector<std::size_t>> block_rows(rows + cols), block_cols(rows + cols);
  for (std::size_t r = 0; r < rows; ++r) block_rows[sets.find(r)].push_back(r);
  for (std::size_t c = 0; c < cols; ++c) block_cols[sets.find(rows + c)].push_back(c);

  std::vector<std::size_t> local_row(rows), local_col(cols);
  std::size_t rank = 0;
  for (std::size_t b = 0; b < rows + cols; ++b) {
    if (block_rows[b].empty() || block_cols[b].empty()) continue;
    for (std::size_t i = 0; i < block_rows[b].size(); ++i) local_row[block_rows[b][i]] = i;
    for (std::size_t j = 0; j < block_cols[b].size(); ++j) local_col[block_cols[b][j]] = j;
    std::vector<std::vector<Rational>> dense(block_rows[b].size(),
                                             std::vector<Rational>(block_cols[b].size()));
    for (std::size_t c : block_cols[b]) {
      for (ExactMap::InnerIterator it(map, static_cast<Eigen::Index>(c)); it; ++it) {
        dense[local_row[static_cast<std::size_t>(it.row())]][local_col[c]] =
            static_cast<long>(it.value());
      }
    }
    rank += dense_rank(std::move(dense));
  }
  return rank;
}

}  // namespace bosonic
