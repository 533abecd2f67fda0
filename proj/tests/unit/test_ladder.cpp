#include <doctest.h>

#include <random>

#include "bosonic/ladder.hpp"
#include "oracles.hpp"

using namespace bosonic;

namespace {

ComplexMatrix random_matrix(std::size_t d, CounterRng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

bool zero(const ExactMap& a) {
  for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
    for (ExactMap::InnerIterator it(a, c); it; ++it) {
      if (it.value() != 0) return false;
    }
  }
  return true;
}

ExactMap identity_map(Eigen::Index d, std::int64_t scale) {
  ExactMap id(d, d);
  id.setIdentity();
  return id * scale;
}

// H = [L, R] restricted to W_n, exact.
ExactMap h_exact(unsigned m, unsigned n) {
  ExactMap h = lower_map_exact(m, n + 1) * raise_map_exact(m, n);
  if (n > 0) h = h - ExactMap(raise_map_exact(m, n - 1) * lower_map_exact(m, n));
  return h;
}

}  // namespace

TEST_CASE("dense lower and raise match explicit creation operators") {
  CounterRng rng(5);
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto basis = enumerate_basis(m, n);
      const SectorOperator x(basis, random_matrix(basis->size(), rng));
      const auto up = raise(x);
      CHECK((up.matrix() - oracle::raise(x.matrix(), m, n)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(up.photons() == n + 1);
      if (n > 0) {
        const auto down = lower(x);
        CHECK((down.matrix() - oracle::lower(x.matrix(), m, n)).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("diagonal fast path agrees with the dense maps") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const auto basis = enumerate_basis(m, n);
      std::vector<Rational> d;
      for (std::size_t i = 0; i < basis->size(); ++i) d.push_back(make_rational(long(i) - 2, 3));
      const DiagonalOperator x(basis, d);
      CHECK((lower(x).to_dense().matrix() - lower(x.to_dense()).matrix()).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((raise(x).to_dense().matrix() - raise(x.to_dense()).matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("R is the Hilbert-Schmidt adjoint of L") {
  CounterRng rng(9);
  for (unsigned m = 2; m <= 3; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const auto hi = enumerate_basis(m, n);
      const auto lo = enumerate_basis(m, n - 1);
      const SectorOperator x(hi, random_matrix(hi->size(), rng));
      const SectorOperator y(lo, random_matrix(lo->size(), rng));
      CHECK(std::abs(hs_inner(lower(x), y) - hs_inner(x, raise(y))) <= 1e-10);
    }
  }
}

TEST_CASE("sl2 relations hold exactly on the assembled maps") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      const auto d = static_cast<Eigen::Index>(enumerate_basis(m, n)->size());
      const auto h = static_cast<std::int64_t>(commutator_h(n, m));
      CHECK(zero(h_exact(m, n) - identity_map(d * d, h)));
      const ExactMap r = raise_map_exact(m, n);
      CHECK(zero(ExactMap(h_exact(m, n + 1) * r) - ExactMap(r * h_exact(m, n)) - ExactMap(r * std::int64_t{2})));
      if (n > 0) {
        const ExactMap l = lower_map_exact(m, n);
        CHECK(zero(ExactMap(h_exact(m, n - 1) * l) - ExactMap(l * h_exact(m, n)) + ExactMap(l * std::int64_t{2})));
      }
    }
  }
}

TEST_CASE("floating assembled maps act like the operator functions") {
  CounterRng rng(13);
  const unsigned m = 3, n = 2;
  const auto basis = enumerate_basis(m, n);
  const SectorOperator x(basis, random_matrix(basis->size(), rng));
  const Eigen::VectorXcd vx = Eigen::Map<const Eigen::VectorXcd>(x.matrix().data(), x.matrix().size());
  const Eigen::VectorXcd vl = lower_map(m, n).cast<Complex>() * vx;
  const auto lx = lower(x).matrix();
  CHECK((vl - Eigen::Map<const Eigen::VectorXcd>(lx.data(), lx.size())).cwiseAbs().maxCoeff() <= 1e-12);
  const Eigen::VectorXcd vr = raise_map(m, n).cast<Complex>() * vx;
  const auto rx = raise(x).matrix();
  CHECK((vr - Eigen::Map<const Eigen::VectorXcd>(rx.data(), rx.size())).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(lower_map(m, 0).rows() == 0);
}

TEST_CASE("lowering the vacuum or too far is an error") {
  CHECK_THROWS(lower(SectorOperator::identity(3, 0)));
  CHECK_THROWS(lower(DiagonalOperator::identity(3, 0)));
  CHECK_THROWS(lower_power(DiagonalOperator::identity(3, 2), 3));
  CHECK(lower_power(DiagonalOperator::identity(3, 2), 0) == DiagonalOperator::identity(3, 2));
}

TEST_CASE("lowering the identity") {
  // L(I_n) = (n + m - 1) I_{n-1}
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      CHECK(lower(DiagonalOperator::identity(m, n)) ==
            DiagonalOperator::identity(m, n - 1) * Rational(long(n) + m - 1));
    }
  }
}

TEST_CASE("exact rank") {
  ExactMap a(3, 3);
  std::vector<Eigen::Triplet<std::int64_t>> t = {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}, {2, 2, 5}};
  a.setFromTriplets(t.begin(), t.end());
  CHECK(exact_rank(a) == 2);
  CHECK(exact_rank(ExactMap(4, 5)) == 0);
  CHECK(exact_rank(identity_map(6, 3)) == 6);
}

TEST_CASE("operator basics") {
  const auto p = SectorOperator::fock_projector(Occupation({1, 0, 1}));
  CHECK(p.hermitian());
  CHECK(trace(p) == Complex(1.0));
  const auto u = haar_unitary(3, std::uint64_t{4});
  const auto c = conjugate(homomorphism_matrix(u, 2), p);
  CHECK(std::abs(trace(c) - 1.0) <= 1e-12);
  CHECK(hs_norm_sq(c) == doctest::Approx(1.0));
  CHECK_THROWS(p + SectorOperator::identity(3, 1));
  CHECK_FALSE((p * Complex(0, 1)).hermitian());
  const auto d = DiagonalOperator::fock_projector(Occupation({2, 0}));
  CHECK(trace(d) == 1);
  CHECK(hs_norm_sq(d + d) == 4);
  CHECK((d - d).is_zero());
}
