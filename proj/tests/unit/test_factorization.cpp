#include "doctest.h"
#include "oracles.hpp"
#include "qdiscord/dense_solver.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/factorization.hpp"

#include <cmath>
#include <numbers>

using namespace qd;

namespace {

struct Eigenness {
  double residual;
  double energy;
};

Eigenness eigen_residual(const ChainSpec& spec, const CVector& ket) {
  const SparseMatrix h = build_hamiltonian(spec);
  const CVector hk = h.cast<Complex>() * ket;
  const double e = ket.dot(hk).real();
  return {(hk - e * ket).norm(), e};
}

}  // namespace

TEST_SUITE("factorization") {
  TEST_CASE("uniform cyclic spin-1/2") {
    const ChainSpec spec = ChainSpec::cyclic_nn(6, 0.5, 1.0, 0.5, 0.0, 0.0);
    const FactorizingField f = uniform_factorizing_field(spec);
    CHECK(f.theta == doctest::Approx(std::numbers::pi / 4).epsilon(1e-14));
    CHECK(f.b_s == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(f.fields.isConstant(f.b_s, 1e-14));
    CHECK_FALSE(f.axes_swapped);
    const Eigen::VectorXd th = Eigen::VectorXd::Constant(6, f.theta);
    CHECK(check_factorization(f.spec, th).satisfied());
    CHECK(eigen_residual(f.spec, product_state(6, 0.5, th)).residual < 1e-9);
  }

  TEST_CASE("chi = 0 endpoint") {
    const FactorizingField f = uniform_factorizing_field(ChainSpec::cyclic_nn(4, 0.5, 1.0, 0.0, 0.0, 0.0));
    CHECK(f.theta == doctest::Approx(std::numbers::pi / 2));
    CHECK(std::abs(f.b_s) < 1e-15);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(uniform_factorizing_field(ChainSpec::cyclic_nn(4, 0.5, 1.0, -0.5, 0.0, 0.0)), DomainError);
    CHECK_THROWS_AS(uniform_factorizing_field(ChainSpec::cyclic_nn(4, 0.5, 0.5, 0.2, 0.5, 0.0)), DomainError);
    Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(3, 3), jy = jx, jz = jx;
    jx(0, 1) = jx(1, 0) = jx(1, 2) = jx(2, 1) = 1.0;
    jy(0, 1) = jy(1, 0) = 0.5;
    jy(1, 2) = jy(2, 1) = 0.3;
    CHECK_THROWS_AS(uniform_factorizing_field(ChainSpec::general(3, 0.5, jx, jy, jz, Eigen::VectorXd::Zero(3))),
                    DomainError);
    CHECK_THROWS_AS(check_factorization(ChainSpec::cyclic_nn(4, 0.5, 1, 0, 0, 0), Eigen::VectorXd::Zero(3)),
                    DimensionMismatch);
  }

  TEST_CASE("chi above one swaps the axes") {
    const FactorizingField f = uniform_factorizing_field(ChainSpec::cyclic_nn(6, 0.5, 0.5, 1.0, 0.0, 0.0));
    CHECK(f.axes_swapped);
    CHECK(f.chi == doctest::Approx(0.5));
    CHECK(f.b_s == doctest::Approx(std::sqrt(0.5)));
    const Eigen::VectorXd th = Eigen::VectorXd::Constant(6, f.theta);
    CHECK(check_factorization(f.spec, th).satisfied());
  }

  TEST_CASE("zero angles reduce the pair condition to J_y - J_x") {
    const ChainSpec spec = ChainSpec::cyclic_nn(4, 0.5, 1.0, 0.3, 0.2, 0.0);
    const FactorizationResiduals r = check_factorization(spec, Eigen::VectorXd::Zero(4));
    CHECK(r.pair(0, 1) == doctest::Approx(0.3 - 1.0));
    CHECK(r.pair(0, 2) == 0.0);
  }

  TEST_CASE("geometry grid: product state is an exact eigenstate") {
    for (double s : {0.5, 1.0}) {
      for (double chi : {0.0, 0.2, 0.5, 0.9}) {
        for (double jz : {0.0, 0.3}) {
          const int n = s == 0.5 ? 6 : 4;
          const double jx = 1.0, jy = jz + chi * (jx - jz);
          for (const ChainSpec& spec : {ChainSpec::cyclic_nn(n, s, jx, jy, jz, 0), ChainSpec::open_nn(n, s, jx, jy, jz, 0),
                                        ChainSpec::fully_connected(n, s, jx, jy, jz, 0)}) {
            const FactorizingField f = uniform_factorizing_field(spec);
            const Eigen::VectorXd th = Eigen::VectorXd::Constant(n, f.theta);
            const FactorizationResiduals r = check_factorization(f.spec, th);
            CHECK(r.satisfied());
            const CVector plus = product_state(n, s, th), minus = product_state(n, s, -th);
            CHECK(eigen_residual(f.spec, plus).residual < 1e-9);
            CHECK(eigen_residual(f.spec, minus).residual < 1e-9);
            const double expected = 2 * s * std::sqrt(f.chi) * (jx - jz);
            if (spec.geometry == Geometry::OpenNN) {
              CHECK(f.fields(0) == doctest::Approx(expected / 2));
              CHECK(f.fields(n - 1) == doctest::Approx(expected / 2));
              CHECK(f.fields(1) == doctest::Approx(expected));
            } else {
              CHECK(f.b_s == doctest::Approx(expected));
            }
          }
        }
      }
    }
  }

  TEST_CASE("parity maps the product state to its mirror") {
    for (double s : {0.5, 1.0, 1.5}) {
      const int n = 3;
      Eigen::VectorXd th(n);
      th << 0.3, 1.1, -0.4;
      const CVector k = product_state(n, s, th);
      const Eigen::VectorXd p = parity_diagonal(n, s);
      CHECK((p.cast<Complex>().asDiagonal() * k - product_state(n, s, -th)).norm() < 1e-14);
      CHECK(std::abs(k.norm() - 1) < 1e-14);
    }
    // spin-1/2 local state: (-sin t/2, cos t/2) on (up, down)
    Eigen::VectorXd th(2);
    th << 0.7, 1.9;
    CHECK((product_state(2, 0.5, th) - oracle::spin_half_product({0.7, 1.9})).norm() < 1e-14);
  }

  TEST_CASE("random spec with random angles is not factorized") {
    oracle::Rng rng(61);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 5; ++t) {
      Eigen::MatrixXd m[3];
      for (auto& x : m) {
        x = Eigen::MatrixXd::Zero(5, 5);
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) x(i, j) = x(j, i) = u(rng);
      }
      Eigen::VectorXd b(5), th(5);
      for (int i = 0; i < 5; ++i) {
        b(i) = u(rng);
        th(i) = 3 * u(rng);
      }
      const ChainSpec spec = ChainSpec::general(5, 0.5, m[0], m[1], m[2], b);
      const FactorizationResiduals r = check_factorization(spec, th);
      CHECK_FALSE(r.satisfied());
      CHECK(eigen_residual(spec, product_state(5, 0.5, th)).residual > 1e-3);
    }
  }

  TEST_CASE("ground state at the factorizing field overlaps the product state") {
    for (double chi : {0.2, 0.5, 0.8}) {
      const ChainSpec spec = ChainSpec::cyclic_nn(8, 0.5, 1.0, chi, 0.0, 0.0);
      const FactorizingField f = uniform_factorizing_field(spec);
      const CVector theta = product_state(8, 0.5, Eigen::VectorXd::Constant(8, f.theta));
      double best = 0;
      for (Parity p : {Parity::Plus, Parity::Minus}) {
        const GroundStateResult g = ground_state_dense_sector(f.spec, p);
        best = std::max(best, std::abs(theta.dot(g.ket.cast<Complex>())));
      }
      CHECK(best > 0.1);
    }
  }
}
