#include "doctest.h"
#include "oracles.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/qstate.hpp"

#include <cmath>

using namespace qd;

namespace {

TwoQubitBloch aligned_plain_bloch(double t) {
  const double c = std::cos(t), s = std::sin(t);
  TwoQubitBloch b;
  b.r_a = b.r_b = Vec3(0, 0, c);
  b.j = Vec3(s * s, 0, c * c).asDiagonal();
  return b;
}

}  // namespace

TEST_SUITE("qstate") {
  TEST_CASE("DensityMatrix validation") {
    CMatrix m = CMatrix::Identity(2, 2) * 0.5;
    CHECK_NOTHROW(DensityMatrix::from_matrix(m));
    m(0, 1) = Complex(0.1, 0);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(m), InvalidState);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(CMatrix::Identity(2, 2)), InvalidState);
    CMatrix neg = CMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    const DensityMatrix d = DensityMatrix::from_matrix(neg);
    CHECK_FALSE(d.is_positive());
    CHECK_THROWS_AS(d.require_valid(), InvalidState);
  }

  TEST_CASE("bloch_decompose of I/4 and |00>") {
    const TwoQubitBloch mm = bloch_decompose(DensityMatrix::maximally_mixed(4));
    CHECK(mm.r_a.norm() < 1e-15);
    CHECK(mm.r_b.norm() < 1e-15);
    CHECK(mm.j.norm() < 1e-15);
    CVector up = CVector::Zero(4);
    up(0) = 1;
    const TwoQubitBloch b = bloch_decompose(DensityMatrix::pure(up));
    CHECK((b.r_a - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK((b.r_b - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK((b.j - Mat3(Vec3(0, 0, 1).asDiagonal())).norm() < 1e-15);
  }

  TEST_CASE("bloch_decompose rejects wrong dimension") {
    CHECK_THROWS_AS(bloch_decompose(DensityMatrix::maximally_mixed(3)), InvalidState);
  }

  TEST_CASE("compose/decompose round trip on random states") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const DensityMatrix rho = DensityMatrix::from_matrix(oracle::random_density(rng, 4, 1 + t % 4));
      const DensityMatrix back = bloch_compose(bloch_decompose(rho));
      CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("bloch_compose examples") {
    const DensityMatrix zero = bloch_compose(TwoQubitBloch{});
    CHECK((zero.matrix() - CMatrix::Identity(4, 4) / 4.0).norm() < 1e-15);
    // theta = pi/2 aligned mixture is (|xx><xx| + |-x-x><-x-x|)/2
    const DensityMatrix r = bloch_compose(aligned_plain_bloch(M_PI / 2));
    CVector px(2), mx(2);
    px << 1, 1;
    mx << 1, -1;
    px /= std::sqrt(2.0);
    mx /= std::sqrt(2.0);
    const CVector xx = oracle::kron2(px, px), mm = oracle::kron2(mx, mx);
    const CMatrix expected = 0.5 * (xx * xx.adjoint() + mm * mm.adjoint());
    CHECK((r.matrix() - expected).norm() < 1e-14);
    TwoQubitBloch big;
    big.r_a = Vec3(0, 0, 2);
    CHECK_FALSE(bloch_compose(big).is_positive());
  }

  TEST_CASE("partial_trace") {
    oracle::Rng rng(3);
    const CMatrix a = oracle::random_density(rng, 2), b = oracle::random_density(rng, 2);
    const DensityMatrix prod = DensityMatrix::from_matrix(oracle::kron2(a, b));
    CHECK((partial_trace(prod, 2, 2, Side::B).matrix() - b).norm() < 1e-14);
    const DensityMatrix bell = DensityMatrix::from_matrix(oracle::bell_phi_plus());
    CHECK((partial_trace(bell, 2, 2, Side::A).matrix() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);
    CHECK((partial_trace(bell, 2, 2, Side::B).matrix() - CMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);
    CHECK_THROWS_AS(partial_trace(bell, 2, 3, Side::A), DimensionMismatch);
  }

  TEST_CASE("partial_trace of a GHZ-like state against index summation") {
    // (|000> + |111>)/sqrt 2 with weights, keep sites (1,2)
    CVector ghz = CVector::Zero(8);
    ghz(0) = std::sqrt(0.3);
    ghz(7) = std::sqrt(0.7);
    const DensityMatrix rho = DensityMatrix::pure(ghz);
    const DensityMatrix pair = partial_trace(rho, 2, 4, Side::B);
    CHECK((pair.matrix() - oracle::index_partial_trace(rho.matrix(), 2, 4, false)).norm() < 1e-15);
    const RVector ev = eigenvalues(pair);
    CHECK(ev(0) == doctest::Approx(0.7));
    CHECK(ev(1) == doctest::Approx(0.3));
    CHECK(std::abs(ev(2)) < 1e-14);
  }

  TEST_CASE("partial trace keeping B recovers r_B") {
    oracle::Rng rng(5);
    for (int t = 0; t < 50; ++t) {
      const TwoQubitBloch b = bloch_decompose(DensityMatrix::from_matrix(oracle::random_density(rng, 4)));
      const CMatrix rb = partial_trace(bloch_compose(b), 2, 2, Side::B).matrix();
      for (int mu = 0; mu < 3; ++mu) CHECK(std::abs((rb * oracle::sigma(mu)).trace().real() - b.r_b(mu)) < 1e-14);
    }
  }

  TEST_CASE("eigh") {
    const EigenSystem mm = eigh(DensityMatrix::maximally_mixed(4));
    for (int i = 0; i < 4; ++i) CHECK(mm.values(i) == doctest::Approx(0.25));
    CMatrix d = CMatrix::Zero(4, 4);
    d.diagonal() << 0.1, 0.4, 0.2, 0.3;
    const EigenSystem es = eigh(d);
    CHECK(es.values(0) == doctest::Approx(0.4));
    CHECK(es.values(3) == doctest::Approx(0.1));
    oracle::Rng rng(8);
    for (int t = 0; t < 50; ++t) {
      CMatrix g = oracle::random_density(rng, 6) - CMatrix::Identity(6, 6) * 0.1;
      const EigenSystem e = eigh(g);
      for (int k = 0; k < 6; ++k) CHECK((g * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).norm() < 1e-10);
      for (int k = 0; k + 1 < 6; ++k) CHECK(e.values(k) >= e.values(k + 1));
    }
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(eigh(bad), InvalidState);
  }

  TEST_CASE("concurrence") {
    CHECK(concurrence(DensityMatrix::from_matrix(oracle::bell_phi_plus())) == doctest::Approx(1.0));
    oracle::Rng rng(9);
    const DensityMatrix prod =
        DensityMatrix::from_matrix(oracle::kron2(oracle::random_density(rng, 2), oracle::random_density(rng, 2)));
    CHECK(concurrence(prod) < 1e-10);
  }

  TEST_CASE("concurrence is invariant under local unitaries") {
    oracle::Rng rng(10);
    for (int t = 0; t < 100; ++t) {
      const DensityMatrix rho = DensityMatrix::from_matrix(oracle::random_density(rng, 4, 2));
      const DensityMatrix rot =
          apply_local_unitary(rho, oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
      CHECK(std::abs(concurrence(rho) - concurrence(rot)) < 1e-10);
    }
  }

  TEST_CASE("schmidt") {
    oracle::Rng rng(1);
    const CVector prod = oracle::kron2(oracle::random_ket(rng, 2), oracle::random_ket(rng, 3));
    CHECK(schmidt(prod, 2, 3).rank() == 1);
    CVector bell = CVector::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    const SchmidtDecomposition sb = schmidt(bell, 2, 2);
    CHECK(sb.probs[0] == doctest::Approx(0.5));
    CHECK(sb.probs[1] == doctest::Approx(0.5));
    CHECK_THROWS_AS(schmidt(2.0 * bell, 2, 2), InvalidState);
  }

  TEST_CASE("schmidt reconstruction and entanglement entropy") {
    oracle::Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      const int da = 2 + t % 2, db = 2 + (t / 2) % 3;
      const CVector psi = oracle::random_ket(rng, da * db);
      const SchmidtDecomposition s = schmidt(psi, da, db);
      CVector rec = CVector::Zero(da * db);
      double total = 0.0, ent = 0.0;
      for (std::size_t k = 0; k < s.probs.size(); ++k) {
        rec += std::sqrt(s.probs[k]) * oracle::kron2(s.basis_a.col(static_cast<Eigen::Index>(k)),
                                                     s.basis_b.col(static_cast<Eigen::Index>(k)));
        total += s.probs[k];
        if (s.probs[k] > 0) ent -= s.probs[k] * std::log2(s.probs[k]);
      }
      CHECK((rec - psi).norm() < 1e-12);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs((s.basis_a.adjoint() * s.basis_a - CMatrix::Identity(s.basis_a.cols(), s.basis_a.cols())).norm()) < 1e-12);
      const CMatrix rho = psi * psi.adjoint();
      CHECK(std::abs(ent - oracle::vn(oracle::index_partial_trace(rho, da, db, true))) < 1e-10);
      CHECK(std::abs(ent - oracle::vn(oracle::index_partial_trace(rho, da, db, false))) < 1e-10);
    }
  }

  TEST_CASE("spin_half_rotation matches bloch_rotation") {
    oracle::Rng rng(13);
    for (int t = 0; t < 20; ++t) {
      const Vec3 axis = oracle::random_unit(rng);
      const Eigen::Matrix2cd u = spin_half_rotation(axis, 0.7 + t);
      const Mat3 r = bloch_rotation(u);
      const Vec3 v = oracle::random_unit(rng);
      const Eigen::Matrix2cd vs = v(0) * oracle::sigma(0) + v(1) * oracle::sigma(1) + v(2) * oracle::sigma(2);
      const Eigen::Matrix2cd rotated = u * vs * u.adjoint();
      const Vec3 w = r * v;
      for (int mu = 0; mu < 3; ++mu) CHECK(std::abs(0.5 * (rotated * oracle::sigma(mu)).trace().real() - w(mu)) < 1e-12);
    }
  }
}
