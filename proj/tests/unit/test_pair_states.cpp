#include "doctest.h"
#include "oracles.hpp"
#include "qdiscord/aligned.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/jw_solver.hpp"
#include "qdiscord/pair_states.hpp"

#include <cmath>
#include <numbers>

using namespace qd;

TEST_SUITE("pair_states") {
  TEST_CASE("aligned-mixture observables close the loop") {
    for (double t : {0.2, 0.9, 1.5}) {
      const double c = std::cos(t), s = std::sin(t);
      PairObservables o;
      o.mz_i = o.mz_j = c;
      o.cxx = s * s;
      o.czz = c * c;
      const DensityMatrix r = pair_rdm_from_observables(o);
      CHECK((r.matrix() - bloch_compose(aligned_state({t, 0.0})).matrix()).cwiseAbs().maxCoeff() < 1e-15);
    }
  }

  TEST_CASE("inconsistent observables are rejected") {
    PairObservables o;
    o.cxx = o.cyy = o.czz = 1.0;  // not a state
    CHECK_THROWS_AS(pair_rdm_from_observables(o), InvalidState);
    PairObservables m;
    m.mz_i = 1.0;
    m.mz_j = -1.0;
    m.czz = 1.0;
    CHECK_THROWS_AS(pair_rdm_from_observables(m), InvalidState);
  }

  TEST_CASE("round trip through observables") {
    const ChainSpec spec = ChainSpec::cyclic_nn(12, 0.5, 1.0, 0.3, 0.0, 0.62);
    const GroundStateResult g = ground_state_jw(spec);
    for (int l = 1; l <= 6; ++l) {
      const PairObservables o = pair_observables_jw(g, 2, 2 + l);
      const PairObservables back = pair_observables_from_rdm(pair_rdm_from_observables(o));
      CHECK(std::abs(back.mz_i - o.mz_i) < 1e-15);
      CHECK(std::abs(back.cxx - o.cxx) < 1e-15);
      CHECK(std::abs(back.cyy - o.cyy) < 1e-15);
      CHECK(std::abs(back.czz - o.czz) < 1e-15);
    }
    PairObservables o;
    o.mz_i = 0.1;
    o.mz_j = 0.1;
    o.cxx = 0.2;
    o.cyy = 0.1;
    o.czz = 0.0;
    o.cxy_anti = 0.15;
    const PairObservables back = pair_observables_from_rdm(pair_rdm_from_observables(o));
    CHECK(back.cxy_anti == doctest::Approx(0.15));
  }

  TEST_CASE("definite-parity pair state against the dense construction") {
    for (int n : {3, 4, 6}) {
      for (double t : {std::numbers::pi / 3, 0.4, std::numbers::pi / 2}) {
        for (int sector : {1, -1}) {
          const CVector a = oracle::spin_half_product(std::vector<double>(n, t));
          const CVector b = oracle::spin_half_product(std::vector<double>(n, -t));
          CVector psi = a + double(sector) * b;
          if (psi.norm() < 1e-8) continue;
          psi.normalize();
          const CMatrix expected = oracle::pair_state_from_expectations(psi, n, 0, 1);
          const DensityMatrix r = definite_parity_pair_state(t, n, sector);
          CHECK((r.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }

  TEST_CASE("concurrence and large-n limit") {
    for (int n : {3, 5, 10}) {
      for (int sector : {1, -1}) {
        const double t = 0.8;
        const double eps = sector * std::pow(std::cos(t), n - 2);
        const double expected = std::abs(eps) * std::pow(std::sin(t), 2) / (1 + eps * std::pow(std::cos(t), 2));
        CHECK(std::abs(concurrence(definite_parity_pair_state(t, n, sector)) - expected) < 1e-10);
      }
    }
    const CMatrix far = definite_parity_pair_state(0.9, 400, -1).matrix();
    const CMatrix mirrored = definite_parity_pair_state(0.9, 400, 1).matrix();
    CHECK((far - mirrored).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(definite_parity_pair_state(0.0, 5, 1), DomainError);
    CHECK_THROWS_AS(definite_parity_pair_state(2.0, 5, 1), DomainError);
    CHECK_THROWS_AS(definite_parity_pair_state(0.5, 2, 1), DomainError);
    CHECK_THROWS_AS(definite_parity_pair_state(0.5, 5, 0), DomainError);
  }

  TEST_CASE("exact chain pair state at the factorizing field") {
    const int n = 50;
    const double chi = 0.5, bs = std::sqrt(chi), t = std::acos(std::sqrt(chi));
    const ChainSpec spec = ChainSpec::cyclic_nn(n, 0.5, 1.0, chi, 0.0, bs);
    for (Parity p : {Parity::Plus, Parity::Minus}) {
      const GroundStateResult g = ground_state_jw_sector(spec, p);
      const CMatrix expected = definite_parity_pair_state(t, n, sign(p)).matrix();
      for (int l = 1; l <= 25; ++l) {
        const DensityMatrix r = pair_rdm_from_observables(pair_observables_jw(g, 0, l));
        CHECK((r.matrix() - expected).cwiseAbs().maxCoeff() < 1e-4);
      }
    }
  }
}
