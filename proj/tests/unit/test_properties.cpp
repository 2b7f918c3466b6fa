#include "doctest.h"
#include "oracles.hpp"
#include "qdiscord/jw_solver.hpp"
#include "qdiscord/lipkin_solver.hpp"
#include "qdiscord/measures.hpp"
#include "qdiscord/pair_states.hpp"

#include <cmath>

using namespace qd;

namespace {

DensityMatrix dm(const CMatrix& m) { return DensityMatrix::from_matrix(m); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("Schmidt probabilities give the marginal entropies") {
    oracle::Rng rng(71);
    for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 4}}) {
      for (int t = 0; t < 20; ++t) {
        const CVector psi = oracle::random_ket(rng, da * db);
        const SchmidtDecomposition s = schmidt(psi, da, db);
        double sum = 0, h = 0;
        for (double p : s.probs) {
          sum += p;
          if (p > 0) h -= p * std::log2(p);
        }
        CHECK(std::abs(sum - 1) < 1e-12);
        const CMatrix rho = psi * psi.adjoint();
        CHECK(std::abs(h - oracle::vn(oracle::index_partial_trace(rho, da, db, true))) < 1e-10);
        CHECK(std::abs(h - oracle::vn(oracle::index_partial_trace(rho, da, db, false))) < 1e-10);
      }
    }
  }

  TEST_CASE("concurrence is invariant under local unitaries") {
    oracle::Rng rng(72);
    for (int t = 0; t < 100; ++t) {
      const CMatrix rho = oracle::random_density(rng, 4, 1 + t % 4);
      const DensityMatrix r = apply_local_unitary(dm(rho), oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
      CHECK(std::abs(concurrence(dm(rho)) - concurrence(r)) < 1e-10);
    }
  }

  TEST_CASE("measurement never decreases any entropy") {
    oracle::Rng rng(73);
    std::uniform_real_distribution<double> uq(0.2, 4.0);
    for (int t = 0; t < 300; ++t) {
      const CMatrix rho = oracle::random_density(rng, 4, 1 + t % 4);
      const TwoQubitBloch b = bloch_decompose(dm(rho));
      const MeasurementDirection k = MeasurementDirection::normalized(oracle::random_unit(rng));
      double q = uq(rng);
      if (std::abs(q - 1) < 1e-3) q = 2;
      for (const auto& kind : {EntropyKind::von_neumann(), EntropyKind::linear(), EntropyKind::tsallis(q)}) {
        CHECK(deficit_at(kind, b, k) >= -1e-10);
      }
    }
  }

  TEST_CASE("discord is bounded by the one-way deficit") {
    oracle::Rng rng(74);
    for (int t = 0; t < 60; ++t) {
      const TwoQubitBloch b = bloch_decompose(dm(oracle::random_density(rng, 4, 1 + t % 4)));
      const double d = quantum_discord(b).value, i1 = one_way_deficit(b).value;
      CHECK(d >= 0);
      CHECK(d <= i1 + 1e-9);
    }
  }

  TEST_CASE("measures vanish on classical-quantum states") {
    oracle::Rng rng(75);
    for (int t = 0; t < 20; ++t) {
      const CMatrix u = oracle::random_unitary(rng, 2);
      CMatrix rho = CMatrix::Zero(4, 4);
      for (int j = 0; j < 2; ++j) {
        const CVector e = u.col(j);
        rho += (j ? 0.35 : 0.65) * oracle::kron2(oracle::random_density(rng, 2), e * e.adjoint());
      }
      const TwoQubitBloch b = bloch_decompose(dm(rho));
      CHECK(quantum_discord(b).value < 1e-8);
      CHECK(one_way_deficit(b).value < 1e-8);
      CHECK(geometric_discord_closed(b).value < 1e-12);
      CHECK(cubic_discord_closed(b).value < 1e-12);
    }
  }

  TEST_CASE("sweep sum rule: magnetizations and pair states stay physical") {
    for (int gi = 0; gi <= 30; ++gi) {
      const double b = 0.05 * gi;
      const GroundStateResult g = ground_state_jw(ChainSpec::cyclic_nn(50, 0.5, 1.0, 0.5, 0.0, b));
      for (int l : {1, 7, 25}) {
        const PairObservables o = pair_observables_jw(g, 0, l);
        CHECK(std::abs(o.mz_i) <= 1.0);
        for (double c : {o.czz, o.cxx, o.cyy}) CHECK(std::abs(c) <= 1.0 + 1e-12);
        CHECK_NOTHROW(pair_rdm_from_observables(o));
      }
      const GroundStateResult lg = lipkin_ground_state(50, 1.0, 0.5, b);
      CHECK(pair_rdm_symmetric(lg.block, 50).is_positive(1e-9));
    }
  }

  TEST_CASE("partial trace of a composed state keeps the Bloch vector") {
    oracle::Rng rng(76);
    for (int t = 0; t < 50; ++t) {
      const TwoQubitBloch b = bloch_decompose(dm(oracle::random_density(rng, 4)));
      const TwoQubitBloch c{b.r_a, b.r_b, b.j};
      const DensityMatrix rb = partial_trace(bloch_compose(c), 2, 2, Side::B);
      const Vec3 v((rb.matrix() * pauli(0)).trace().real(), (rb.matrix() * pauli(1)).trace().real(),
                   (rb.matrix() * pauli(2)).trace().real());
      CHECK((v - b.r_b).norm() < 1e-14);
    }
  }
}
