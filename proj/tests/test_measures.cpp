#include "qsim/measures.hpp"

#include "qsim/closed_form.hpp"
#include "qsim/states.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qsim;

TEST_CASE("purity-route values for the reference states") {
  for (int n : {2, 3, 6}) {
    CHECK(mw_global_entanglement(ghz_state(n)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  ComplexVector ground = ComplexVector::Zero(8);
  ground(0) = 1.0;
  CHECK(mw_global_entanglement(PureState(3, ground)) <= 1e-14);
  CHECK(mw_global_entanglement(w_state(2)) == doctest::Approx(1.0));
  CHECK(mw_global_entanglement(w_state(4)) == doctest::Approx(0.75));
}

TEST_CASE("information budget of reference states") {
  ComplexVector ground = ComplexVector::Zero(8);
  ground(0) = 1.0;
  const InformationBudget b0 = information_budget(PureState(3, ground));
  CHECK(b0.i_total == doctest::Approx(3.0));
  CHECK(b0.i_local == doctest::Approx(3.0));
  CHECK(b0.i_nonlocal <= 1e-14);

  const InformationBudget bell = information_budget(ghz_state(2));
  CHECK(bell.i_total == doctest::Approx(2.0));
  CHECK(bell.i_local == doctest::Approx(0.0).epsilon(1e-12).scale(1));
  CHECK(bell.i_nonlocal == doctest::Approx(2.0));

  const InformationBudget w4 = information_budget(w_state(4));
  CHECK(w4.i_nonlocal == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("information splits add up on random pure states") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const InformationBudget b = information_budget(test::random_pure_state(rng, n));
    CHECK(std::abs(b.i_total - b.i_local - b.i_nonlocal) < 1e-10);
    CHECK(b.i_total == doctest::Approx(double(n)));
  }
}

TEST_CASE("concurrence of Bell and product states") {
  CHECK(concurrence_2q(density_from_pure(w_state(2))) == doctest::Approx(1.0));
  CHECK(concurrence_2q(density_from_pure(ghz_state(2))) == doctest::Approx(1.0));

  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexVector a = test::random_pure_vector(rng, 2);
    const ComplexVector b = test::random_pure_vector(rng, 2);
    ComplexVector v(4);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) v(2 * i + j) = a(i) * b(j);
    }
    CHECK(concurrence_2q(density_from_pure(PureState(2, v))) <= 1e-10);
  }
}

TEST_CASE("concurrence of the dissipative W pair is 2p/n") {
  for (int n : {2, 4, 8}) {
    for (double p : {0.1, 0.5, 1.0}) {
      const double c = concurrence_2q(w_pair_density(ChannelKind::Dissipative, n, p));
      CHECK(c == doctest::Approx(2.0 * p / n).epsilon(1e-12).scale(1));
    }
  }
}

TEST_CASE("concurrence equals the amplitude formula on random pure pairs") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexVector v = test::random_pure_vector(rng, 4);
    const double amp = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2));
    const double c = concurrence_2q(density_from_pure(PureState(2, v)));
    CHECK(c == doctest::Approx(amp).epsilon(1e-10).scale(1));
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = test::random_density(rng, 2);
    const double before = concurrence_2q(rho);

    ComplexMatrix rotated = rho.matrix();
    for (int q : {0, 1}) {
      const Eigen::Matrix2cd u = test::random_unitary_2x2(rng);
      detail::local_left_mul(rotated, u, q, 2);
      detail::local_right_mul_adjoint(rotated, u, q, 2);
    }
    const double after = concurrence_2q(DensityMatrix(2, rotated));
    CHECK(after == doctest::Approx(before).epsilon(1e-10).scale(1));
  }
}

TEST_CASE("n-concurrence of pure GHZ registers is one") {
  for (int n = 2; n <= 8; n += 2) {
    CHECK(n_concurrence(density_from_pure(ghz_state(n))) ==
          doctest::Approx(1.0).epsilon(1e-11).scale(1));
  }
}

TEST_CASE("n-concurrence rejects odd registers and garbage") {
  CHECK_THROWS_AS(n_concurrence(density_from_pure(w_state(3))), std::invalid_argument);
  ComplexMatrix junk = ComplexMatrix::Zero(4, 4);
  junk(0, 1) = 1.0;
  CHECK_THROWS_AS(n_concurrence(DensityMatrix(2, junk)), NumericError);
}

TEST_CASE("concurrence flags inputs whose R spectrum is not real") {
  CHECK_THROWS_AS(concurrence_2q(density_from_pure(w_state(3))), std::invalid_argument);
  // Non-Hermitian input with R eigenvalues at +-i.
  ComplexMatrix bad = ComplexMatrix::Zero(4, 4);
  bad(0, 0) = 0.5;
  bad(0, 1) = 1.0;
  bad(1, 0) = 0.25;
  bad(2, 3) = Complex(0, 1);
  CHECK_THROWS_AS(concurrence_2q(DensityMatrix(2, bad)), NumericError);
}

TEST_CASE("n-concurrence of decohered GHZ registers, frozen oracle values") {
  // Brute-force reference values from tests/oracle/compute_expected.py.
  struct Case {
    ChannelKind kind;
    int n;
    double p;
    double expected;
  };
  const std::vector<Case> cases{
      {ChannelKind::Dissipative, 2, 0.8, 0.64},
      {ChannelKind::Dissipative, 4, 0.8, 0.4608},
      {ChannelKind::Dissipative, 4, 0.9, 0.7533},
      {ChannelKind::Dissipative, 6, 0.9, 0.706401},
      {ChannelKind::Noisy, 2, 0.8, 0.46},
      {ChannelKind::Noisy, 4, 0.8, 0.0658},
      {ChannelKind::Noisy, 4, 0.9, 0.4706125},
      {ChannelKind::Noisy, 6, 0.9, 0.26653290625},
  };
  for (const auto& c : cases) {
    CHECK(n_concurrence(ghz_density(c.kind, c.n, c.p)) ==
          doctest::Approx(c.expected).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("n-concurrence of the dephased GHZ register is p^{n/2}") {
  for (int n : {2, 4, 6}) {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      CHECK(n_concurrence(ghz_density(ChannelKind::Dephasing, n, p)) ==
            doctest::Approx(std::pow(p, n / 2)).epsilon(1e-11).scale(1));
    }
  }
}

TEST_CASE("fully relaxed GHZ register carries no n-concurrence") {
  CHECK(n_concurrence(ghz_density(ChannelKind::Dissipative, 4, 0.0)) == 0.0);
}

TEST_CASE("svd route matches the literal R-spectrum route") {
  std::mt19937 rng(59);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix rho = test::random_density(rng, n);
      const auto lambdas = detail::wootters_lambdas_spectral(rho);
      double literal = lambdas[0];
      for (size_t i = 1; i < lambdas.size(); ++i) literal -= lambdas[i];
      literal = std::max(literal, 0.0);
      CHECK(n_concurrence(rho) == doctest::Approx(literal).epsilon(1e-9).scale(1));
    }
  }
}

TEST_CASE("tangle routes agree with the purity route at p = 1") {
  for (int n = 2; n <= 8; ++n) {
    const double purity_route = mw_global_entanglement(w_state(n));
    const double tangle_route =
        ge_w_tangle_route(partial_trace(density_from_pure(w_state(n)), {0, 1}), n);
    CHECK(std::abs(purity_route - tangle_route) < 1e-12);
  }
  for (int n = 2; n <= 8; n += 2) {
    const double purity_route = mw_global_entanglement(ghz_state(n));
    const double tangle_route = ge_ghz_tangle_route(density_from_pure(ghz_state(n)));
    CHECK(std::abs(purity_route - tangle_route) < 1e-12);
  }
}

TEST_CASE("tangle-route values on the evolved pair matrices") {
  // Dissipative pair at p = 1, four qubits: 3 * (1/2)^2 = 0.75.
  CHECK(ge_w_tangle_route(w_pair_density(ChannelKind::Dissipative, 4, 1.0), 4) ==
        doctest::Approx(0.75));
  // Dephased pair reproduces the exponential curve.
  for (int n : {2, 4, 6}) {
    for (double gt : {0.0, 0.4, 1.3}) {
      const double p = std::exp(-gt);
      CHECK(ge_w_tangle_route(w_pair_density(ChannelKind::Dephasing, n, p), n) ==
            doctest::Approx(4.0 * (n - 1.0) / (n * n) * p * p).epsilon(1e-12).scale(1));
    }
  }
  // Fully decohered dissipative pair.
  CHECK(ge_w_tangle_route(w_pair_density(ChannelKind::Dissipative, 4, 0.0), 4) == 0.0);
}

TEST_CASE("ghz tangle route on the evolved register matrices") {
  CHECK(ge_ghz_tangle_route(density_from_pure(ghz_state(4))) ==
        doctest::Approx(1.0).epsilon(1e-11).scale(1));
  for (double p : {0.2, 0.6, 0.9}) {
    CHECK(ge_ghz_tangle_route(ghz_density(ChannelKind::Dephasing, 4, p)) ==
          doctest::Approx(std::pow(p, 4)).epsilon(1e-11).scale(1));
  }
  CHECK(ge_ghz_tangle_route(ghz_density(ChannelKind::Dephasing, 2, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-11).scale(1));
}

TEST_CASE("entanglement values stay inside [0, 1] on evolved states") {
  for (ChannelKind kind :
       {ChannelKind::Dissipative, ChannelKind::Dephasing, ChannelKind::Noisy}) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const double wv = ge_w_tangle_route(w_pair_density(kind, 6, p), 6);
      CHECK(wv >= -1e-10);
      CHECK(wv <= 1.0 + 1e-10);
      const double gv = ge_ghz_tangle_route(ghz_density(kind, 4, p));
      CHECK(gv >= -1e-10);
      CHECK(gv <= 1.0 + 1e-10);
    }
  }
}
