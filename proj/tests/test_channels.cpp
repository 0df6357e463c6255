#include "qsim/channels.hpp"

#include "qsim/closed_form.hpp"
#include "qsim/states.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qsim;

namespace {
const std::vector<ChannelKind> kKinds{ChannelKind::Dissipative, ChannelKind::Dephasing,
                                      ChannelKind::Noisy};
}

TEST_CASE("kraus completeness on a p grid") {
  for (ChannelKind kind : kKinds) {
    for (int i = 0; i <= 10; ++i) {
      const SingleQubitKraus chan = kraus_for(kind, i / 10.0);
      Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
      for (const auto& op : chan.operators) sum += op.adjoint() * op;
      CHECK((sum - identity2()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("p = 1 acts as the identity channel") {
  std::mt19937 rng(31);
  const DensityMatrix rho = test::random_density(rng, 2);
  for (ChannelKind kind : kKinds) {
    const DensityMatrix out = apply_uniform_channel(rho, kraus_for(kind, 1.0));
    CHECK(test::max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
  }
}

TEST_CASE("full relaxation sends the excited state to the ground state") {
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;
  const DensityMatrix out = apply_local_channel(
      DensityMatrix(1, excited), kraus_for(ChannelKind::Dissipative, 0.0), 0);
  CHECK(out.matrix()(0, 0) == Complex(1, 0));
  CHECK(std::abs(out.matrix()(1, 1)) == 0.0);
}

TEST_CASE("noisy channel at p = 0 produces the maximally mixed qubit") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = test::random_density(rng, 1);
    const DensityMatrix out = apply_local_channel(rho, kraus_for(ChannelKind::Noisy, 0.0), 0);
    CHECK(test::max_abs_diff(out.matrix(), 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-14);
  }
}

TEST_CASE("dephasing one qubit of a Bell pair scales its coherences by sqrt(p)") {
  const DensityMatrix bell = density_from_pure(w_state(2));
  const double p = 0.37;
  const DensityMatrix out = apply_local_channel(bell, kraus_for(ChannelKind::Dephasing, p), 0);
  CHECK(out.matrix()(1, 1).real() == doctest::Approx(0.5));
  CHECK(out.matrix()(2, 2).real() == doctest::Approx(0.5));
  CHECK(out.matrix()(1, 2).real() == doctest::Approx(0.5 * std::sqrt(p)));
  CHECK(out.matrix()(2, 1).real() == doctest::Approx(0.5 * std::sqrt(p)));
}

TEST_CASE("dissipation on both qubits of the W pair reduction") {
  // Starting from the exact pair reduction at p = 1, two local channels
  // must land on the evolved pair matrix at any p.
  for (int n : {3, 6}) {
    const DensityMatrix start = w_pair_density(ChannelKind::Dissipative, n, 1.0);
    for (double p : {0.2, 0.8}) {
      const SingleQubitKraus chan = kraus_for(ChannelKind::Dissipative, p);
      const DensityMatrix evolved =
          apply_local_channel(apply_local_channel(start, chan, 0), chan, 1);
      CHECK(test::max_abs_diff(evolved.matrix(),
                               w_pair_density(ChannelKind::Dissipative, n, p).matrix()) <
            1e-14);
    }
  }
}

TEST_CASE("uniform channels reproduce the evolved register matrices") {
  for (double p : {0.0, 0.3, 0.9}) {
    for (int n : {2, 4}) {
      const DensityMatrix w_evolved = apply_uniform_channel(
          density_from_pure(w_state(n)), kraus_for(ChannelKind::Dephasing, p));
      CHECK(test::max_abs_diff(partial_trace(w_evolved, {0, 1}).matrix(),
                               w_pair_density(ChannelKind::Dephasing, n, p).matrix()) <
            1e-14);

      const DensityMatrix g_deph = apply_uniform_channel(
          density_from_pure(ghz_state(n)), kraus_for(ChannelKind::Dephasing, p));
      CHECK(test::max_abs_diff(g_deph.matrix(),
                               ghz_density(ChannelKind::Dephasing, n, p).matrix()) < 1e-14);

      const DensityMatrix g_noisy = apply_uniform_channel(
          density_from_pure(ghz_state(n)), kraus_for(ChannelKind::Noisy, p));
      CHECK(test::max_abs_diff(g_noisy.matrix(),
                               ghz_density(ChannelKind::Noisy, n, p).matrix()) < 1e-14);
    }
  }
}

TEST_CASE("channels preserve trace and positivity on random states") {
  std::mt19937 rng(35);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const DensityMatrix rho = test::random_density(rng, n);
    const ChannelKind kind = kKinds[trial % 3];
    const DensityMatrix out = apply_uniform_channel(rho, kraus_for(kind, unit(rng)));
    CHECK(std::abs(out.trace_real() - 1.0) < 1e-12);
    const auto evals = eigenvalues_hermitian(out.matrix());
    CHECK(evals.back() > -1e-10);
  }
}

TEST_CASE("channel composition is multiplicative in p") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (ChannelKind kind : kKinds) {
    for (int trial = 0; trial < 20; ++trial) {
      const double p1 = unit(rng), p2 = unit(rng);
      const DensityMatrix rho = test::random_density(rng, 2);
      const DensityMatrix two = apply_uniform_channel(
          apply_uniform_channel(rho, kraus_for(kind, p1)), kraus_for(kind, p2));
      const DensityMatrix one = apply_uniform_channel(rho, kraus_for(kind, p1 * p2));
      CHECK(test::max_abs_diff(two.matrix(), one.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("noisy channel commutes with local unitaries") {
  std::mt19937 rng(39);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2;
    const int qubit = trial % n;
    const DensityMatrix rho = test::random_density(rng, n);
    const SingleQubitKraus chan = kraus_for(ChannelKind::Noisy, unit(rng));
    const Eigen::Matrix2cd u = test::random_unitary_2x2(rng);

    ComplexMatrix rotated = rho.matrix();
    detail::local_left_mul(rotated, u, qubit, n);
    detail::local_right_mul_adjoint(rotated, u, qubit, n);
    const ComplexMatrix lhs =
        apply_local_channel(DensityMatrix(n, rotated), chan, qubit).matrix();

    ComplexMatrix rhs = apply_local_channel(rho, chan, qubit).matrix();
    detail::local_left_mul(rhs, u, qubit, n);
    detail::local_right_mul_adjoint(rhs, u, qubit, n);

    CHECK(test::max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("noisy channel fixes the maximally mixed register") {
  for (int n : {1, 2, 3}) {
    const Eigen::Index dim = dim_for_qubits(n);
    const DensityMatrix mixed(n, ComplexMatrix::Identity(dim, dim) / double(dim));
    const DensityMatrix out = apply_uniform_channel(mixed, kraus_for(ChannelKind::Noisy, 0.42));
    CHECK(test::max_abs_diff(out.matrix(), mixed.matrix()) < 1e-12);
  }
}

TEST_CASE("local channels on distinct qubits commute") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = test::random_density(rng, 3);
    const SingleQubitKraus a = kraus_for(kKinds[trial % 3], unit(rng));
    const SingleQubitKraus b = kraus_for(kKinds[(trial + 1) % 3], unit(rng));
    const DensityMatrix ab = apply_local_channel(apply_local_channel(rho, a, 0), b, 2);
    const DensityMatrix ba = apply_local_channel(apply_local_channel(rho, b, 2), a, 0);
    CHECK(test::max_abs_diff(ab.matrix(), ba.matrix()) < 1e-12);
  }
}

TEST_CASE("generator jump sets") {
  const LindbladSpec diss = lindblad_generator(ChannelKind::Dissipative, 2.0);
  REQUIRE(diss.jumps.size() == 1);
  CHECK(diss.jumps[0].rate == 2.0);
  CHECK((diss.jumps[0].op - sigma_minus()).cwiseAbs().maxCoeff() == 0.0);

  const LindbladSpec deph = lindblad_generator(ChannelKind::Dephasing, 1.0);
  REQUIRE(deph.jumps.size() == 1);
  Eigen::Matrix2cd excited_projector = Eigen::Matrix2cd::Zero();
  excited_projector(1, 1) = 1.0;
  CHECK((deph.jumps[0].op - excited_projector).cwiseAbs().maxCoeff() == 0.0);

  const LindbladSpec noisy = lindblad_generator(ChannelKind::Noisy, 1.0);
  REQUIRE(noisy.jumps.size() == 3);
  for (const auto& j : noisy.jumps) CHECK(j.rate == 0.25);
  CHECK(noisy.total_rate() == doctest::Approx(0.75));

  const LindbladSpec literal = lindblad_generator_literal_noisy(1.0);
  REQUIRE(literal.jumps.size() == 2);

  CHECK_THROWS_AS(lindblad_generator(ChannelKind::Dissipative, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(lindblad_generator_literal_noisy(-1.0), std::invalid_argument);
}

TEST_CASE("channel constructors reject bad arguments") {
  CHECK_THROWS_AS(kraus_for(ChannelKind::Dephasing, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(kraus_for(ChannelKind::Dephasing, 1.1), std::invalid_argument);
  std::mt19937 rng(43);
  const DensityMatrix rho = test::random_density(rng, 2);
  CHECK_THROWS_AS(apply_local_channel(rho, kraus_for(ChannelKind::Noisy, 0.5), 2),
                  std::out_of_range);
}

TEST_CASE("channel kind names round-trip") {
  for (ChannelKind kind : kKinds) {
    CHECK(parse_channel_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_channel_kind("thermal"), std::invalid_argument);
}
