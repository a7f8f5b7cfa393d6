#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsc/channel.hpp"
#include "qsc/circuit.hpp"
#include "qsc/statevector.hpp"
#include "support/test_helpers.hpp"

using namespace qsc;

namespace {

double completeness_error(const KrausPair& kp) {
  return max_abs_diff(kp.k0.dagger() * kp.k0 + kp.k1.dagger() * kp.k1,
                      ComplexMatrix::identity(2));
}

StateVector plus_plus_probe() {
  auto probe = StateVector::zero_state(2);
  probe = apply_gate(probe, ry_matrix(std::numbers::pi / 2), {0});
  probe = apply_gate(probe, ry_matrix(std::numbers::pi / 2), {1});
  return probe;
}

}  // namespace

TEST_CASE("AD Kraus operators at the boundary points") {
  // alpha*beta = 0 -> n_f = 0.
  const auto kp = ad_kraus(ADParams(0.0, -1.0));
  CHECK(std::abs(kp.k0(0, 0) - cdouble(1.0, 0.0)) == 0.0);
  CHECK(std::abs(kp.k0(1, 1)) == 0.0);
  CHECK(std::abs(kp.k1(0, 1) - cdouble(1.0, 0.0)) == 0.0);
  CHECK(std::abs(kp.k1(1, 0)) == 0.0);

  // Direct n_f = 1 override: k0 = I, k1 = 0.
  const auto limit = ad_kraus(ADParams::from_nf(1.0));
  CHECK(max_abs_diff(limit.k0, ComplexMatrix::identity(2)) == 0.0);
  CHECK(max_abs(limit.k1) == 0.0);
}

TEST_CASE("AD Kraus at alpha=1, beta=-1") {
  const ADParams p(1.0, -1.0);
  const double nf = 1.0 - std::exp(-1.0);
  CHECK(p.nf() == doctest::Approx(nf).epsilon(1e-15));
  const auto kp = ad_kraus(p);
  CHECK(kp.k0(1, 1).real() == doctest::Approx(std::sqrt(nf)));
  CHECK(kp.k1(0, 1).real() == doctest::Approx(std::sqrt(1.0 - nf)));
  CHECK(completeness_error(kp) < 1e-12);
}

TEST_CASE("AD parameter domain is restricted to alpha*beta <= 0") {
  CHECK_THROWS_AS(ADParams(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ADParams::from_nf(1.5), std::domain_error);
}

TEST_CASE("RTN Kraus at t = 0 and in the long-time limit") {
  const RTNParams start(1.0, 2.0, 0.0);
  CHECK(start.noise_p() == doctest::Approx(1.0));
  CHECK(start.q0() == doctest::Approx(1.0));
  CHECK(start.q1() == doctest::Approx(0.0));
  const auto kp = rtn_kraus(start);
  CHECK(max_abs_diff(kp.k0, ComplexMatrix::identity(2)) < 1e-12);
  CHECK(max_abs(kp.k1) < 1e-12);

  const RTNParams late(50.0, 2.0, 10.0);
  CHECK(late.q0() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(late.q1() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("RTN noise function at gamma=1, omega=2, t=1") {
  const RTNParams p(1.0, 2.0, 1.0);
  const double expected =
      std::exp(-1.0) * (std::cos(2.0) + std::sin(2.0) / 2.0);
  CHECK(p.noise_p() == doctest::Approx(expected).epsilon(1e-15));
  CHECK(p.q0() == doctest::Approx(0.5 * (1.0 + expected)).epsilon(1e-15));
  CHECK(completeness_error(rtn_kraus(p)) < 1e-12);
}

TEST_CASE("RTN branch weights always sum to exactly one") {
  Rng rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    const RTNParams p(rng.uniform(0.0, 5.0), rng.uniform(0.01, 10.0),
                      rng.uniform(0.0, 10.0));
    CHECK(p.q0() + p.q1() == 1.0);
    CHECK(p.q0() >= 0.0);
    CHECK(p.q1() >= 0.0);
  }
}

TEST_CASE("Kraus completeness holds for 1000 random parameter draws") {
  Rng rng(4);
  for (int rep = 0; rep < 1000; ++rep) {
    const ADParams ad(rng.uniform(0.1, 2.0), rng.uniform(-2.0, -0.1));
    CHECK(completeness_error(ad_kraus(ad)) < 1e-12);
    const RTNParams rtn(rng.uniform(0.1, 2.0), rng.uniform(0.5, 4.0),
                        rng.uniform(0.1, 3.0));
    CHECK(completeness_error(rtn_kraus(rtn)) < 1e-12);
  }
}

TEST_CASE("dilating the identity gives diag(1,1,-1,-1)") {
  const auto u = dilate_matrix(ComplexMatrix::identity(2));
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_abs_diff(u, expected) == 0.0);
}

TEST_CASE("dilating the RTN K0 block has the closed form") {
  const RTNParams p(0.7, 1.3, 0.9);
  const double r0 = std::sqrt(p.q0());
  const double r1 = std::sqrt(p.q1());
  const auto u = dilate(ChannelFamily::RTN, WhichUnitary::U0, p);
  CHECK(u.source == DilationSource::RTN0);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = r0;
  expected(1, 1) = r0;
  expected(0, 2) = r1;
  expected(1, 3) = r1;
  expected(2, 0) = r1;
  expected(3, 1) = r1;
  expected(2, 2) = -r0;
  expected(3, 3) = -r0;
  CHECK(max_abs_diff(u.matrix, expected) < 1e-12);
  CHECK(is_unitary(u.matrix, 1e-12));
}

TEST_CASE("dilating the AD k1 operator at n_f = 0") {
  const auto u =
      dilate(ChannelFamily::AD, WhichUnitary::U1, ADParams::from_nf(0.0));
  CHECK(u.source == DilationSource::AD1);
  // Rows worked out by hand from the block definition.
  ComplexMatrix expected(4, 4);
  expected(0, 1) = 1.0;
  expected(1, 3) = 1.0;
  expected(2, 0) = 1.0;
  expected(3, 2) = -1.0;
  CHECK(max_abs_diff(u.matrix, expected) < 1e-12);
  CHECK(is_unitary(u.matrix, 1e-12));
}

TEST_CASE("dilation is unitary for 1000 random contractions") {
  Rng rng(8);
  for (int rep = 0; rep < 1000; ++rep) {
    ComplexMatrix k(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        k(i, j) = qsc::test::gaussian_complex(rng);
    // Scale below unit spectral norm.
    const auto sq = hermitian_eigenvalues(k.dagger() * k);
    const double smax = std::sqrt(sq.back());
    k = cdouble(rng.uniform(0.05, 0.999) / smax, 0.0) * k;
    const auto u = dilate_matrix(k);
    CHECK(is_unitary(u, 1e-12));
  }
}

TEST_CASE("dilation rejects non-contractions") {
  CHECK_THROWS_AS(dilate_matrix(cdouble(1.5, 0.0) * ComplexMatrix::identity(2)),
                  std::domain_error);
}

TEST_CASE("the embedded block reproduces the Kraus action") {
  Rng rng(21);
  for (int rep = 0; rep < 50; ++rep) {
    const ADParams p(rng.uniform(0.1, 2.0), rng.uniform(-2.0, -0.1));
    const auto kp = ad_kraus(p);
    const auto u = dilate_matrix(kp.k0);
    // psi on the system qubit, ancilla (MSB) in |0>.
    const auto sys = qsc::test::random_state(1, rng);
    std::vector<cdouble> full = {sys.amplitudes[0], sys.amplitudes[1], 0.0,
                                 0.0};
    const auto out = u * full;
    const auto expected = kp.k0 * sys.amplitudes;
    CHECK(std::abs(out[0] - expected[0]) < 1e-14);
    CHECK(std::abs(out[1] - expected[1]) < 1e-14);
  }
}

TEST_CASE("entangling_check on non-entangling unitaries") {
  const auto probe = plus_plus_probe();
  const auto phase =
      dilate(ChannelFamily::AD, WhichUnitary::U0, ADParams::from_nf(1.0));
  CHECK(entangling_check(phase, probe) == doctest::Approx(0.0).epsilon(1e-9));

  DilatedUnitary id4;
  id4.matrix = ComplexMatrix::identity(4);
  CHECK(entangling_check(id4, probe) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("entangling_check regression anchor at n_f = 0.5") {
  const auto u =
      dilate(ChannelFamily::AD, WhichUnitary::U0, ADParams::from_nf(0.5));
  const double entropy = entangling_check(u, plus_plus_probe());
  CHECK(entropy > 0.0);
  CHECK(entropy <= 1.0);
  CHECK(entropy == doctest::Approx(0.60087603669285616).epsilon(1e-12));
}

TEST_CASE("entangling_check rejects entangled probes") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto bell = StateVector::from_amplitudes(2, {r, 0.0, 0.0, r});
  DilatedUnitary id4;
  id4.matrix = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(entangling_check(id4, bell), std::invalid_argument);
}
