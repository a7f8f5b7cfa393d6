#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsc/circuit.hpp"
#include "qsc/dataset.hpp"
#include "qsc/oracle.hpp"
#include "support/test_helpers.hpp"

using namespace qsc;
using qsc::test::partial_trace_dense;
using qsc::test::random_state;
using qsc::test::random_unitary;

namespace {

StateVector ghz() {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<cdouble> amp(8, cdouble(0.0, 0.0));
  amp[0] = r;
  amp[7] = r;
  return StateVector::from_amplitudes(3, std::move(amp));
}

StateVector w_state() {
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<cdouble> amp(8, cdouble(0.0, 0.0));
  amp[1] = r;
  amp[2] = r;
  amp[4] = r;
  return StateVector::from_amplitudes(3, std::move(amp));
}

/// Bell pair on qubits (a, b) of three qubits, the remaining qubit in |0>.
StateVector bell_pair_3q(int a, int b) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<cdouble> amp(8, cdouble(0.0, 0.0));
  amp[0] = r;
  amp[(std::size_t{1} << a) | (std::size_t{1} << b)] = r;
  return StateVector::from_amplitudes(3, std::move(amp));
}

/// Relabels qubits: output qubit perm[q] carries input qubit q.
StateVector permute_qubits(const StateVector& s, const std::vector<int>& perm) {
  std::vector<cdouble> amp(s.amplitudes.size(), cdouble(0.0, 0.0));
  for (std::size_t b = 0; b < s.amplitudes.size(); ++b) {
    std::size_t nb = 0;
    for (int q = 0; q < s.num_qubits; ++q)
      if (b & (std::size_t{1} << q)) nb |= std::size_t{1} << perm[q];
    amp[nb] = s.amplitudes[b];
  }
  return StateVector::from_amplitudes(s.num_qubits, std::move(amp));
}

StateVector dress_with_local_unitaries(const StateVector& s, Rng& rng) {
  StateVector out = s;
  for (int q = 0; q < s.num_qubits; ++q)
    out = apply_gate(out, random_unitary(2, rng), {q});
  return out;
}

}  // namespace

TEST_CASE("|000> is fully separable with zero signature") {
  const auto cls = classify(StateVector::zero_state(3));
  CHECK(cls.label == label::kSeparable3);
  for (double s : cls.signature.per_qubit_bits) CHECK(s < 1e-10);
}

TEST_CASE("GHZ is genuinely entangled with unit marginals") {
  const auto cls = classify(ghz());
  CHECK(cls.label == label::kGenuine3);
  for (double s : cls.signature.per_qubit_bits)
    CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Bell pairs land in the biseparable class naming the free qubit") {
  CHECK(classify(bell_pair_3q(0, 1)).label == label::kAB_C);
  CHECK(classify(bell_pair_3q(0, 2)).label == label::kAC_B);
  CHECK(classify(bell_pair_3q(1, 2)).label == label::kBC_A);

  const auto sig = classify(bell_pair_3q(0, 1)).signature;
  CHECK(sig.per_qubit_bits[0] == doctest::Approx(1.0));
  CHECK(sig.per_qubit_bits[1] == doctest::Approx(1.0));
  CHECK(sig.per_qubit_bits[2] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("W state is genuinely entangled with log2(3)-2/3 marginals") {
  const auto cls = classify(w_state());
  CHECK(cls.label == label::kGenuine3);
  const double expected = std::log2(3.0) - 2.0 / 3.0;
  for (double s : cls.signature.per_qubit_bits)
    CHECK(s == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("two-qubit classification") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto bell = StateVector::from_amplitudes(2, {r, 0.0, 0.0, r});
  CHECK(classify(bell).label == label::kEnt);

  const auto plus_plus = StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, 0.5});
  CHECK(classify(plus_plus).label == label::kSep);

  const auto sig_bell = cut_entropies(bell);
  CHECK(sig_bell.per_qubit_bits[0] == doctest::Approx(1.0));
  CHECK(sig_bell.per_qubit_bits[1] == doctest::Approx(1.0));
  const auto sig_pp = cut_entropies(plus_plus);
  CHECK(sig_pp.per_qubit_bits[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(sig_pp.per_qubit_bits[1] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("labels are invariant under local unitary dressing") {
  Rng rng(2);
  const std::vector<StateVector> bases = {
      StateVector::zero_state(3), ghz(), w_state(), bell_pair_3q(0, 1),
      bell_pair_3q(0, 2),         bell_pair_3q(1, 2)};
  for (int rep = 0; rep < 170; ++rep) {
    for (const auto& base : bases) {
      const int expected = classify(base).label;
      const auto dressed = dress_with_local_unitaries(base, rng);
      REQUIRE(classify(dressed).label == expected);
    }
  }
}

TEST_CASE("qubit swaps permute the label covariantly") {
  // Swapping qubits 0 and 1 (A and B) maps AC-B <-> BC-A.
  const std::vector<int> swap01 = {1, 0, 2};
  CHECK(classify(permute_qubits(bell_pair_3q(0, 2), swap01)).label ==
        label::kBC_A);
  CHECK(classify(permute_qubits(bell_pair_3q(1, 2), swap01)).label ==
        label::kAC_B);
  // AB-C and the symmetric classes are fixed.
  CHECK(classify(permute_qubits(bell_pair_3q(0, 1), swap01)).label ==
        label::kAB_C);
  CHECK(classify(permute_qubits(StateVector::zero_state(3), swap01)).label ==
        label::kSeparable3);
  CHECK(classify(permute_qubits(ghz(), swap01)).label == label::kGenuine3);

  // The entropy signature permutes with the qubits.
  Rng rng(9);
  const auto state = dress_with_local_unitaries(bell_pair_3q(0, 2), rng);
  const auto sig = cut_entropies(state).per_qubit_bits;
  const auto swapped = cut_entropies(permute_qubits(state, swap01)).per_qubit_bits;
  CHECK(swapped[0] == doctest::Approx(sig[1]).epsilon(1e-12));
  CHECK(swapped[1] == doctest::Approx(sig[0]).epsilon(1e-12));
  CHECK(swapped[2] == doctest::Approx(sig[2]).epsilon(1e-12));
}

TEST_CASE("cut entropies agree with the dense oracle on generated states") {
  Rng rng(44);
  const auto topo = topology_for_label(3, label::kGenuine3);
  for (int rep = 0; rep < 20; ++rep) {
    const auto sample = sample_class(topo, ChannelFamily::AD, WhichUnitary::U0,
                                     rng, rep);
    const auto state = realize_state(sample);
    const auto sig = cut_entropies(state);
    for (int q = 0; q < 3; ++q) {
      const auto dense = partial_trace_dense(state, {q});
      const auto rho = DensityMatrix::from_matrix(dense);
      CHECK(sig.per_qubit_bits[q] ==
            doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
    }
  }
}

TEST_CASE("the impossible two-pure-marginals pattern raises GrayZoneError") {
  // |psi> = a|000> + b|011> + c|101>: S_0 = h(b^2 + c^2) while S_1 = h(b^2)
  // and S_2 = h(c^2). An eps between h(c^2) and h(b^2 + c^2) reports qubits
  // 1 and 2 as pure but qubit 0 as mixed.
  const double b = 0.01, c = 0.01;
  const double a = std::sqrt(1.0 - b * b - c * c);
  std::vector<cdouble> amp(8, cdouble(0.0, 0.0));
  amp[0] = a;
  amp[3] = b;
  amp[5] = c;
  const auto state = StateVector::from_amplitudes(3, std::move(amp));

  const auto sig = cut_entropies(state);
  const double eps = 0.5 * (std::max(sig.per_qubit_bits[1],
                                     sig.per_qubit_bits[2]) +
                            sig.per_qubit_bits[0]);
  CHECK_THROWS_AS(classify(state, eps), GrayZoneError);
}

TEST_CASE("classify validates its inputs") {
  CHECK_THROWS_AS(classify(StateVector::zero_state(4)), std::invalid_argument);
  CHECK_THROWS_AS(classify(StateVector::zero_state(2), 0.0),
                  std::invalid_argument);
}
