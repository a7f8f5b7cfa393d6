#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsc/channel.hpp"
#include "qsc/circuit.hpp"
#include "qsc/statevector.hpp"
#include "support/test_helpers.hpp"

using namespace qsc;
using qsc::test::embed_gate_dense;
using qsc::test::random_state;

namespace {

Circuit single_ry() {
  Circuit c;
  c.num_qubits = 1;
  c.num_params = 1;
  c.ops.push_back({GateKind::RY, {0}, {0}, {}, {}, {}});
  return c;
}

}  // namespace

TEST_CASE("binding RY at 0 acts as the identity") {
  Rng rng(3);
  const auto state = random_state(1, rng);
  const auto out = run(single_ry().bind(std::vector<double>{0.0}), state);
  CHECK(qsc::test::max_abs_diff_vec(out.amplitudes, state.amplitudes) == 0.0);
}

TEST_CASE("binding RY at pi flips |0> to |1>") {
  const auto out = run(single_ry().bind(std::vector<double>{std::numbers::pi}),
                       StateVector::zero_state(1));
  CHECK(std::abs(out.amplitudes[0]) < 1e-15);
  CHECK(std::abs(std::abs(out.amplitudes[1]) - 1.0) < 1e-15);
}

TEST_CASE("bound channel gate equals the dilation built directly") {
  Circuit c;
  c.num_qubits = 2;
  c.num_params = 2;
  GateOp op;
  op.kind = GateKind::Unitary2Param;
  op.targets = {0, 1};
  op.param_slots = {0, 1};
  op.family = ChannelFamily::AD;
  op.which = WhichUnitary::U0;
  c.ops.push_back(op);

  const auto bound = c.bind(std::vector<double>{1.0, -1.0});
  const auto direct =
      dilate(ChannelFamily::AD, WhichUnitary::U0, ADParams(1.0, -1.0));
  CHECK(max_abs_diff(bound.ops[0].matrix, direct.matrix) < 1e-14);
}

TEST_CASE("bind validates the parameter vector length") {
  CHECK_THROWS_AS(single_ry().bind(std::vector<double>{1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("running an empty circuit returns the input") {
  Circuit c;
  c.num_qubits = 2;
  Rng rng(5);
  const auto state = random_state(2, rng);
  const auto out = run(c.bind(std::vector<double>{}), state);
  CHECK(qsc::test::max_abs_diff_vec(out.amplitudes, state.amplitudes) == 0.0);
}

TEST_CASE("H then CX prepares the Bell state") {
  Circuit c;
  c.num_qubits = 2;
  c.ops.push_back({GateKind::H, {0}, {}, {}, {}, {}});
  c.ops.push_back({GateKind::CX, {0, 1}, {}, {}, {}, {}});
  const auto out = run(c.bind(std::vector<double>{}), StateVector::zero_state(2));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out.amplitudes[0] - cdouble(r, 0.0)) < 1e-15);
  CHECK(std::abs(out.amplitudes[3] - cdouble(r, 0.0)) < 1e-15);
  CHECK(std::abs(out.amplitudes[1]) < 1e-15);
  CHECK(std::abs(out.amplitudes[2]) < 1e-15);
}

TEST_CASE("a random circuit equals the dense matrix product oracle") {
  Rng rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    Circuit c;
    c.num_qubits = 3;
    c.num_params = 6;
    std::vector<double> params(6);
    for (auto& p : params) p = rng.uniform(-std::numbers::pi, std::numbers::pi);

    for (int g = 0; g < 6; ++g) {
      switch (rng.below(4)) {
        case 0:
          c.ops.push_back(
              {GateKind::RY, {static_cast<int>(rng.below(3))}, {g}, {}, {}, {}});
          break;
        case 1:
          c.ops.push_back(
              {GateKind::RZ, {static_cast<int>(rng.below(3))}, {g}, {}, {}, {}});
          break;
        case 2: {
          const int a = static_cast<int>(rng.below(3));
          const int b = (a + 1 + static_cast<int>(rng.below(2))) % 3;
          c.ops.push_back({GateKind::CX, {a, b}, {}, {}, {}, {}});
          // consume the unused slot with an RY to keep slots referenced
          c.ops.push_back({GateKind::RY, {a}, {g}, {}, {}, {}});
          break;
        }
        default:
          c.ops.push_back({GateKind::CCX, {0, 1, 2}, {}, {}, {}, {}});
          c.ops.push_back({GateKind::RZ, {1}, {g}, {}, {}, {}});
          break;
      }
    }

    const auto bound = c.bind(params);
    const auto input = random_state(3, rng);
    const auto fast = run(bound, input);

    ComplexMatrix dense = ComplexMatrix::identity(8);
    for (const auto& op : bound.ops)
      dense = embed_gate_dense(3, op.matrix, op.targets) * dense;
    const auto expected = dense * input.amplitudes;
    REQUIRE(qsc::test::max_abs_diff_vec(fast.amplitudes, expected) < 1e-12);
  }
}

TEST_CASE("run is deterministic bit for bit") {
  const AnsatzSpec spec{AnsatzFamily::EfficientSU2, 3, 2};
  const auto ansatz = build_ansatz(spec);
  Rng rng(77);
  std::vector<double> params(ansatz.num_params);
  for (auto& p : params) p = rng.uniform(-1.0, 1.0);
  const auto a = run(ansatz.bind(params), StateVector::zero_state(3));
  const auto b = run(ansatz.bind(params), StateVector::zero_state(3));
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    CHECK(a.amplitudes[i].real() == b.amplitudes[i].real());
    CHECK(a.amplitudes[i].imag() == b.amplitudes[i].imag());
  }
}

TEST_CASE("ansatz parameter count formulas") {
  CHECK(ansatz_param_count({AnsatzFamily::RealAmplitudes, 2, 3}) == 8);
  CHECK(ansatz_param_count({AnsatzFamily::EfficientSU2, 3, 3}) == 24);
  CHECK(ansatz_param_count({AnsatzFamily::ProposedToffoli, 3, 1}) == 6);
  for (int n = 2; n <= 3; ++n)
    for (int reps = 1; reps <= 4; ++reps) {
      CHECK(ansatz_param_count({AnsatzFamily::RealAmplitudes, n, reps}) ==
            n * (reps + 1));
      CHECK(ansatz_param_count({AnsatzFamily::EfficientSU2, n, reps}) ==
            2 * n * (reps + 1));
      if (n == 3)
        CHECK(ansatz_param_count({AnsatzFamily::ProposedToffoli, n, reps}) ==
              3 * (reps + 1));
    }
}

TEST_CASE("proposed ansatz structure at reps = 1") {
  const auto c = build_ansatz({AnsatzFamily::ProposedToffoli, 3, 1});
  CHECK(c.num_params == 6);
  REQUIRE(c.ops.size() == 9);  // 3 RY + 3 CCX + 3 RY
  for (int i = 0; i < 3; ++i) CHECK(c.ops[i].kind == GateKind::RY);
  for (int i = 3; i < 6; ++i) CHECK(c.ops[i].kind == GateKind::CCX);
  for (int i = 6; i < 9; ++i) CHECK(c.ops[i].kind == GateKind::RY);
  CHECK(c.ops[3].targets == std::vector<int>{0, 1, 2});
  CHECK(c.ops[4].targets == std::vector<int>{1, 2, 0});
  CHECK(c.ops[5].targets == std::vector<int>{2, 0, 1});
}

TEST_CASE("proposed ansatz requires three qubits") {
  CHECK_THROWS_AS(build_ansatz({AnsatzFamily::ProposedToffoli, 2, 1}),
                  std::invalid_argument);
}

TEST_CASE("every ansatz maps the basis to an orthonormal set") {
  Rng rng(31);
  for (const auto family :
       {AnsatzFamily::RealAmplitudes, AnsatzFamily::EfficientSU2,
        AnsatzFamily::ProposedToffoli}) {
    for (int n = 2; n <= 3; ++n) {
      if (family == AnsatzFamily::ProposedToffoli && n != 3) continue;
      const auto ansatz = build_ansatz({family, n, 2});
      std::vector<double> params(ansatz.num_params);
      for (auto& p : params)
        p = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const auto bound = ansatz.bind(params);

      const std::size_t dim = std::size_t{1} << n;
      std::vector<StateVector> images;
      for (std::size_t b = 0; b < dim; ++b) {
        std::vector<cdouble> amp(dim, cdouble(0.0, 0.0));
        amp[b] = 1.0;
        images.push_back(
            run(bound, StateVector::from_amplitudes(n, std::move(amp))));
      }
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          cdouble dot(0.0, 0.0);
          for (std::size_t a = 0; a < dim; ++a)
            dot += std::conj(images[i].amplitudes[a]) * images[j].amplitudes[a];
          const cdouble want = i == j ? cdouble(1.0, 0.0) : cdouble(0.0, 0.0);
          REQUIRE(std::abs(dot - want) < 1e-10);
        }
    }
  }
}

TEST_CASE("prep circuit templates per topology") {
  const auto sep = build_prep_circuit(topology_for_label(3, label::kSeparable3),
                                      ChannelFamily::AD, WhichUnitary::U0);
  CHECK(sep.num_params == 3);
  CHECK(sep.ops.size() == 3);

  const auto ab_c = build_prep_circuit(topology_for_label(3, label::kAB_C),
                                       ChannelFamily::AD, WhichUnitary::U0);
  CHECK(ab_c.num_params == 5);
  REQUIRE(ab_c.ops.size() == 4);
  CHECK(ab_c.ops[3].kind == GateKind::Unitary2Param);
  CHECK(ab_c.ops[3].targets == std::vector<int>{0, 1});
  CHECK(ab_c.ops[3].param_slots == std::vector<int>{3, 4});

  const auto abc = build_prep_circuit(topology_for_label(3, label::kGenuine3),
                                      ChannelFamily::AD, WhichUnitary::U0);
  CHECK(abc.num_params == 7);
  REQUIRE(abc.ops.size() == 5);
  CHECK(abc.ops[3].targets == std::vector<int>{0, 1});
  CHECK(abc.ops[4].targets == std::vector<int>{1, 2});

  const auto rtn = build_prep_circuit(topology_for_label(2, label::kEnt),
                                      ChannelFamily::RTN, WhichUnitary::U1);
  CHECK(rtn.num_params == 5);  // 2 angles + (gamma, omega, t)
}

TEST_CASE("circuit JSON round-trip") {
  const auto prep = build_prep_circuit(topology_for_label(3, label::kGenuine3),
                                       ChannelFamily::RTN, WhichUnitary::U1);
  const auto text = circuit_to_json(prep);
  const auto parsed = circuit_from_json(text);
  CHECK(parsed.num_qubits == prep.num_qubits);
  CHECK(parsed.num_params == prep.num_params);
  REQUIRE(parsed.ops.size() == prep.ops.size());
  for (std::size_t i = 0; i < prep.ops.size(); ++i) {
    CHECK(parsed.ops[i].kind == prep.ops[i].kind);
    CHECK(parsed.ops[i].targets == prep.ops[i].targets);
    CHECK(parsed.ops[i].param_slots == prep.ops[i].param_slots);
  }

  Circuit with_fixed;
  with_fixed.num_qubits = 2;
  GateOp op;
  op.kind = GateKind::Unitary2;
  op.targets = {0, 1};
  op.fixed_matrix = dilate_matrix(ComplexMatrix::identity(2));
  with_fixed.ops.push_back(op);
  const auto parsed2 = circuit_from_json(circuit_to_json(with_fixed));
  CHECK(max_abs_diff(parsed2.ops[0].fixed_matrix,
                     with_fixed.ops[0].fixed_matrix) == 0.0);
}
