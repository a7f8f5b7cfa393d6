#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsc/channel.hpp"
#include "qsc/labels.hpp"
#include "qsc/matrix.hpp"
#include "qsc/statevector.hpp"

namespace qsc {

enum class GateKind { RY, RZ, H, CX, CCX, Unitary2, Unitary2Param };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& s);

/// One placement in a circuit. targets[0] is the least significant qubit of
/// the gate matrix. For CX, targets = {control, target}; for CCX,
/// targets = {control1, control2, target}. Unitary2 carries a fixed 4x4
/// matrix; Unitary2Param resolves a dilated channel unitary at bind time
/// (AD consumes 2 slots: alpha, beta; RTN consumes 3: gamma, omega, t).
struct GateOp {
  GateKind kind = GateKind::RY;
  std::vector<int> targets;
  std::vector<int> param_slots;
  ComplexMatrix fixed_matrix;                    // Unitary2 only
  ChannelFamily family = ChannelFamily::AD;      // Unitary2Param only
  WhichUnitary which = WhichUnitary::U0;         // Unitary2Param only
};

struct BoundOp {
  ComplexMatrix matrix;
  std::vector<int> targets;
};

/// Circuit with every gate resolved to a concrete matrix.
struct BoundCircuit {
  int num_qubits = 0;
  std::vector<BoundOp> ops;
};

struct Circuit {
  int num_qubits = 0;
  int num_params = 0;
  std::vector<GateOp> ops;

  /// Throws if any op has the wrong arity/slot count or references a slot or
  /// qubit out of range.
  void validate() const;

  /// Resolves every parameterized op against the given parameter vector.
  BoundCircuit bind(std::span<const double> params) const;
};

StateVector run(const BoundCircuit& circuit, const StateVector& input);

// Fixed gate matrices (targets[0] = least significant qubit).
ComplexMatrix ry_matrix(double theta);
ComplexMatrix rz_matrix(double theta);
ComplexMatrix h_matrix();
ComplexMatrix x_matrix();
ComplexMatrix cx_matrix();
ComplexMatrix ccx_matrix();

enum class AnsatzFamily { RealAmplitudes, EfficientSU2, ProposedToffoli };

std::string to_string(AnsatzFamily family);
AnsatzFamily ansatz_family_from_string(const std::string& s);

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::RealAmplitudes;
  int num_qubits = 0;
  int reps = 3;
};

bool operator==(const AnsatzSpec& a, const AnsatzSpec& b);

int ansatz_param_count(const AnsatzSpec& spec);

/// RealAmplitudes: reps+1 RY layers interleaved with full pairwise CX layers.
/// EfficientSU2: same layout with RY then RZ per rotation layer.
/// ProposedToffoli (3 qubits only): RealAmplitudes rotations with each CX
/// layer replaced by the Toffoli cycle CCX(0,1->2), CCX(1,2->0), CCX(2,0->1).
Circuit build_ansatz(const AnsatzSpec& spec);

/// State-generation template: one RY per qubit (diversity layer) followed by
/// one dilated channel unitary per entangling pair. Slots are allocated in
/// declaration order: RY angles first, then channel parameters per pair.
Circuit build_prep_circuit(const ClassTopology& topology, ChannelFamily noise,
                           WhichUnitary which);

/// JSON schema: {num_qubits, num_params, ops:[{kind, targets, slots, ...}]}.
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const std::string& text);

}  // namespace qsc
