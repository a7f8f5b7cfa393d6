#pragma once

#include <vector>

#include "qsc/matrix.hpp"

namespace qsc {

/// Pure state of num_qubits qubits as a dense amplitude vector.
/// Basis convention used throughout: basis index b = sum_i q_i * 2^i,
/// i.e. qubit 0 is the least significant bit of the index.
struct StateVector {
  int num_qubits = 0;
  std::vector<cdouble> amplitudes;

  static StateVector zero_state(int num_qubits);

  /// Validates the length and unit norm (within 1e-10).
  static StateVector from_amplitudes(int num_qubits,
                                     std::vector<cdouble> amplitudes);

  double norm_sq() const;
};

/// Density operator on num_qubits qubits. Construction validates
/// Hermiticity (1e-10), unit trace (1e-10) and spectrum >= -1e-9.
struct DensityMatrix {
  int num_qubits = 0;
  ComplexMatrix entries;

  static DensityMatrix from_matrix(ComplexMatrix entries);
};

/// Applies a k-qubit gate (k in {1,2,3}) to the given target qubits.
/// targets[0] corresponds to the least significant qubit of the gate matrix.
StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate,
                       const std::vector<int>& targets);

/// <psi|O|psi> for a Hermitian observable; the vanishing imaginary part is
/// discarded.
double expectation(const StateVector& state, const ComplexMatrix& observable);

/// Traces out every qubit not listed in keep. keep must be a non-empty
/// proper subset; the result's qubit t is the t-th smallest kept index.
DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) are clipped to 0;
/// anything below -1e-9 throws.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace qsc
