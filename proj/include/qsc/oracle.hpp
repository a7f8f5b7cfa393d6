#pragma once

#include <stdexcept>
#include <vector>

#include "qsc/labels.hpp"
#include "qsc/statevector.hpp"

namespace qsc {

/// Per-qubit reduced entropies (bits) plus the threshold used to call a
/// qubit unentangled.
struct EntropySignature {
  std::vector<double> per_qubit_bits;
  double eps = 1e-6;
};

/// Raised when the entropy pattern is impossible for an exact pure state
/// (exactly one qubit above threshold): the sample sits in the numerical
/// gray zone and the caller must redraw it.
class GrayZoneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Single-qubit reduced entropies of every qubit.
EntropySignature cut_entropies(const StateVector& state, double eps = 1e-6);

struct Classification {
  int label = 0;
  EntropySignature signature;
};

/// Entanglement class from the single-qubit entropy signature.
/// 2 qubits: ENT iff S(rho_0) > eps.
/// 3 qubits: all <= eps -> A-B-C; exactly one <= eps -> the biseparable
/// class naming the unentangled qubit; none <= eps -> ABC; exactly two
/// <= eps -> GrayZoneError.
Classification classify(const StateVector& state, double eps = 1e-6);

}  // namespace qsc
