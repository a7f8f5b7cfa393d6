#include "qsc/oracle.hpp"

#include <stdexcept>

namespace qsc {

EntropySignature cut_entropies(const StateVector& state, double eps) {
  EntropySignature sig;
  sig.eps = eps;
  sig.per_qubit_bits.reserve(state.num_qubits);
  for (int q = 0; q < state.num_qubits; ++q)
    sig.per_qubit_bits.push_back(
        von_neumann_entropy(partial_trace(state, {q})));
  return sig;
}

Classification classify(const StateVector& state, double eps) {
  const int n = state.num_qubits;
  if (n != 2 && n != 3)
    throw std::invalid_argument("classify: supported sizes are 2 and 3");
  if (eps <= 0.0) throw std::invalid_argument("classify: eps must be > 0");

  Classification out;
  out.signature = cut_entropies(state, eps);
  const auto& s = out.signature.per_qubit_bits;

  if (n == 2) {
    out.label = s[0] > eps ? label::kEnt : label::kSep;
    return out;
  }

  const bool sep_a = s[0] <= eps;
  const bool sep_b = s[1] <= eps;
  const bool sep_c = s[2] <= eps;
  const int num_separable = int(sep_a) + int(sep_b) + int(sep_c);
  switch (num_separable) {
    case 3:
      out.label = label::kSeparable3;
      return out;
    case 1:
      out.label = sep_c ? label::kAB_C : (sep_b ? label::kAC_B : label::kBC_A);
      return out;
    case 0:
      out.label = label::kGenuine3;
      return out;
    default:
      // Two pure marginals force the third to be pure as well; seeing this
      // pattern means the state straddles the eps threshold numerically.
      throw GrayZoneError("classify: impossible entropy pattern, resample");
  }
}

}  // namespace qsc
