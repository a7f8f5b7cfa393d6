#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qsc {

// Class codes, fixed per system size.
//   2 qubits: SEP = 0, ENT = 1
//   3 qubits: A-B-C = 0, AB-C = 1, AC-B = 2, BC-A = 3, ABC = 4
// Qubit A is qubit 0, B is qubit 1, C is qubit 2.
namespace label {
inline constexpr int kSep = 0;
inline constexpr int kEnt = 1;
inline constexpr int kSeparable3 = 0;
inline constexpr int kAB_C = 1;
inline constexpr int kAC_B = 2;
inline constexpr int kBC_A = 3;
inline constexpr int kGenuine3 = 4;
}  // namespace label

int num_classes_for(int num_qubits);
std::string class_name(int num_qubits, int code);
std::vector<std::string> class_names(int num_qubits);

/// Which qubit pairs receive an entangling gate for a given class, plus the
/// label that construction is meant to realize. Genuine three-qubit
/// entanglement uses the chain (0,1), (1,2).
struct ClassTopology {
  int num_qubits = 0;
  std::vector<std::pair<int, int>> entangling_pairs;
  int intended_label = 0;
};

ClassTopology topology_for_label(int num_qubits, int label_code);

bool operator==(const ClassTopology& a, const ClassTopology& b);

}  // namespace qsc
