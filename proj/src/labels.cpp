#include "qsc/labels.hpp"

#include <stdexcept>

namespace qsc {

int num_classes_for(int num_qubits) {
  if (num_qubits == 2) return 2;
  if (num_qubits == 3) return 5;
  throw std::invalid_argument("num_classes_for: supported sizes are 2 and 3");
}

std::string class_name(int num_qubits, int code) {
  if (num_qubits == 2) {
    switch (code) {
      case label::kSep:
        return "SEP";
      case label::kEnt:
        return "ENT";
    }
  } else if (num_qubits == 3) {
    switch (code) {
      case label::kSeparable3:
        return "A-B-C";
      case label::kAB_C:
        return "AB-C";
      case label::kAC_B:
        return "AC-B";
      case label::kBC_A:
        return "BC-A";
      case label::kGenuine3:
        return "ABC";
    }
  }
  throw std::invalid_argument("class_name: unknown (num_qubits, code)");
}

std::vector<std::string> class_names(int num_qubits) {
  std::vector<std::string> names;
  const int k = num_classes_for(num_qubits);
  names.reserve(k);
  for (int c = 0; c < k; ++c) names.push_back(class_name(num_qubits, c));
  return names;
}

ClassTopology topology_for_label(int num_qubits, int label_code) {
  ClassTopology topo;
  topo.num_qubits = num_qubits;
  topo.intended_label = label_code;
  if (num_qubits == 2) {
    switch (label_code) {
      case label::kSep:
        return topo;
      case label::kEnt:
        topo.entangling_pairs = {{0, 1}};
        return topo;
    }
  } else if (num_qubits == 3) {
    switch (label_code) {
      case label::kSeparable3:
        return topo;
      case label::kAB_C:
        topo.entangling_pairs = {{0, 1}};
        return topo;
      case label::kAC_B:
        topo.entangling_pairs = {{0, 2}};
        return topo;
      case label::kBC_A:
        topo.entangling_pairs = {{1, 2}};
        return topo;
      case label::kGenuine3:
        topo.entangling_pairs = {{0, 1}, {1, 2}};
        return topo;
    }
  }
  throw std::invalid_argument("topology_for_label: unknown (num_qubits, code)");
}

bool operator==(const ClassTopology& a, const ClassTopology& b) {
  return a.num_qubits == b.num_qubits &&
         a.entangling_pairs == b.entangling_pairs &&
         a.intended_label == b.intended_label;
}

}  // namespace qsc
