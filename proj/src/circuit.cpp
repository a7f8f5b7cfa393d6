#include "qsc/circuit.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace qsc {

namespace {

struct KindInfo {
  std::size_t arity;
  std::size_t slots;
};

KindInfo kind_info(const GateOp& op) {
  switch (op.kind) {
    case GateKind::RY:
    case GateKind::RZ:
      return {1, 1};
    case GateKind::H:
      return {1, 0};
    case GateKind::CX:
      return {2, 0};
    case GateKind::CCX:
      return {3, 0};
    case GateKind::Unitary2:
      return {2, 0};
    case GateKind::Unitary2Param:
      return {2, op.family == ChannelFamily::AD ? std::size_t{2}
                                                : std::size_t{3}};
  }
  throw std::logic_error("kind_info: unknown gate kind");
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RY:
      return "ry";
    case GateKind::RZ:
      return "rz";
    case GateKind::H:
      return "h";
    case GateKind::CX:
      return "cx";
    case GateKind::CCX:
      return "ccx";
    case GateKind::Unitary2:
      return "unitary2";
    case GateKind::Unitary2Param:
      return "unitary2_param";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "ry") return GateKind::RY;
  if (s == "rz") return GateKind::RZ;
  if (s == "h") return GateKind::H;
  if (s == "cx") return GateKind::CX;
  if (s == "ccx") return GateKind::CCX;
  if (s == "unitary2") return GateKind::Unitary2;
  if (s == "unitary2_param") return GateKind::Unitary2Param;
  throw std::invalid_argument("unknown gate kind: " + s);
}

void Circuit::validate() const {
  for (const auto& op : ops) {
    const KindInfo info = kind_info(op);
    if (op.targets.size() != info.arity)
      throw std::invalid_argument("Circuit: gate arity mismatch");
    if (op.param_slots.size() != info.slots)
      throw std::invalid_argument("Circuit: parameter slot count mismatch");
    for (int t : op.targets)
      if (t < 0 || t >= num_qubits)
        throw std::invalid_argument("Circuit: target out of range");
    for (int s : op.param_slots)
      if (s < 0 || s >= num_params)
        throw std::invalid_argument("Circuit: parameter slot out of range");
    if (op.kind == GateKind::Unitary2 &&
        (op.fixed_matrix.rows() != 4 || op.fixed_matrix.cols() != 4))
      throw std::invalid_argument("Circuit: Unitary2 requires a 4x4 matrix");
  }
}

ComplexMatrix ry_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return ComplexMatrix{{c, -s}, {s, c}};
}

ComplexMatrix rz_matrix(double theta) {
  const cdouble lo = std::exp(cdouble(0.0, -0.5 * theta));
  const cdouble hi = std::exp(cdouble(0.0, 0.5 * theta));
  return ComplexMatrix{{lo, 0.0}, {0.0, hi}};
}

ComplexMatrix h_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  return ComplexMatrix{{r, r}, {r, -r}};
}

ComplexMatrix x_matrix() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix cx_matrix() {
  // Local basis index = control + 2*target.
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(3, 1) = 1.0;
  m(1, 3) = 1.0;
  return m;
}

ComplexMatrix ccx_matrix() {
  // Local basis index = c1 + 2*c2 + 4*target; flips target when c1 = c2 = 1.
  ComplexMatrix m = ComplexMatrix::identity(8);
  m(3, 3) = 0.0;
  m(7, 7) = 0.0;
  m(7, 3) = 1.0;
  m(3, 7) = 1.0;
  return m;
}

BoundCircuit Circuit::bind(std::span<const double> params) const {
  validate();
  if (params.size() != static_cast<std::size_t>(num_params))
    throw std::invalid_argument("bind: parameter vector length mismatch");

  BoundCircuit bound;
  bound.num_qubits = num_qubits;
  bound.ops.reserve(ops.size());
  for (const auto& op : ops) {
    BoundOp b;
    b.targets = op.targets;
    switch (op.kind) {
      case GateKind::RY:
        b.matrix = ry_matrix(params[op.param_slots[0]]);
        break;
      case GateKind::RZ:
        b.matrix = rz_matrix(params[op.param_slots[0]]);
        break;
      case GateKind::H:
        b.matrix = h_matrix();
        break;
      case GateKind::CX:
        b.matrix = cx_matrix();
        break;
      case GateKind::CCX:
        b.matrix = ccx_matrix();
        break;
      case GateKind::Unitary2:
        b.matrix = op.fixed_matrix;
        break;
      case GateKind::Unitary2Param: {
        ChannelParams cp;
        if (op.family == ChannelFamily::AD) {
          cp = ADParams(params[op.param_slots[0]], params[op.param_slots[1]]);
        } else {
          cp = RTNParams(params[op.param_slots[0]], params[op.param_slots[1]],
                         params[op.param_slots[2]]);
        }
        b.matrix = dilate(op.family, op.which, cp).matrix;
        break;
      }
    }
    bound.ops.push_back(std::move(b));
  }
  return bound;
}

StateVector run(const BoundCircuit& circuit, const StateVector& input) {
  if (input.num_qubits != circuit.num_qubits)
    throw std::invalid_argument("run: qubit count mismatch");
  StateVector state = input;
  for (const auto& op : circuit.ops)
    state = apply_gate(state, op.matrix, op.targets);
  return state;
}

std::string to_string(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::RealAmplitudes:
      return "real_amplitudes";
    case AnsatzFamily::EfficientSU2:
      return "efficient_su2";
    case AnsatzFamily::ProposedToffoli:
      return "proposed";
  }
  return "?";
}

AnsatzFamily ansatz_family_from_string(const std::string& s) {
  if (s == "real_amplitudes") return AnsatzFamily::RealAmplitudes;
  if (s == "efficient_su2") return AnsatzFamily::EfficientSU2;
  if (s == "proposed") return AnsatzFamily::ProposedToffoli;
  throw std::invalid_argument("unknown ansatz family: " + s);
}

bool operator==(const AnsatzSpec& a, const AnsatzSpec& b) {
  return a.family == b.family && a.num_qubits == b.num_qubits &&
         a.reps == b.reps;
}

static void validate_ansatz_spec(const AnsatzSpec& spec) {
  if (spec.reps < 1)
    throw std::invalid_argument("AnsatzSpec: reps must be >= 1");
  if (spec.num_qubits < 2 || spec.num_qubits > 8)
    throw std::invalid_argument("AnsatzSpec: num_qubits must be in [2, 8]");
  if (spec.family == AnsatzFamily::ProposedToffoli && spec.num_qubits != 3)
    throw std::invalid_argument(
        "AnsatzSpec: the proposed ansatz requires exactly 3 qubits");
}

int ansatz_param_count(const AnsatzSpec& spec) {
  validate_ansatz_spec(spec);
  const int layers = spec.reps + 1;
  switch (spec.family) {
    case AnsatzFamily::RealAmplitudes:
    case AnsatzFamily::ProposedToffoli:
      return spec.num_qubits * layers;
    case AnsatzFamily::EfficientSU2:
      return 2 * spec.num_qubits * layers;
  }
  throw std::logic_error("ansatz_param_count: unknown family");
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  validate_ansatz_spec(spec);
  Circuit c;
  c.num_qubits = spec.num_qubits;
  c.num_params = ansatz_param_count(spec);

  int slot = 0;
  auto rotation_layer = [&] {
    for (int q = 0; q < spec.num_qubits; ++q)
      c.ops.push_back({GateKind::RY, {q}, {slot++}, {}, {}, {}});
    if (spec.family == AnsatzFamily::EfficientSU2)
      for (int q = 0; q < spec.num_qubits; ++q)
        c.ops.push_back({GateKind::RZ, {q}, {slot++}, {}, {}, {}});
  };
  auto entangling_layer = [&] {
    if (spec.family == AnsatzFamily::ProposedToffoli) {
      c.ops.push_back({GateKind::CCX, {0, 1, 2}, {}, {}, {}, {}});
      c.ops.push_back({GateKind::CCX, {1, 2, 0}, {}, {}, {}, {}});
      c.ops.push_back({GateKind::CCX, {2, 0, 1}, {}, {}, {}, {}});
    } else {
      for (int i = 0; i < spec.num_qubits; ++i)
        for (int j = i + 1; j < spec.num_qubits; ++j)
          c.ops.push_back({GateKind::CX, {i, j}, {}, {}, {}, {}});
    }
  };

  for (int rep = 0; rep < spec.reps; ++rep) {
    rotation_layer();
    entangling_layer();
  }
  rotation_layer();

  c.validate();
  return c;
}

Circuit build_prep_circuit(const ClassTopology& topology, ChannelFamily noise,
                           WhichUnitary which) {
  if (topology.num_qubits < 2 || topology.num_qubits > 8)
    throw std::invalid_argument("build_prep_circuit: bad qubit count");
  for (const auto& [a, b] : topology.entangling_pairs)
    if (a < 0 || b < 0 || a >= topology.num_qubits ||
        b >= topology.num_qubits || a == b)
      throw std::invalid_argument("build_prep_circuit: invalid pair");

  const int channel_slots = noise == ChannelFamily::AD ? 2 : 3;
  Circuit c;
  c.num_qubits = topology.num_qubits;
  c.num_params = topology.num_qubits +
                 channel_slots * static_cast<int>(topology.entangling_pairs.size());

  int slot = 0;
  for (int q = 0; q < topology.num_qubits; ++q)
    c.ops.push_back({GateKind::RY, {q}, {slot++}, {}, {}, {}});
  for (const auto& [a, b] : topology.entangling_pairs) {
    GateOp op;
    op.kind = GateKind::Unitary2Param;
    op.targets = {a, b};
    op.family = noise;
    op.which = which;
    for (int s = 0; s < channel_slots; ++s) op.param_slots.push_back(slot++);
    c.ops.push_back(std::move(op));
  }

  c.validate();
  return c;
}

std::string circuit_to_json(const Circuit& circuit) {
  nlohmann::ordered_json j;
  j["num_qubits"] = circuit.num_qubits;
  j["num_params"] = circuit.num_params;
  j["ops"] = nlohmann::ordered_json::array();
  for (const auto& op : circuit.ops) {
    nlohmann::ordered_json o;
    o["kind"] = to_string(op.kind);
    o["targets"] = op.targets;
    o["slots"] = op.param_slots;
    if (op.kind == GateKind::Unitary2Param) {
      o["family"] = to_string(op.family);
      o["which"] = to_string(op.which);
    } else if (op.kind == GateKind::Unitary2) {
      std::vector<std::vector<double>> re, im;
      for (std::size_t r = 0; r < 4; ++r) {
        std::vector<double> rr, ri;
        for (std::size_t cidx = 0; cidx < 4; ++cidx) {
          rr.push_back(op.fixed_matrix(r, cidx).real());
          ri.push_back(op.fixed_matrix(r, cidx).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
      }
      o["matrix_re"] = re;
      o["matrix_im"] = im;
    }
    j["ops"].push_back(std::move(o));
  }
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Circuit c;
  c.num_qubits = j.at("num_qubits").get<int>();
  c.num_params = j.at("num_params").get<int>();
  for (const auto& o : j.at("ops")) {
    GateOp op;
    op.kind = gate_kind_from_string(o.at("kind").get<std::string>());
    op.targets = o.at("targets").get<std::vector<int>>();
    op.param_slots = o.at("slots").get<std::vector<int>>();
    if (op.kind == GateKind::Unitary2Param) {
      op.family = channel_family_from_string(o.at("family").get<std::string>());
      op.which = which_unitary_from_string(o.at("which").get<std::string>());
    } else if (op.kind == GateKind::Unitary2) {
      const auto re = o.at("matrix_re").get<std::vector<std::vector<double>>>();
      const auto im = o.at("matrix_im").get<std::vector<std::vector<double>>>();
      op.fixed_matrix = ComplexMatrix(4, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t cidx = 0; cidx < 4; ++cidx)
          op.fixed_matrix(r, cidx) = cdouble(re.at(r).at(cidx), im.at(r).at(cidx));
    }
    c.ops.push_back(std::move(op));
  }
  c.validate();
  return c;
}

}  // namespace qsc
