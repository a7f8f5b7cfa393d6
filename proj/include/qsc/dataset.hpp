#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsc/channel.hpp"
#include "qsc/circuit.hpp"
#include "qsc/labels.hpp"
#include "qsc/oracle.hpp"
#include "qsc/rng.hpp"

namespace qsc {

/// One labeled generation record. Only the generation parameters are stored;
/// the state itself is re-simulated on demand.
struct DataSample {
  ClassTopology topology;
  ChannelFamily noise = ChannelFamily::AD;
  WhichUnitary which = WhichUnitary::U0;
  std::vector<double> params;
  int label = 0;
  EntropySignature entropies;
  std::uint64_t seed_trace = 0;
};

bool operator==(const DataSample& a, const DataSample& b);

struct GenConfig {
  int num_qubits = 2;
  ChannelFamily noise = ChannelFamily::AD;
  WhichUnitary which = WhichUnitary::U0;
  int per_class = 200;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Dataset {
  std::vector<DataSample> samples;
  int num_qubits = 0;
  int num_classes = 0;
  std::vector<int> train_indices;
  std::vector<int> test_indices;
  GenConfig config;
};

bool operator==(const Dataset& a, const Dataset& b);

/// Which dilated unitary actually entangles, per family. The RTN k0 operator
/// is proportional to the identity, so its dilation is a local rotation of
/// the ancilla for every parameter value; entangled RTN classes need U1.
WhichUnitary default_which(ChannelFamily family);

/// Per-class default dataset size: 200 samples for 2 qubits, 150 for 3.
int default_per_class(int num_qubits);

/// Draws generation parameters for one topology, simulates the state, and
/// verifies the oracle label, redrawing on mismatch (at most 100 attempts).
/// RY angles ~ U[0, pi]; AD draws alpha ~ U(0.1, 2], beta ~ U[-2, -0.1);
/// RTN draws gamma ~ U(0.1, 2], omega ~ U(0.5, 4], t ~ U(0.1, 3].
DataSample sample_class(const ClassTopology& topology, ChannelFamily noise,
                        WhichUnitary which, Rng& rng,
                        std::uint64_t seed_trace);

/// Balanced dataset with a stratified 70/30 split (rounding toward train).
/// Deterministic for a fixed seed, independent of thread count.
Dataset generate(const GenConfig& config);

/// Rebuilds the prep circuit of a sample and runs it from |0...0>.
StateVector realize_state(const DataSample& sample);

// JSON-lines persistence. Line 1 is a header object; each following line is
// one sample. Floats are written with 17 significant digits.
void save(const Dataset& dataset, const std::string& path);
void save(const Dataset& dataset, std::ostream& out);
std::string to_jsonl(const Dataset& dataset);
Dataset load(const std::string& path);
Dataset load_from_string(const std::string& text);

struct AuditIssue {
  int index = -1;
  std::string message;
};

struct AuditResult {
  std::vector<AuditIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Re-simulates every sample and checks the stored label and entropies
/// (within 1e-8).
AuditResult audit(const Dataset& dataset);

}  // namespace qsc
