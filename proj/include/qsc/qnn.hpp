#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsc/circuit.hpp"
#include "qsc/cobyla.hpp"
#include "qsc/dataset.hpp"
#include "qsc/matrix.hpp"

namespace qsc {

/// O = I - |0...0><0...0| on n qubits.
ComplexMatrix projector_complement_observable(int num_qubits);

/// How measurement outcomes become class probabilities.
/// ModK: p_c = sum of |amp_j|^2 over outcomes j with j mod k == c.
/// Observable: binary only; p = (|amp_0|^2, 1 - |amp_0|^2).
enum class InterpretMode { ModK, Observable };

std::string to_string(InterpretMode mode);
InterpretMode interpret_mode_from_string(const std::string& s);

/// Outcome index j -> class j mod k.
struct InterpretMap {
  int num_outcomes = 0;
  int num_classes = 0;
  int class_of(int outcome) const { return outcome % num_classes; }
};

/// Runs the sample's prep circuit from |0...0>, applies the bound ansatz,
/// and bins outcome probabilities mod num_classes.
std::vector<double> forward(const DataSample& sample,
                            const BoundCircuit& ansatz, int num_classes);

/// 1 - |<0...0|psi>|^2 for the state prepared by sample + ansatz. The
/// observable argument must equal I - |0...0><0...0|.
double binary_expectation(const DataSample& sample, const BoundCircuit& ansatz,
                          const ComplexMatrix& observable);

/// -ln(max(p[label], 1e-12)). p must sum to 1 within 1e-9.
double cross_entropy(std::span<const double> p, int label);

/// Mean cross-entropy over the given sample indices, reduced in index order.
double dataset_loss(std::span<const double> theta, const Dataset& dataset,
                    std::span<const int> indices, const AnsatzSpec& spec,
                    InterpretMode mode = InterpretMode::ModK, int threads = 1);

struct TrainConfig {
  int maxiter = 100;
  double rhobeg = 1.0;
  double rhoend = 1e-4;
  std::uint64_t seed = 1;
  InterpretMode interpret = InterpretMode::ModK;
  int threads = 1;

  int maxfun() const { return 10 * maxiter; }
};

struct LossRecord {
  int iteration = 0;
  double loss = 0.0;
};

struct TrainedModel {
  AnsatzSpec ansatz;
  InterpretMode interpret = InterpretMode::ModK;
  int num_classes = 0;
  std::vector<double> theta;
  std::vector<LossRecord> loss_trace;
  TrainConfig config;
  int evaluations = 0;
  std::string termination;
};

/// COBYLA training loop. theta0 ~ U[-pi, pi] from the seed; the trace holds
/// the initial loss plus each strict improvement of the best-seen loss,
/// capped at maxiter records. Returns the best evaluated parameters.
TrainedModel train(const Dataset& dataset, const AnsatzSpec& spec,
                   const TrainConfig& config);

struct Prediction {
  int label = 0;
  std::vector<double> probabilities;
};

/// Argmax of the forward probabilities; ties break toward the lower class
/// code.
Prediction predict(const TrainedModel& model, const DataSample& sample);

// Model persistence (JSON) and the loss-curve CSV.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);
std::string loss_trace_csv(const TrainedModel& model);

/// Precomputes the per-sample input states of a partition once and
/// evaluates the mean cross-entropy for many parameter vectors. Results are
/// bitwise identical to calling dataset_loss per theta.
class PartitionLoss {
 public:
  PartitionLoss(const Dataset& dataset, std::vector<int> indices,
                const AnsatzSpec& spec, InterpretMode mode, int threads);

  double operator()(const std::vector<double>& theta) const;
  std::size_t size() const { return inputs_.size(); }

 private:
  Circuit ansatz_;
  std::vector<StateVector> inputs_;
  std::vector<int> labels_;
  int num_classes_ = 0;
  InterpretMode mode_ = InterpretMode::ModK;
  int threads_ = 1;
};

}  // namespace qsc
