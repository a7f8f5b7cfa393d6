#include "qsc/qnn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "qsc/parallel.hpp"
#include "qsc/rng.hpp"
#include "qsc/version.hpp"

namespace qsc {

namespace {

constexpr double kProbabilityFloor = 1e-12;

std::vector<double> interpret_state(const StateVector& state, int num_classes,
                                    InterpretMode mode) {
  if (mode == InterpretMode::Observable) {
    const double p0 = std::norm(state.amplitudes[0]);
    return {p0, 1.0 - p0};
  }
  std::vector<double> p(num_classes, 0.0);
  for (std::size_t j = 0; j < state.amplitudes.size(); ++j)
    p[j % num_classes] += std::norm(state.amplitudes[j]);
  return p;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ComplexMatrix projector_complement_observable(int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  ComplexMatrix o = ComplexMatrix::identity(dim);
  o(0, 0) = 0.0;
  return o;
}

std::string to_string(InterpretMode mode) {
  return mode == InterpretMode::ModK ? "modk" : "observable";
}

InterpretMode interpret_mode_from_string(const std::string& s) {
  if (s == "modk") return InterpretMode::ModK;
  if (s == "observable") return InterpretMode::Observable;
  throw std::invalid_argument("unknown interpret mode: " + s);
}

std::vector<double> forward(const DataSample& sample,
                            const BoundCircuit& ansatz, int num_classes) {
  if (num_classes < 2)
    throw std::invalid_argument("forward: need at least 2 classes");
  const StateVector input = realize_state(sample);
  if (ansatz.num_qubits != input.num_qubits)
    throw std::invalid_argument("forward: ansatz qubit count mismatch");
  if ((std::size_t{1} << input.num_qubits) <
      static_cast<std::size_t>(num_classes))
    throw std::invalid_argument("forward: more classes than outcomes");
  const StateVector out = run(ansatz, input);
  return interpret_state(out, num_classes, InterpretMode::ModK);
}

double binary_expectation(const DataSample& sample, const BoundCircuit& ansatz,
                          const ComplexMatrix& observable) {
  const StateVector input = realize_state(sample);
  if (ansatz.num_qubits != input.num_qubits)
    throw std::invalid_argument("binary_expectation: qubit count mismatch");
  const ComplexMatrix expected =
      projector_complement_observable(input.num_qubits);
  if (observable.rows() != expected.rows() ||
      max_abs_diff(observable, expected) > 1e-12)
    throw std::invalid_argument(
        "binary_expectation: observable must be I - |0...0><0...0|");
  const StateVector out = run(ansatz, input);
  return 1.0 - std::norm(out.amplitudes[0]);
}

double cross_entropy(std::span<const double> p, int label) {
  if (label < 0 || label >= static_cast<int>(p.size()))
    throw std::invalid_argument("cross_entropy: label out of range");
  double sum = 0.0;
  for (double v : p) {
    if (v < -1e-9) throw std::invalid_argument("cross_entropy: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("cross_entropy: probabilities must sum to 1");
  return -std::log(std::max(p[label], kProbabilityFloor));
}

PartitionLoss::PartitionLoss(const Dataset& dataset, std::vector<int> indices,
                             const AnsatzSpec& spec, InterpretMode mode,
                             int threads)
    : num_classes_(dataset.num_classes), mode_(mode), threads_(threads) {
  if (indices.empty())
    throw std::invalid_argument("PartitionLoss: empty partition");
  if (mode == InterpretMode::Observable && dataset.num_classes != 2)
    throw std::invalid_argument(
        "PartitionLoss: observable mode requires 2 classes");
  if (spec.num_qubits != dataset.num_qubits)
    throw std::invalid_argument("PartitionLoss: ansatz qubit count mismatch");
  ansatz_ = build_ansatz(spec);
  inputs_.reserve(indices.size());
  labels_.reserve(indices.size());
  for (int idx : indices) {
    if (idx < 0 || idx >= static_cast<int>(dataset.samples.size()))
      throw std::invalid_argument("PartitionLoss: index out of range");
    inputs_.push_back(realize_state(dataset.samples[idx]));
    labels_.push_back(dataset.samples[idx].label);
  }
}

double PartitionLoss::operator()(const std::vector<double>& theta) const {
  const BoundCircuit bound = ansatz_.bind(theta);
  std::vector<double> losses(inputs_.size());
  parallel_for(inputs_.size(), threads_, [&](std::size_t i) {
    const StateVector out = run(bound, inputs_[i]);
    const std::vector<double> p =
        interpret_state(out, num_classes_, mode_);
    losses[i] = cross_entropy(p, labels_[i]);
  });
  double total = 0.0;
  for (double l : losses) total += l;  // fixed index order
  return total / static_cast<double>(losses.size());
}

double dataset_loss(std::span<const double> theta, const Dataset& dataset,
                    std::span<const int> indices, const AnsatzSpec& spec,
                    InterpretMode mode, int threads) {
  PartitionLoss loss(dataset, std::vector<int>(indices.begin(), indices.end()),
                     spec, mode, threads);
  return loss(std::vector<double>(theta.begin(), theta.end()));
}

TrainedModel train(const Dataset& dataset, const AnsatzSpec& spec,
                   const TrainConfig& config) {
  if (dataset.train_indices.empty())
    throw std::invalid_argument("train: dataset has no training split");
  {
    std::unordered_set<int> train_set(dataset.train_indices.begin(),
                                      dataset.train_indices.end());
    for (int idx : dataset.test_indices)
      if (train_set.count(idx))
        throw std::invalid_argument("train: train/test splits overlap");
  }

  const int m = ansatz_param_count(spec);
  Rng rng(config.seed);
  std::vector<double> theta0(m);
  for (double& v : theta0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);

  PartitionLoss loss(dataset, dataset.train_indices, spec, config.interpret,
                     config.threads);

  TrainedModel model;
  model.ansatz = spec;
  model.interpret = config.interpret;
  model.num_classes = dataset.num_classes;
  model.config = config;
  model.loss_trace.push_back({0, loss(theta0)});
  model.theta = theta0;
  model.termination = "maxiter_zero";

  if (config.maxiter > 0) {
    cobyla::Config opt;
    opt.rhobeg = config.rhobeg;
    opt.rhoend = config.rhoend;
    opt.maxfun = config.maxfun();
    opt.seed = config.seed;
    const auto result = cobyla::minimize(
        [&loss](const std::vector<double>& x) { return loss(x); }, theta0, opt,
        [&model, &config](int eval, const std::vector<double>&, double fx,
                          bool improved) {
          if (improved &&
              model.loss_trace.size() < static_cast<std::size_t>(config.maxiter))
            model.loss_trace.push_back({eval, fx});
        });
    model.theta = result.x;
    model.evaluations = result.evaluations;
    model.termination = cobyla::to_string(result.reason);
  }
  return model;
}

Prediction predict(const TrainedModel& model, const DataSample& sample) {
  const BoundCircuit bound = build_ansatz(model.ansatz).bind(model.theta);
  Prediction pred;
  if (model.interpret == InterpretMode::Observable) {
    const StateVector out = run(bound, realize_state(sample));
    const double p0 = std::norm(out.amplitudes[0]);
    pred.probabilities = {p0, 1.0 - p0};
  } else {
    pred.probabilities = forward(sample, bound, model.num_classes);
  }
  pred.label = 0;
  for (int c = 1; c < static_cast<int>(pred.probabilities.size()); ++c)
    if (pred.probabilities[c] > pred.probabilities[pred.label]) pred.label = c;
  return pred;
}

std::string model_to_json(const TrainedModel& model) {
  nlohmann::ordered_json j;
  j["format"] = "qsc-model";
  j["version"] = 1;
  j["tool"] = kToolVersion;
  j["ansatz"] = {{"family", to_string(model.ansatz.family)},
                 {"num_qubits", model.ansatz.num_qubits},
                 {"reps", model.ansatz.reps}};
  j["interpret"] = to_string(model.interpret);
  j["num_classes"] = model.num_classes;
  j["config"] = {{"maxiter", model.config.maxiter},
                 {"rhobeg", model.config.rhobeg},
                 {"rhoend", model.config.rhoend},
                 {"maxfun", model.config.maxfun()},
                 {"seed", model.config.seed}};
  j["evaluations"] = model.evaluations;
  j["termination"] = model.termination;
  j["theta"] = model.theta;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& rec : model.loss_trace)
    trace.push_back({rec.iteration, rec.loss});
  j["loss_trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "qsc-model")
    throw std::runtime_error("model_from_json: not a qsc-model file");
  TrainedModel model;
  model.ansatz.family =
      ansatz_family_from_string(j.at("ansatz").at("family").get<std::string>());
  model.ansatz.num_qubits = j.at("ansatz").at("num_qubits").get<int>();
  model.ansatz.reps = j.at("ansatz").at("reps").get<int>();
  model.interpret =
      interpret_mode_from_string(j.at("interpret").get<std::string>());
  model.num_classes = j.at("num_classes").get<int>();
  model.config.maxiter = j.at("config").at("maxiter").get<int>();
  model.config.rhobeg = j.at("config").at("rhobeg").get<double>();
  model.config.rhoend = j.at("config").at("rhoend").get<double>();
  model.config.seed = j.at("config").at("seed").get<std::uint64_t>();
  model.config.interpret = model.interpret;
  model.evaluations = j.value("evaluations", 0);
  model.termination = j.value("termination", "");
  model.theta = j.at("theta").get<std::vector<double>>();
  for (const auto& rec : j.at("loss_trace"))
    model.loss_trace.push_back({rec.at(0).get<int>(), rec.at(1).get<double>()});
  if (model.theta.size() !=
      static_cast<std::size_t>(ansatz_param_count(model.ansatz)))
    throw std::runtime_error("model_from_json: theta length mismatch");
  return model;
}

void save_model(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_model: cannot open " + path);
  out << model_to_json(model);
}

TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_model: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

std::string loss_trace_csv(const TrainedModel& model) {
  std::string out;
  out += "# tool: " + std::string(kToolVersion) + "\n";
  out += "# ansatz: " + to_string(model.ansatz.family) +
         " reps=" + std::to_string(model.ansatz.reps) +
         " qubits=" + std::to_string(model.ansatz.num_qubits) + "\n";
  out += "# seed: " + std::to_string(model.config.seed) + "\n";
  out += "# maxiter: " + std::to_string(model.config.maxiter) + "\n";
  out += "iteration,loss\n";
  for (const auto& rec : model.loss_trace)
    out += std::to_string(rec.iteration) + "," + fmt_double(rec.loss) + "\n";
  return out;
}

}  // namespace qsc
