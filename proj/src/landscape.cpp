#include "qsc/landscape.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qsc/parallel.hpp"
#include "qsc/rng.hpp"
#include "qsc/version.hpp"

namespace qsc {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double variance(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return var / n;
}

}  // namespace

double projector_loss(const BoundCircuit& ansatz,
                      const std::vector<StateVector>& inputs) {
  if (inputs.empty())
    throw std::invalid_argument("projector_loss: empty sample set");
  double total = 0.0;
  for (const auto& input : inputs) {
    const StateVector out = run(ansatz, input);
    total += 1.0 - std::norm(out.amplitudes[0]);
  }
  return total / static_cast<double>(inputs.size());
}

LandscapeGrid scan(const Circuit& ansatz, const std::vector<StateVector>& inputs,
                   int param_i, int param_j, int grid_size, std::uint64_t seed,
                   int threads) {
  if (param_i == param_j)
    throw std::invalid_argument("scan: scanned parameters must differ");
  if (param_i < 0 || param_j < 0 || param_i >= ansatz.num_params ||
      param_j >= ansatz.num_params)
    throw std::invalid_argument("scan: parameter index out of range");
  if (grid_size < 3) throw std::invalid_argument("scan: grid size must be >= 3");
  if (inputs.empty()) throw std::invalid_argument("scan: empty sample set");

  LandscapeGrid grid;
  grid.param_i = param_i;
  grid.param_j = param_j;
  grid.grid_size = grid_size;
  grid.seed = seed;

  Rng rng(seed);
  grid.theta_base.resize(ansatz.num_params);
  for (double& v : grid.theta_base)
    v = rng.uniform(-std::numbers::pi, std::numbers::pi);

  grid.axis.resize(grid_size);
  for (int a = 0; a < grid_size; ++a)
    grid.axis[a] = -std::numbers::pi +
                   2.0 * std::numbers::pi * a / (grid_size - 1);

  grid.losses.assign(static_cast<std::size_t>(grid_size) * grid_size, 0.0);
  parallel_for(grid.losses.size(), threads, [&](std::size_t cell) {
    const int a = static_cast<int>(cell) / grid_size;
    const int b = static_cast<int>(cell) % grid_size;
    std::vector<double> theta = grid.theta_base;
    theta[param_i] = grid.axis[a];
    theta[param_j] = grid.axis[b];
    grid.losses[cell] = projector_loss(ansatz.bind(theta), inputs);
  });
  return grid;
}

LandscapeGrid scan(const AnsatzSpec& spec, const std::vector<DataSample>& samples,
                   int param_i, int param_j, int grid_size, std::uint64_t seed,
                   int threads) {
  return scan(build_ansatz(spec), prepare_inputs(samples), param_i, param_j,
              grid_size, seed, threads);
}

FlatnessReport flatness(const Circuit& ansatz,
                        const std::vector<StateVector>& inputs, int num_points,
                        double step, std::uint64_t seed) {
  if (num_points < 10)
    throw std::invalid_argument("flatness: need at least 10 points");
  if (step <= 0.0) throw std::invalid_argument("flatness: step must be > 0");
  if (ansatz.num_params < 1)
    throw std::invalid_argument("flatness: ansatz has no parameters");

  Rng rng(seed);
  std::vector<double> losses(num_points), grads(num_points);
  for (int p = 0; p < num_points; ++p) {
    std::vector<double> theta(ansatz.num_params);
    for (double& v : theta)
      v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    losses[p] = projector_loss(ansatz.bind(theta), inputs);
    std::vector<double> plus = theta, minus = theta;
    plus[0] += step;
    minus[0] -= step;
    grads[p] = (projector_loss(ansatz.bind(plus), inputs) -
                projector_loss(ansatz.bind(minus), inputs)) /
               (2.0 * step);
  }

  FlatnessReport report;
  report.loss_variance = variance(losses);
  report.gradient_variance = variance(grads);
  report.num_points = num_points;
  report.step = step;
  report.seed = seed;
  return report;
}

FlatnessReport flatness(const AnsatzSpec& spec,
                        const std::vector<DataSample>& samples, int num_points,
                        double step, std::uint64_t seed) {
  return flatness(build_ansatz(spec), prepare_inputs(samples), num_points,
                  step, seed);
}

std::vector<DataSample> representative_samples(const Dataset& dataset,
                                               int count) {
  if (count < 1)
    throw std::invalid_argument("representative_samples: count must be >= 1");
  std::vector<std::vector<int>> by_class(dataset.num_classes);
  for (std::size_t i = 0; i < dataset.samples.size(); ++i)
    by_class[dataset.samples[i].label].push_back(static_cast<int>(i));

  std::vector<DataSample> picked;
  std::vector<std::size_t> cursor(dataset.num_classes, 0);
  for (int t = 0; t < count; ++t) {
    const int c = t % dataset.num_classes;
    if (cursor[c] >= by_class[c].size())
      throw std::invalid_argument(
          "representative_samples: class exhausted before reaching count");
    picked.push_back(dataset.samples[by_class[c][cursor[c]++]]);
  }
  return picked;
}

std::vector<StateVector> prepare_inputs(const std::vector<DataSample>& samples) {
  std::vector<StateVector> inputs;
  inputs.reserve(samples.size());
  for (const auto& s : samples) inputs.push_back(realize_state(s));
  return inputs;
}

std::uint64_t sample_set_hash(const std::vector<DataSample>& samples) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  };
  for (const auto& s : samples) {
    mix(&s.label, sizeof(s.label));
    mix(&s.seed_trace, sizeof(s.seed_trace));
    for (double v : s.params) mix(&v, sizeof(v));
  }
  return h;
}

std::string grid_csv(const LandscapeGrid& grid, const std::string& ansatz_desc,
                     std::uint64_t samples_hash, int num_samples) {
  std::string out;
  out += "# tool: " + std::string(kToolVersion) + "\n";
  out += "# ansatz: " + ansatz_desc + "\n";
  out += "# params: " + std::to_string(grid.param_i) + "," +
         std::to_string(grid.param_j) + "\n";
  out += "# grid: " + std::to_string(grid.grid_size) + "\n";
  out += "# seed: " + std::to_string(grid.seed) + "\n";
  out += "# samples: " + std::to_string(num_samples) + "\n";
  char hash_buf[24];
  std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                static_cast<unsigned long long>(samples_hash));
  out += "# sample_hash: " + std::string(hash_buf) + "\n";
  for (int a = 0; a < grid.grid_size; ++a) {
    for (int b = 0; b < grid.grid_size; ++b) {
      if (b) out += ",";
      out += fmt_double(grid.losses[static_cast<std::size_t>(a) *
                                        grid.grid_size +
                                    b]);
    }
    out += "\n";
  }
  return out;
}

std::string axis_csv(const LandscapeGrid& grid) {
  std::string out = "# axis values for both scanned parameters\n";
  for (double v : grid.axis) out += fmt_double(v) + "\n";
  return out;
}

std::string axes_path_for(const std::string& grid_path) {
  const auto dot = grid_path.rfind('.');
  const auto slash = grid_path.rfind('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash))
    return grid_path + "_axes";
  return grid_path.substr(0, dot) + "_axes" + grid_path.substr(dot);
}

}  // namespace qsc
