#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsc/circuit.hpp"
#include "qsc/dataset.hpp"

namespace qsc {

/// Mean of 1 - |<0...0|psi>|^2 over the prepared inputs after applying the
/// bound ansatz (projector-complement expectation, bounded by [0, 1]).
double projector_loss(const BoundCircuit& ansatz,
                      const std::vector<StateVector>& inputs);

struct LandscapeGrid {
  int param_i = 0;
  int param_j = 1;
  int grid_size = 0;
  std::vector<double> axis;    // shared by both scanned parameters
  std::vector<double> losses;  // row-major; row a varies param_i = axis[a]
  std::vector<double> theta_base;
  std::uint64_t seed = 0;
};

/// Loss surface over (theta_i, theta_j) in [-pi, pi]^2 on a G x G grid with
/// endpoints included. All other parameters are fixed at values drawn once
/// from U[-pi, pi] using the seed.
LandscapeGrid scan(const Circuit& ansatz, const std::vector<StateVector>& inputs,
                   int param_i, int param_j, int grid_size, std::uint64_t seed,
                   int threads = 1);
LandscapeGrid scan(const AnsatzSpec& spec, const std::vector<DataSample>& samples,
                   int param_i, int param_j, int grid_size, std::uint64_t seed,
                   int threads = 1);

struct FlatnessReport {
  double loss_variance = 0.0;      // over the sampled parameter points
  double gradient_variance = 0.0;  // of the central difference along e_1
  int num_points = 0;
  double step = 0.0;
  std::uint64_t seed = 0;
};

/// Draws M parameter vectors from U[-pi, pi]^m and reports the population
/// variance of the loss and of the finite-difference derivative along the
/// first parameter.
FlatnessReport flatness(const Circuit& ansatz,
                        const std::vector<StateVector>& inputs, int num_points,
                        double step, std::uint64_t seed);
FlatnessReport flatness(const AnsatzSpec& spec,
                        const std::vector<DataSample>& samples,
                        int num_points = 200, double step = 1e-4,
                        std::uint64_t seed = 0);

/// Picks `count` samples cycling through the classes in label order, taking
/// each class's earliest unused samples.
std::vector<DataSample> representative_samples(const Dataset& dataset,
                                               int count = 8);

std::vector<StateVector> prepare_inputs(const std::vector<DataSample>& samples);

/// FNV-1a over the serialized sample records; identifies the sample set in
/// scan output headers.
std::uint64_t sample_set_hash(const std::vector<DataSample>& samples);

/// Grid CSV: '#'-prefixed metadata lines, then G rows of G comma-separated
/// loss values. The shared axis goes to a companion file.
std::string grid_csv(const LandscapeGrid& grid, const std::string& ansatz_desc,
                     std::uint64_t samples_hash, int num_samples);
std::string axis_csv(const LandscapeGrid& grid);

/// grid.csv -> grid_axes.csv (inserted before the extension).
std::string axes_path_for(const std::string& grid_path);

}  // namespace qsc
