#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qsc::cobyla {

struct Config {
  double rhobeg = 1.0;
  double rhoend = 1e-4;
  int maxfun = 1000;
  std::uint64_t seed = 0;  // recorded with results; the algorithm itself is
                           // deterministic and draws no randomness
};

enum class Termination { RhoConverged, MaxEvaluations };

std::string to_string(Termination reason);

struct Result {
  std::vector<double> x;
  double fx = 0.0;
  int evaluations = 0;
  Termination reason = Termination::RhoConverged;
  double rho_final = 0.0;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Called after every objective evaluation. `improved` is true when this
/// evaluation strictly lowered the best value seen so far.
using EvalCallback = std::function<void(int eval_index,
                                        const std::vector<double>& x,
                                        double fx, bool improved)>;

/// Derivative-free trust-region minimization with linear interpolation
/// models (unconstrained COBYLA core).
///
/// A simplex of m+1 points is seeded at x0 + rhobeg * e_i. Each iteration
/// fits the affine model interpolating the vertices, steps from the best
/// vertex to the model minimizer on the trust-region sphere of radius rho,
/// and replaces the worst vertex. Vertices that drift beyond 2.1*rho of the
/// best are pulled back to distance rho, and a simplex whose edge matrix
/// conditioning falls below 1e-10 has its farthest vertex re-placed along
/// the most deficient direction. rho halves whenever a step fails to achieve
/// a fraction of the model's predicted reduction; the run ends at
/// rho <= rhoend or after maxfun evaluations.
///
/// The returned point is the best evaluated one. Throws on a non-finite
/// objective value or an invalid configuration (requires
/// 0 < rhoend < rhobeg and maxfun >= m + 2).
Result minimize(const Objective& f, const std::vector<double>& x0,
                const Config& config, const EvalCallback& on_eval = {});

}  // namespace qsc::cobyla
