#include "qsc/cobyla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsc::cobyla {

namespace {

constexpr double kFarFactor = 2.1;       // refresh vertices beyond this * rho
constexpr double kConditioningTol = 1e-10;
constexpr double kSuccessRatio = 0.01;   // accepted fraction of predicted drop
constexpr double kShrink = 0.5;

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Solves A x = b (A row-major m x m) by Gaussian elimination with partial
/// pivoting. Returns false when a pivot collapses.
bool solve_linear(std::vector<double> a, std::vector<double> b, int m,
                  std::vector<double>& x) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    double best = std::abs(a[perm[col] * m + col]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::abs(a[perm[r] * m + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-300) return false;
    std::swap(perm[col], perm[pivot]);
    const double diag = a[perm[col] * m + col];
    for (int r = col + 1; r < m; ++r) {
      const double factor = a[perm[r] * m + col] / diag;
      if (factor == 0.0) continue;
      for (int c = col; c < m; ++c)
        a[perm[r] * m + c] -= factor * a[perm[col] * m + c];
      b[perm[r]] -= factor * b[perm[col]];
    }
  }
  x.assign(m, 0.0);
  for (int row = m - 1; row >= 0; --row) {
    double acc = b[perm[row]];
    for (int c = row + 1; c < m; ++c) acc -= a[perm[row] * m + c] * x[c];
    x[row] = acc / a[perm[row] * m + row];
  }
  return true;
}

struct Geometry {
  double conditioning = 0.0;        // min Gram-Schmidt residual / rho
  std::vector<double> deficient;    // unit direction least covered by edges
};

/// Gram-Schmidt over the edge vectors; the conditioning score is the
/// smallest residual length relative to rho, and the deficient direction is
/// the canonical axis component least represented in the edge span.
Geometry analyze_geometry(const std::vector<std::vector<double>>& edges,
                          double rho) {
  const int m = static_cast<int>(edges.size());
  Geometry geo;
  std::vector<std::vector<double>> basis;
  double min_residual = -1.0;
  for (const auto& edge : edges) {
    std::vector<double> r = edge;
    for (const auto& q : basis) {
      double dot = 0.0;
      for (int i = 0; i < m; ++i) dot += r[i] * q[i];
      for (int i = 0; i < m; ++i) r[i] -= dot * q[i];
    }
    const double len = norm(r);
    if (min_residual < 0.0 || len < min_residual) min_residual = len;
    if (len > 1e-300) {
      for (double& v : r) v /= len;
      basis.push_back(std::move(r));
    }
  }
  geo.conditioning = min_residual / rho;

  // Residual of each canonical axis against the edge span.
  double best_len = -1.0;
  for (int axis = 0; axis < m; ++axis) {
    std::vector<double> r(m, 0.0);
    r[axis] = 1.0;
    for (const auto& q : basis) {
      const double dot = q[axis];
      for (int i = 0; i < m; ++i) r[i] -= dot * q[i];
    }
    const double len = norm(r);
    if (len > best_len) {
      best_len = len;
      geo.deficient = std::move(r);
    }
  }
  if (best_len > 1e-300)
    for (double& v : geo.deficient) v /= best_len;
  else
    geo.deficient.assign(m, 0.0);
  return geo;
}

}  // namespace

std::string to_string(Termination reason) {
  return reason == Termination::RhoConverged ? "rho_converged"
                                             : "max_evaluations";
}

Result minimize(const Objective& f, const std::vector<double>& x0,
                const Config& config, const EvalCallback& on_eval) {
  const int m = static_cast<int>(x0.size());
  if (m < 1) throw std::invalid_argument("cobyla: empty parameter vector");
  if (!(config.rhoend > 0.0) || !(config.rhobeg > config.rhoend))
    throw std::invalid_argument("cobyla: need 0 < rhoend < rhobeg");
  if (config.maxfun < m + 2)
    throw std::invalid_argument("cobyla: maxfun must be >= dim + 2");

  Result result;
  result.x = x0;
  result.fx = std::numeric_limits<double>::infinity();

  int evals = 0;
  auto evaluate = [&](const std::vector<double>& x) {
    const double fx = f(x);
    ++evals;
    if (!std::isfinite(fx))
      throw std::runtime_error("cobyla: non-finite objective value at evaluation " +
                               std::to_string(evals));
    const bool improved = fx < result.fx;
    if (improved) {
      result.fx = fx;
      result.x = x;
    }
    if (on_eval) on_eval(evals, x, fx, improved);
    return fx;
  };
  auto budget_left = [&] { return evals < config.maxfun; };

  // Initial simplex at x0 and x0 + rhobeg * e_i.
  std::vector<std::vector<double>> points(m + 1, x0);
  std::vector<double> fvals(m + 1, 0.0);
  fvals[0] = evaluate(points[0]);
  for (int i = 1; i <= m; ++i) {
    points[i][i - 1] += config.rhobeg;
    if (!budget_left()) {
      result.evaluations = evals;
      result.reason = Termination::MaxEvaluations;
      result.rho_final = config.rhobeg;
      return result;
    }
    fvals[i] = evaluate(points[i]);
  }

  double rho = config.rhobeg;
  Termination reason = Termination::MaxEvaluations;

  while (true) {
    if (!budget_left()) {
      reason = Termination::MaxEvaluations;
      break;
    }

    int best = 0, worst = 0;
    for (int i = 1; i <= m; ++i) {
      if (fvals[i] < fvals[best]) best = i;
      if (fvals[i] > fvals[worst]) worst = i;
    }

    // Collect edges relative to the best vertex.
    std::vector<std::vector<double>> edges;
    std::vector<int> edge_owner;
    edges.reserve(m);
    int farthest = -1;
    double far_dist = 0.0;
    for (int i = 0; i <= m; ++i) {
      if (i == best) continue;
      std::vector<double> e(m);
      for (int d = 0; d < m; ++d) e[d] = points[i][d] - points[best][d];
      const double len = norm(e);
      if (len > far_dist) {
        far_dist = len;
        farthest = i;
      }
      edges.push_back(std::move(e));
      edge_owner.push_back(i);
    }

    // Stale vertex: pull the farthest one back to the trust-region scale.
    if (far_dist > kFarFactor * rho) {
      std::vector<double> cand(m);
      for (int d = 0; d < m; ++d)
        cand[d] = points[best][d] +
                  rho * (points[farthest][d] - points[best][d]) / far_dist;
      const double fc = evaluate(cand);
      points[farthest] = std::move(cand);
      fvals[farthest] = fc;
      continue;
    }

    const Geometry geo = analyze_geometry(edges, rho);
    if (geo.conditioning < kConditioningTol) {
      // Degenerate simplex: re-place the farthest vertex along the most
      // deficient direction at distance rho.
      std::vector<double> cand(m);
      for (int d = 0; d < m; ++d)
        cand[d] = points[best][d] + rho * geo.deficient[d];
      const double fc = evaluate(cand);
      points[farthest] = std::move(cand);
      fvals[farthest] = fc;
      continue;
    }

    // Affine model through the vertices: edges * g = value differences.
    std::vector<double> a(m * m), b(m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) a[r * m + c] = edges[r][c];
      b[r] = fvals[edge_owner[r]] - fvals[best];
    }
    std::vector<double> grad;
    if (!solve_linear(std::move(a), std::move(b), m, grad)) {
      // Numerically singular despite the conditioning guard; repair.
      std::vector<double> cand(m);
      for (int d = 0; d < m; ++d)
        cand[d] = points[best][d] + rho * geo.deficient[d];
      const double fc = evaluate(cand);
      points[farthest] = std::move(cand);
      fvals[farthest] = fc;
      continue;
    }

    const double gnorm = norm(grad);
    if (gnorm < 1e-300) {
      if (rho <= config.rhoend) {
        reason = Termination::RhoConverged;
        break;
      }
      rho = std::max(rho * kShrink, config.rhoend);
      continue;
    }

    // Model minimizer on the sphere of radius rho around the best vertex.
    std::vector<double> cand(m);
    for (int d = 0; d < m; ++d)
      cand[d] = points[best][d] - rho * grad[d] / gnorm;
    const double fc = evaluate(cand);

    const double predicted = rho * gnorm;
    const double actual = fvals[best] - fc;
    if (actual > kSuccessRatio * predicted) {
      points[worst] = std::move(cand);
      fvals[worst] = fc;
      continue;
    }
    if (fc < fvals[worst]) {
      points[worst] = std::move(cand);
      fvals[worst] = fc;
    }
    if (rho <= config.rhoend) {
      reason = Termination::RhoConverged;
      break;
    }
    rho = std::max(rho * kShrink, config.rhoend);
  }

  result.evaluations = evals;
  result.reason = reason;
  result.rho_final = rho;
  return result;
}

}  // namespace qsc::cobyla
