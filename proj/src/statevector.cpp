#include "qsc/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qsc {

StateVector StateVector::zero_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 8)
    throw std::invalid_argument("StateVector: num_qubits must be in [1, 8]");
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(std::size_t{1} << num_qubits, cdouble(0.0, 0.0));
  s.amplitudes[0] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<cdouble> amplitudes) {
  if (num_qubits < 1 || num_qubits > 8)
    throw std::invalid_argument("StateVector: num_qubits must be in [1, 8]");
  if (amplitudes.size() != (std::size_t{1} << num_qubits))
    throw std::invalid_argument("StateVector: amplitude count mismatch");
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes = std::move(amplitudes);
  if (std::abs(s.norm_sq() - 1.0) > 1e-10)
    throw std::invalid_argument("StateVector: not normalized");
  return s;
}

double StateVector::norm_sq() const {
  double n = 0.0;
  for (const auto& a : amplitudes) n += std::norm(a);
  return n;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix entries) {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("DensityMatrix: matrix not square");
  int n = 0;
  while ((std::size_t{1} << n) < entries.rows()) ++n;
  if ((std::size_t{1} << n) != entries.rows())
    throw std::invalid_argument("DensityMatrix: dimension not a power of two");
  if (!is_hermitian(entries, 1e-10))
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(entries.trace() - cdouble(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  const auto eig = hermitian_eigenvalues(entries);
  if (eig.front() < -1e-9)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  DensityMatrix rho;
  rho.num_qubits = n;
  rho.entries = std::move(entries);
  return rho;
}

StateVector apply_gate(const StateVector& state, const ComplexMatrix& gate,
                       const std::vector<int>& targets) {
  const int n = state.num_qubits;
  const std::size_t k = targets.size();
  if (k < 1 || k > 3)
    throw std::invalid_argument("apply_gate: gate must act on 1..3 qubits");
  const std::size_t sub = std::size_t{1} << k;
  if (gate.rows() != sub || gate.cols() != sub)
    throw std::invalid_argument("apply_gate: gate dimension mismatch");

  std::size_t target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n)
      throw std::invalid_argument("apply_gate: target out of range");
    const std::size_t bit = std::size_t{1} << t;
    if (target_mask & bit)
      throw std::invalid_argument("apply_gate: duplicate target");
    target_mask |= bit;
  }

  // offset[loc] scatters the gate-local index loc onto the global index.
  std::array<std::size_t, 8> offset{};
  for (std::size_t loc = 0; loc < sub; ++loc) {
    std::size_t o = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (loc & (std::size_t{1} << t)) o |= std::size_t{1} << targets[t];
    offset[loc] = o;
  }

  const std::size_t dim = std::size_t{1} << n;
  StateVector out;
  out.num_qubits = n;
  out.amplitudes.assign(dim, cdouble(0.0, 0.0));

  std::array<cdouble, 8> buf{};
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::size_t c = 0; c < sub; ++c)
      buf[c] = state.amplitudes[base | offset[c]];
    for (std::size_t r = 0; r < sub; ++r) {
      cdouble acc(0.0, 0.0);
      for (std::size_t c = 0; c < sub; ++c) acc += gate(r, c) * buf[c];
      out.amplitudes[base | offset[r]] = acc;
    }
  }
  return out;
}

double expectation(const StateVector& state, const ComplexMatrix& observable) {
  const std::size_t dim = state.amplitudes.size();
  if (observable.rows() != dim || observable.cols() != dim)
    throw std::invalid_argument("expectation: observable dimension mismatch");
  if (!is_hermitian(observable, 1e-10))
    throw std::invalid_argument("expectation: observable not Hermitian");
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (state.amplitudes[i] == cdouble(0.0, 0.0)) continue;
    cdouble row(0.0, 0.0);
    for (std::size_t j = 0; j < dim; ++j)
      row += observable(i, j) * state.amplitudes[j];
    acc += std::conj(state.amplitudes[i]) * row;
  }
  return acc.real();
}

DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep) {
  const int n = state.num_qubits;
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty())
    throw std::invalid_argument("partial_trace: keep set empty");
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate kept qubit");
  if (kept.front() < 0 || kept.back() >= n)
    throw std::invalid_argument("partial_trace: kept qubit out of range");
  if (kept.size() == static_cast<std::size_t>(n))
    throw std::invalid_argument("partial_trace: keep set must be proper");

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t edim = std::size_t{1} << traced.size();

  auto compose = [&](std::size_t kept_bits, std::size_t env_bits) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < kept.size(); ++t)
      if (kept_bits & (std::size_t{1} << t)) idx |= std::size_t{1} << kept[t];
    for (std::size_t t = 0; t < traced.size(); ++t)
      if (env_bits & (std::size_t{1} << t)) idx |= std::size_t{1} << traced[t];
    return idx;
  };

  ComplexMatrix rho(kdim, kdim);
  for (std::size_t r = 0; r < kdim; ++r)
    for (std::size_t c = 0; c < kdim; ++c) {
      cdouble acc(0.0, 0.0);
      for (std::size_t e = 0; e < edim; ++e)
        acc += state.amplitudes[compose(r, e)] *
               std::conj(state.amplitudes[compose(c, e)]);
      rho(r, c) = acc;
    }
  return DensityMatrix::from_matrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eigenvalues(rho.entries);
  double entropy = 0.0;
  for (double lambda : eig) {
    if (lambda < -1e-9)
      throw std::domain_error("von_neumann_entropy: negative eigenvalue");
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return std::max(entropy, 0.0);
}

}  // namespace qsc
