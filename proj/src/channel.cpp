#include "qsc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsc {

std::string to_string(ChannelFamily family) {
  return family == ChannelFamily::AD ? "ad" : "rtn";
}

std::string to_string(WhichUnitary which) {
  return which == WhichUnitary::U0 ? "u0" : "u1";
}

ChannelFamily channel_family_from_string(const std::string& s) {
  if (s == "ad") return ChannelFamily::AD;
  if (s == "rtn") return ChannelFamily::RTN;
  throw std::invalid_argument("unknown channel family: " + s);
}

WhichUnitary which_unitary_from_string(const std::string& s) {
  if (s == "u0") return WhichUnitary::U0;
  if (s == "u1") return WhichUnitary::U1;
  throw std::invalid_argument("unknown unitary selector: " + s);
}

ADParams::ADParams(double alpha, double beta) : alpha(alpha), beta(beta) {
  if (alpha * beta > 0.0)
    throw std::domain_error(
        "ADParams: alpha*beta must be <= 0 so that n_f stays in [0, 1)");
}

ADParams ADParams::from_nf(double nf) {
  if (nf < 0.0 || nf > 1.0)
    throw std::domain_error("ADParams::from_nf: n_f must be in [0, 1]");
  ADParams p;
  p.nf_override = nf;
  return p;
}

double ADParams::nf() const {
  if (nf_override) return *nf_override;
  return 1.0 - std::exp(alpha * beta);
}

RTNParams::RTNParams(double gamma, double omega, double t)
    : gamma(gamma), omega(omega), t(t) {
  if (gamma < 0.0) throw std::domain_error("RTNParams: gamma must be >= 0");
  if (omega <= 0.0) throw std::domain_error("RTNParams: omega must be > 0");
  if (t < 0.0) throw std::domain_error("RTNParams: t must be >= 0");
}

double RTNParams::noise_p() const {
  const double gt = gamma * t;
  const double p =
      std::exp(-gt) * (std::cos(omega * gt) + std::sin(omega * gt) / omega);
  return std::clamp(p, -1.0, 1.0);
}

double RTNParams::q0() const { return 0.5 * (1.0 + noise_p()); }

double RTNParams::q1() const { return 1.0 - q0(); }

KrausPair KrausPair::checked(ComplexMatrix k0, ComplexMatrix k1) {
  const ComplexMatrix sum = k0.dagger() * k0 + k1.dagger() * k1;
  if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-12)
    throw std::logic_error("KrausPair: completeness relation violated");
  return KrausPair{std::move(k0), std::move(k1)};
}

KrausPair ad_kraus(const ADParams& params) {
  const double nf = params.nf();
  if (nf < 0.0 || nf > 1.0)
    throw std::domain_error("ad_kraus: n_f outside [0, 1]");
  ComplexMatrix k0{{1.0, 0.0}, {0.0, std::sqrt(nf)}};
  ComplexMatrix k1{{0.0, std::sqrt(1.0 - nf)}, {0.0, 0.0}};
  return KrausPair::checked(std::move(k0), std::move(k1));
}

KrausPair rtn_kraus(const RTNParams& params) {
  const double r0 = std::sqrt(params.q0());
  const double r1 = std::sqrt(params.q1());
  ComplexMatrix k0{{r0, 0.0}, {0.0, r0}};
  ComplexMatrix k1{{r1, 0.0}, {0.0, -r1}};
  return KrausPair::checked(std::move(k0), std::move(k1));
}

ComplexMatrix dilate_matrix(const ComplexMatrix& k) {
  if (k.rows() != 2 || k.cols() != 2)
    throw std::invalid_argument("dilate_matrix: expected a 2x2 operator");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix kd = k.dagger();
  const ComplexMatrix lower = sqrt_psd_2x2(id - kd * k);  // sqrt(I - k^dag k)
  const ComplexMatrix upper = sqrt_psd_2x2(id - k * kd);  // sqrt(I - k k^dag)

  ComplexMatrix u(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      u(i, j) = k(i, j);
      u(i, j + 2) = upper(i, j);
      u(i + 2, j) = lower(i, j);
      u(i + 2, j + 2) = -kd(i, j);
    }
  if (!is_unitary(u, 1e-12))
    throw std::logic_error("dilate_matrix: result failed unitarity check");
  return u;
}

DilatedUnitary dilate(ChannelFamily family, WhichUnitary which,
                      const ChannelParams& params) {
  DilatedUnitary out;
  out.params = params;
  if (family == ChannelFamily::AD) {
    const auto& p = std::get<ADParams>(params);
    const KrausPair kraus = ad_kraus(p);
    if (which == WhichUnitary::U0) {
      out.source = DilationSource::AD0;
      out.matrix = dilate_matrix(kraus.k0);
    } else {
      out.source = DilationSource::AD1;
      out.matrix = dilate_matrix(kraus.k1);
    }
  } else {
    const auto& p = std::get<RTNParams>(params);
    const KrausPair kraus = rtn_kraus(p);
    if (which == WhichUnitary::U0) {
      out.source = DilationSource::RTN0;
      out.matrix = dilate_matrix(kraus.k0);
    } else {
      out.source = DilationSource::RTN1;
      out.matrix = dilate_matrix(kraus.k1);
    }
  }
  return out;
}

std::string to_string(DilationSource source) {
  switch (source) {
    case DilationSource::AD0:
      return "AD0";
    case DilationSource::AD1:
      return "AD1";
    case DilationSource::RTN0:
      return "RTN0";
    case DilationSource::RTN1:
      return "RTN1";
  }
  return "?";
}

double entangling_check(const DilatedUnitary& u, const StateVector& probe) {
  if (probe.num_qubits != 2)
    throw std::invalid_argument("entangling_check: probe must have 2 qubits");
  const double probe_entropy = von_neumann_entropy(partial_trace(probe, {0}));
  if (probe_entropy > 1e-8)
    throw std::invalid_argument("entangling_check: probe is not a product state");
  const StateVector out = apply_gate(probe, u.matrix, {0, 1});
  return von_neumann_entropy(partial_trace(out, {0}));
}

}  // namespace qsc
