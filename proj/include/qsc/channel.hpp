#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qsc/matrix.hpp"
#include "qsc/statevector.hpp"

namespace qsc {

enum class ChannelFamily { AD, RTN };
enum class WhichUnitary { U0, U1 };

std::string to_string(ChannelFamily family);
std::string to_string(WhichUnitary which);
ChannelFamily channel_family_from_string(const std::string& s);
WhichUnitary which_unitary_from_string(const std::string& s);

/// Amplitude-damping channel parameters. The decay weight is
/// n_f = 1 - exp(alpha * beta), which requires alpha * beta <= 0 to stay in
/// [0, 1). Tests may pin n_f directly via from_nf.
struct ADParams {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> nf_override;

  ADParams() = default;
  ADParams(double alpha, double beta);
  static ADParams from_nf(double nf);

  double nf() const;
};

/// Random-telegraph-noise channel parameters. The memory kernel
/// p(t) = exp(-gamma t) (cos(omega gamma t) + sin(omega gamma t) / omega)
/// is clamped to [-1, 1] before forming the branch weights q0, q1.
struct RTNParams {
  double gamma = 0.0;
  double omega = 1.0;
  double t = 0.0;

  RTNParams() = default;
  RTNParams(double gamma, double omega, double t);

  double noise_p() const;
  double q0() const;
  double q1() const;  // exact complement of q0, so q0 + q1 == 1
};

using ChannelParams = std::variant<ADParams, RTNParams>;

/// Pair of 2x2 Kraus operators; construction checks completeness
/// k0^dag k0 + k1^dag k1 = I within 1e-12.
struct KrausPair {
  ComplexMatrix k0;
  ComplexMatrix k1;

  static KrausPair checked(ComplexMatrix k0, ComplexMatrix k1);
};

KrausPair ad_kraus(const ADParams& params);
KrausPair rtn_kraus(const RTNParams& params);

enum class DilationSource { AD0, AD1, RTN0, RTN1 };

std::string to_string(DilationSource source);

/// Two-qubit unitary embedding a single-qubit contraction k as its top-left
/// block. Basis order is |a s> with the dilation qubit a as the most
/// significant bit:
///
///   U = [ k                    sqrt(I - k k^dag) ]
///       [ sqrt(I - k^dag k)    -k^dag            ]
struct DilatedUnitary {
  ComplexMatrix matrix;
  DilationSource source = DilationSource::AD0;
  ChannelParams params;
};

/// Core dilation of an arbitrary 2x2 contraction (I - k^dag k and
/// I - k k^dag PSD within 1e-10). The result is unitary within 1e-12.
ComplexMatrix dilate_matrix(const ComplexMatrix& k);

/// Dilates the selected Kraus operator of the given channel.
DilatedUnitary dilate(ChannelFamily family, WhichUnitary which,
                      const ChannelParams& params);

/// Entropy (bits) of qubit 0 after applying u to a two-qubit product probe.
/// Throws if the probe is already entangled (entropy > 1e-8).
double entangling_check(const DilatedUnitary& u, const StateVector& probe);

}  // namespace qsc
