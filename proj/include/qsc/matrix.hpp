#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qsc {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is a
/// few-qubit operator, so dimensions stay at or below 256.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const cdouble& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cdouble>& data() const { return data_; }

  /// Conjugate transpose.
  ComplexMatrix dagger() const;

  cdouble trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble scale, const ComplexMatrix& a);
std::vector<cdouble> operator*(const ComplexMatrix& a,
                               const std::vector<cdouble>& v);

/// Kronecker product; the first factor indexes the most significant block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);

/// Eigenvalues of a Hermitian matrix, ascending. Closed form for dim <= 2,
/// cyclic Jacobi sweeps otherwise.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Principal square root of a 2x2 Hermitian PSD matrix. Eigenvalues may dip
/// below zero by at most psd_tol (clamped); anything worse throws.
ComplexMatrix sqrt_psd_2x2(const ComplexMatrix& a, double psd_tol = 1e-10);

}  // namespace qsc
