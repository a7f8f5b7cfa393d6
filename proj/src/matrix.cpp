#include "qsc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cdouble(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cdouble>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

cdouble ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  cdouble t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

static void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                             const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "operator+");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "operator-");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("operator*: inner dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(cdouble scale, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scale * a(i, j);
  return out;
}

std::vector<cdouble> operator*(const ComplexMatrix& a,
                               const std::vector<cdouble>& v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("operator*: vector dimension mismatch");
  std::vector<cdouble> out(a.rows(), cdouble(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a.dagger() * a,
                      ComplexMatrix::identity(a.rows())) <= tol;
}

static std::vector<double> eig2_hermitian(const ComplexMatrix& a) {
  const double p = a(0, 0).real();
  const double q = a(1, 1).real();
  const double od = std::abs(a(0, 1));
  const double mean = 0.5 * (p + q);
  const double disc = std::hypot(0.5 * (p - q), od);
  return {mean - disc, mean + disc};
}

// Cyclic Jacobi for complex Hermitian matrices, eigenvalues only. Each pivot
// (p, q) is diagonalized by V = diag(u, 1) * Givens(theta) where u is the
// phase of A[p][q], reducing the pivot block to the real symmetric case.
static std::vector<double> jacobi_hermitian(ComplexMatrix a) {
  const std::size_t n = a.rows();
  double scale = 0.0;
  for (const auto& x : a.data()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return std::vector<double>(n, 0.0);
  const double stop = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        off = std::max(off, std::abs(a(p, q)));
    if (off <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= stop * 1e-2) continue;
        const cdouble u = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Rows: A <- V^dagger A with V[p][p]=u*c, V[p][q]=-u*s, V[q][p]=s,
        // V[q][q]=c embedded in the identity.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble rp = a(p, k);
          const cdouble rq = a(q, k);
          a(p, k) = std::conj(u) * c * rp + s * rq;
          a(q, k) = -std::conj(u) * s * rp + c * rq;
        }
        // Columns: A <- A V.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble cp = a(k, p);
          const cdouble cq = a(k, q);
          a(k, p) = u * c * cp + s * cq;
          a(k, q) = -u * s * cp + c * cq;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  if (!is_hermitian(a, 1e-10))
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  if (a.rows() == 1) return {a(0, 0).real()};
  if (a.rows() == 2) return eig2_hermitian(a);
  return jacobi_hermitian(a);
}

ComplexMatrix sqrt_psd_2x2(const ComplexMatrix& a, double psd_tol) {
  if (a.rows() != 2 || a.cols() != 2)
    throw std::invalid_argument("sqrt_psd_2x2: expected 2x2 matrix");
  if (!is_hermitian(a, 1e-10))
    throw std::invalid_argument("sqrt_psd_2x2: matrix not Hermitian");
  const auto eig = eig2_hermitian(a);
  if (eig[0] < -psd_tol)
    throw std::domain_error("sqrt_psd_2x2: matrix not PSD");
  // sqrt(A) = (A + sqrt(det) I) / sqrt(tr + 2 sqrt(det)) for PSD Hermitian A.
  const double det =
      std::max(0.0, a(0, 0).real() * a(1, 1).real() - std::norm(a(0, 1)));
  const double tr = std::max(0.0, a(0, 0).real() + a(1, 1).real());
  const double s = std::sqrt(det);
  const double t = std::sqrt(tr + 2.0 * s);
  if (t == 0.0) return ComplexMatrix(2, 2);
  ComplexMatrix out = a;
  out(0, 0) += s;
  out(1, 1) += s;
  return cdouble(1.0 / t, 0.0) * out;
}

}  // namespace qsc
