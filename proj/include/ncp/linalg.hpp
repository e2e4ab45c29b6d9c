// Copyright 2026 The ncp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCP_LINALG_HPP
#define NCP_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncp {

using Complex = std::complex<double>;

/// Default absolute tolerance for Hermiticity and eigenvalue sign decisions.
inline constexpr double kDefaultTol = 1e-9;

/// Shapes of operands do not fit the requested operation.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A value violates a documented invariant (non-Hermitian, non-PSD, bad trace, ...).
class InvariantError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix.
///
/// Zero-sized shapes are allowed so that empty coefficient matrices (for
/// maps without negative Kraus terms) can be represented; every entry is
/// finite.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// The matrix unit E_ij of the given shape (0-based indices).
    static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    /// Column vector from entries.
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Complex> entries() const { return entries_; }
    std::vector<Complex> column_vector(std::size_t j) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Standard product; throws DimensionError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
ComplexMatrix conjugate(const ComplexMatrix &a);

/// Kronecker product, result[(i*b.rows()+k),(j*b.cols()+l)] = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Applies x ↦ m·v for a vector v.
std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> v);

Complex trace(const ComplexMatrix &a);
double max_abs(const ComplexMatrix &a);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &a);
double vector_norm(std::span<const Complex> v);

/// Largest entrywise deviation from Hermiticity, max |a_ij - conj(a_ji)|.
double hermiticity_defect(const ComplexMatrix &a);

struct EigenResult {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are orthonormal eigenvectors
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Throws DimensionError for non-square input and InvariantError when
/// hermiticity_defect(a) > tol. Within a degenerate cluster the order of
/// eigenvectors is unspecified, though deterministic for identical input.
EigenResult hermitian_eig(const ComplexMatrix &a, double tol = kDefaultTol);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol = kDefaultTol);

struct SvdResult {
    std::vector<double> values;  // descending, length min(rows, cols)
    ComplexMatrix u;             // rows × r; columns for zero singular values are zero
    ComplexMatrix v;             // cols × r
};

/// Thin singular value decomposition a = u·diag(values)·v† (one-sided Jacobi).
SvdResult svd(const ComplexMatrix &a);
std::vector<double> singular_values(const ComplexMatrix &a);
double trace_norm(const ComplexMatrix &a);
double operator_norm(const ComplexMatrix &a);

/// Numerical rank from singular values above rel_tol·σ_max.
std::size_t rank(const ComplexMatrix &a, double rel_tol = 1e-10);

/// Moore-Penrose pseudoinverse; singular values below rel_tol·σ_max are dropped.
ComplexMatrix pseudo_inverse(const ComplexMatrix &a, double rel_tol = 1e-12);

struct PsdResult {
    bool psd = false;
    double min_eigenvalue = 0.0;
};

/// psd iff the smallest eigenvalue is ≥ -tol.
PsdResult is_psd(const ComplexMatrix &a, double tol = kDefaultTol);

std::string to_string(const ComplexMatrix &a, int precision = 6);

}  // namespace ncp

#endif  // NCP_LINALG_HPP
