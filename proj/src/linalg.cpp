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

#include "ncp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ncp {

namespace {

constexpr int kMaxSweeps = 100;

std::string shape(const ComplexMatrix &a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Off-diagonal Frobenius norm squared.
double off_diagonal_sq(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

// Rotation parameters (c, s) that annihilate the off-diagonal entry of the
// real symmetric 2x2 [[app, apq], [apq, aqq]] with apq > 0.
void jacobi_angle(double app, double aqq, double apq, double &c, double &s) {
    double theta = (aqq - app) / (2 * apq);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0) {
        t = -t;
    }
    c = 1.0 / std::sqrt(t * t + 1.0);
    s = t * c;
}

// Column update X <- X·U for the unitary U with U_pp = c, U_pq = s,
// U_qp = -s·conj(e), U_qq = c·conj(e).
void rotate_columns(ComplexMatrix &x, std::size_t p, std::size_t q, double c, double s, Complex e) {
    Complex ec = std::conj(e);
    for (std::size_t k = 0; k < x.rows(); k++) {
        Complex xp = x(k, p);
        Complex xq = x(k, q);
        x(k, p) = c * xp - s * ec * xq;
        x(k, q) = s * xp + c * ec * xq;
    }
}

// Row update X <- U†·X for the same U.
void rotate_rows(ComplexMatrix &x, std::size_t p, std::size_t q, double c, double s, Complex e) {
    for (std::size_t k = 0; k < x.cols(); k++) {
        Complex xp = x(p, k);
        Complex xq = x(q, k);
        x(p, k) = c * xp - s * e * xq;
        x(q, k) = s * xp + c * e * xq;
    }
}

// One-sided Jacobi on the columns of g (rows >= cols). Accumulates the
// right rotations into v.
void one_sided_jacobi(ComplexMatrix &g, ComplexMatrix &v) {
    const std::size_t n = g.cols();
    const double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double alpha = 0;
                double beta = 0;
                Complex gamma = 0;
                for (std::size_t k = 0; k < g.rows(); k++) {
                    alpha += std::norm(g(k, p));
                    beta += std::norm(g(k, q));
                    gamma += std::conj(g(k, p)) * g(k, q);
                }
                double mag = std::abs(gamma);
                if (mag == 0 || mag <= eps * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double c = 0;
                double s = 0;
                jacobi_angle(alpha, beta, mag, c, s);
                Complex e = gamma / mag;
                rotate_columns(g, p, q, c, s, e);
                rotate_columns(v, p, q, c, s, e);
            }
        }
        if (!rotated) {
            return;
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0, 0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!is_finite(z)) {
            throw InvariantError("ComplexMatrix: entries must be finite");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    if (i >= rows || j >= cols) {
        throw DimensionError("ComplexMatrix::unit: index out of range");
    }
    ComplexMatrix m(rows, cols);
    m(i, j) = 1;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return {values.size(), 1, std::vector<Complex>(values.begin(), values.end())};
}

std::vector<Complex> ComplexMatrix::column_vector(std::size_t j) const {
    std::vector<Complex> out(rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        out[i] = (*this)(i, j);
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ, " + shape(a) + " * " + shape(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex aik = a(i, k);
            if (aik == Complex{0, 0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            out(i, j) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> apply(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw DimensionError("apply: matrix " + shape(m) + " on vector of length " + std::to_string(v.size()));
    }
    std::vector<Complex> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        for (std::size_t j = 0; j < m.cols(); j++) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("trace: matrix is " + shape(a));
    }
    Complex t = 0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        t += a(i, i);
    }
    return t;
}

double max_abs(const ComplexMatrix &a) {
    double m = 0;
    for (const auto &z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t k = 0; k < a.entries().size(); k++) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

double frobenius_norm(const ComplexMatrix &a) { return vector_norm(a.entries()); }

double vector_norm(std::span<const Complex> v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw DimensionError("hermiticity_defect: matrix is " + shape(a));
    }
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = i; j < a.cols(); j++) {
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return m;
}

EigenResult hermitian_eig(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        throw DimensionError("hermitian_eig: matrix is " + shape(a));
    }
    double defect = hermiticity_defect(a);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "hermitian_eig: matrix is not Hermitian (defect " << defect << " > " << tol << ")";
        throw InvariantError(msg.str());
    }
    const std::size_t n = a.rows();
    ComplexMatrix w = 0.5 * (a + dagger(a));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm_sq = std::pow(frobenius_norm(w), 2);
    const double target_sq = std::pow(1e-15, 2) * norm_sq;
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = off_diagonal_sq(w);
        if (off <= target_sq || off == 0) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex apq = w(p, q);
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                double app = w(p, p).real();
                double aqq = w(q, q).real();
                double c = 0;
                double s = 0;
                jacobi_angle(app, aqq, mag, c, s);
                Complex e = apq / mag;
                rotate_columns(w, p, q, c, s, e);
                rotate_rows(w, p, q, c, s, e);
                rotate_columns(v, p, q, c, s, e);
                w(p, q) = 0;
                w(q, p) = 0;
                w(p, p) = w(p, p).real();
                w(q, q) = w(q, q).real();
            }
        }
    }
    if (off_diagonal_sq(w) > std::pow(1e-12, 2) * norm_sq) {
        throw std::runtime_error("hermitian_eig: Jacobi iteration did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return w(x, x).real() < w(y, y).real(); });
    EigenResult result;
    result.values.reserve(n);
    result.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; k++) {
        result.values.push_back(w(order[k], order[k]).real());
        for (std::size_t i = 0; i < n; i++) {
            result.vectors(i, k) = v(i, order[k]);
        }
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    return hermitian_eig(a, tol).values;
}

SvdResult svd(const ComplexMatrix &a) {
    if (a.rows() < a.cols()) {
        SvdResult t = svd(dagger(a));
        return {std::move(t.values), std::move(t.v), std::move(t.u)};
    }
    const std::size_t n = a.cols();
    ComplexMatrix g = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    one_sided_jacobi(g, v);

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; j++) {
        norms[j] = vector_norm(g.column_vector(j));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdResult result;
    result.u = ComplexMatrix(a.rows(), n);
    result.v = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; k++) {
        std::size_t j = order[k];
        double sigma = norms[j];
        result.values.push_back(sigma);
        for (std::size_t i = 0; i < a.rows(); i++) {
            result.u(i, k) = sigma > 0 ? g(i, j) / sigma : Complex{0, 0};
        }
        for (std::size_t i = 0; i < n; i++) {
            result.v(i, k) = v(i, j);
        }
    }
    return result;
}

std::vector<double> singular_values(const ComplexMatrix &a) { return svd(a).values; }

double trace_norm(const ComplexMatrix &a) {
    auto s = singular_values(a);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

double operator_norm(const ComplexMatrix &a) {
    auto s = singular_values(a);
    return s.empty() ? 0.0 : s.front();
}

std::size_t rank(const ComplexMatrix &a, double rel_tol) {
    auto s = singular_values(a);
    if (s.empty() || s.front() == 0) {
        return 0;
    }
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](double x) { return x > rel_tol * s.front(); }));
}

ComplexMatrix pseudo_inverse(const ComplexMatrix &a, double rel_tol) {
    SvdResult d = svd(a);
    ComplexMatrix out(a.cols(), a.rows());
    if (d.values.empty() || d.values.front() == 0) {
        return out;
    }
    double cutoff = rel_tol * d.values.front();
    for (std::size_t k = 0; k < d.values.size(); k++) {
        if (d.values[k] <= cutoff) {
            continue;
        }
        double inv = 1.0 / d.values[k];
        for (std::size_t i = 0; i < a.cols(); i++) {
            Complex vik = d.v(i, k) * inv;
            for (std::size_t j = 0; j < a.rows(); j++) {
                out(i, j) += vik * std::conj(d.u(j, k));
            }
        }
    }
    return out;
}

PsdResult is_psd(const ComplexMatrix &a, double tol) {
    auto values = hermitian_eigenvalues(a, tol);
    PsdResult r;
    r.min_eigenvalue = values.empty() ? 0.0 : values.front();
    r.psd = r.min_eigenvalue >= -tol;
    return r;
}

std::string to_string(const ComplexMatrix &a, int precision) {
    std::ostringstream out;
    out.precision(precision);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            Complex z = a(i, j);
            if (j > 0) {
                out << "  ";
            }
            out << z.real();
            if (z.imag() != 0) {
                out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace ncp
