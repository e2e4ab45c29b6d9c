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

#include "ncp/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ncp/random.hpp"

namespace ncp {

namespace {

void check_kraus_shapes(const std::vector<ComplexMatrix> &family, std::size_t dim_in, std::size_t dim_out,
                        const char *which) {
    for (std::size_t i = 0; i < family.size(); i++) {
        const auto &m = family[i];
        if (m.rows() != dim_out || m.cols() != dim_in) {
            std::ostringstream msg;
            msg << "ElementaryOperator: " << which << " Kraus matrix " << i << " is " << m.rows() << "x" << m.cols()
                << ", expected " << dim_out << "x" << dim_in;
            throw DimensionError(msg.str());
        }
    }
}

// Columns K_i·ψ for each Kraus matrix.
ComplexMatrix kraus_columns(const std::vector<ComplexMatrix> &family, std::span<const Complex> psi,
                            std::size_t dim_out) {
    ComplexMatrix out(dim_out, family.size());
    for (std::size_t c = 0; c < family.size(); c++) {
        auto col = apply(family[c], psi);
        for (std::size_t r = 0; r < dim_out; r++) {
            out(r, c) = col[r];
        }
    }
    return out;
}

// Columns vec(K_i), row-major flattening of each Kraus matrix.
ComplexMatrix stacked_kraus(const std::vector<ComplexMatrix> &family, std::size_t dim_in, std::size_t dim_out) {
    ComplexMatrix out(dim_in * dim_out, family.size());
    for (std::size_t c = 0; c < family.size(); c++) {
        auto entries = family[c].entries();
        for (std::size_t r = 0; r < entries.size(); r++) {
            out(r, c) = entries[r];
        }
    }
    return out;
}

// Minimum-norm solution of plus·K = minus, with Ω = Kᵀ.
LocalCoefficientResult solve_contraction(const ComplexMatrix &plus, const ComplexMatrix &minus, double tol) {
    LocalCoefficientResult r;
    const std::size_t k = plus.cols();
    const std::size_t l = minus.cols();
    if (l == 0) {
        r.feasible = true;
        r.omega = ComplexMatrix(0, k);
        return r;
    }
    double scale = std::max(1.0, frobenius_norm(minus));
    if (k == 0) {
        r.omega = ComplexMatrix(l, 0);
        r.residual = frobenius_norm(minus);
        r.feasible = r.residual <= tol * scale;
        return r;
    }
    ComplexMatrix coeffs = matmul(pseudo_inverse(plus), minus);
    r.residual = frobenius_norm(matmul(plus, coeffs) - minus);
    r.omega = transpose(coeffs);
    r.operator_norm = operator_norm(r.omega);
    r.feasible = r.residual <= tol * scale && r.operator_norm <= 1.0 + tol;
    return r;
}

}  // namespace

ElementaryOperator::ElementaryOperator(std::size_t dim_in, std::size_t dim_out,
                                       std::vector<ComplexMatrix> plus_kraus,
                                       std::vector<ComplexMatrix> minus_kraus, std::string label)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      plus_(std::move(plus_kraus)),
      minus_(std::move(minus_kraus)),
      label_(std::move(label)) {
    if (dim_in_ == 0 || dim_out_ == 0) {
        throw DimensionError("ElementaryOperator: dimensions must be positive");
    }
    check_kraus_shapes(plus_, dim_in_, dim_out_, "plus");
    check_kraus_shapes(minus_, dim_in_, dim_out_, "minus");
}

ElementaryOperator identity_map(std::size_t n) {
    return {n, n, {ComplexMatrix::identity(n)}, {}, "identity"};
}

ComplexMatrix apply(const ElementaryOperator &phi, const ComplexMatrix &x) {
    if (x.rows() != phi.dim_in() || x.cols() != phi.dim_in()) {
        std::ostringstream msg;
        msg << "apply: map '" << phi.label() << "' acts on " << phi.dim_in() << "x" << phi.dim_in()
            << " matrices, got " << x.rows() << "x" << x.cols();
        throw DimensionError(msg.str());
    }
    ComplexMatrix out(phi.dim_out(), phi.dim_out());
    for (const auto &a : phi.plus_kraus()) {
        out += matmul(matmul(a, x), dagger(a));
    }
    for (const auto &c : phi.minus_kraus()) {
        out -= matmul(matmul(c, x), dagger(c));
    }
    return out;
}

ComplexMatrix choi_matrix(const ElementaryOperator &phi) {
    const std::size_t n = phi.dim_in();
    const std::size_t m = phi.dim_out();
    ComplexMatrix choi(n * m, n * m);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            ComplexMatrix block = apply(phi, ComplexMatrix::unit(n, n, i, j));
            for (std::size_t k = 0; k < m; k++) {
                for (std::size_t l = 0; l < m; l++) {
                    choi(i * m + k, j * m + l) = block(k, l);
                }
            }
        }
    }
    return choi;
}

CpResult is_completely_positive(const ElementaryOperator &phi, double tol) {
    auto psd = is_psd(choi_matrix(phi), tol);
    // All-plus Kraus forms are CP by construction.
    return {phi.minus_kraus().empty() || psd.psd, psd.min_eigenvalue};
}

FalsifierResult positivity_falsifier(const ElementaryOperator &phi, std::size_t samples, std::uint64_t seed,
                                     double tol, const std::vector<std::vector<Complex>> &candidates) {
    FalsifierResult result;
    result.min_eigenvalue = std::numeric_limits<double>::infinity();
    auto try_vector = [&](const std::vector<Complex> &psi) {
        ComplexMatrix image = apply(phi, projector(psi));
        double lo = hermitian_eigenvalues(image, std::max(tol, 1e-9)).front();
        result.evaluated++;
        result.min_eigenvalue = std::min(result.min_eigenvalue, lo);
        if (lo < -tol) {
            result.witness = psi;
            result.min_eigenvalue = lo;
            return true;
        }
        return false;
    };
    for (const auto &c : candidates) {
        if (c.size() != phi.dim_in()) {
            throw DimensionError("positivity_falsifier: candidate vector has wrong length");
        }
        double norm = vector_norm(c);
        if (norm == 0) {
            continue;
        }
        std::vector<Complex> unit = c;
        for (auto &z : unit) {
            z /= norm;
        }
        if (try_vector(unit)) {
            return result;
        }
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; s++) {
        if (try_vector(rng.haar_unit_vector(phi.dim_in()))) {
            return result;
        }
    }
    return result;
}

LocalCoefficientResult local_combination_check(const ElementaryOperator &phi, std::span<const Complex> psi,
                                               double tol) {
    if (psi.size() != phi.dim_in()) {
        throw DimensionError("local_combination_check: vector length does not match dim_in");
    }
    double norm = vector_norm(psi);
    if (std::abs(norm - 1.0) > tol) {
        std::ostringstream msg;
        msg << "local_combination_check: psi must be a unit vector (norm " << norm << ")";
        throw InvariantError(msg.str());
    }
    ComplexMatrix plus = kraus_columns(phi.plus_kraus(), psi, phi.dim_out());
    ComplexMatrix minus = kraus_columns(phi.minus_kraus(), psi, phi.dim_out());
    LocalCoefficientResult r = solve_contraction(plus, minus, tol);

    ComplexMatrix gap = matmul(plus, dagger(plus)) - matmul(minus, dagger(minus));
    double lo = hermitian_eigenvalues(gap, std::max(tol, 1e-9)).front();
    r.psd_min_eigenvalue = lo;

    double scale = std::max(1.0, std::pow(operator_norm(plus), 2));
    bool contradiction = (r.feasible && lo < -10 * tol * scale) || (!r.feasible && lo > tol * scale);
    if (contradiction) {
        std::ostringstream msg;
        msg << "local_combination_check: coefficient test (feasible=" << r.feasible << ", norm " << r.operator_norm
            << ", residual " << r.residual << ") disagrees with PSD test (min eigenvalue " << lo << ")";
        throw std::logic_error(msg.str());
    }
    return r;
}

LocalCoefficientResult contractive_linear_combination_check(const ElementaryOperator &phi, double tol) {
    return solve_contraction(stacked_kraus(phi.plus_kraus(), phi.dim_in(), phi.dim_out()),
                             stacked_kraus(phi.minus_kraus(), phi.dim_in(), phi.dim_out()), tol);
}

FilterReport ncp_quick_filters(const ElementaryOperator &phi, std::size_t samples, std::uint64_t seed) {
    FilterReport f;
    f.plus_count = phi.plus_kraus().size();
    f.minus_count = phi.minus_kraus().size();
    f.few_plus_terms = f.plus_count <= 2;
    f.ncp_possible = f.plus_count >= 3;
    if (f.plus_count == 0) {
        return f;
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; s++) {
        auto psi = rng.haar_unit_vector(phi.dim_in());
        std::size_t r = rank(kraus_columns(phi.plus_kraus(), psi, phi.dim_out()));
        f.max_sampled_rank = std::max(f.max_sampled_rank, r);
        if (r == f.plus_count) {
            f.independent_at_sample = true;
            break;
        }
    }
    return f;
}

ComplexMatrix projection_range(const ComplexMatrix &p, double tol) {
    if (!p.is_square()) {
        throw DimensionError("projection_range: projection must be square");
    }
    if (hermiticity_defect(p) > tol || max_abs_diff(matmul(p, p), p) > tol) {
        throw InvariantError("projection_range: matrix is not an orthogonal projection (P^2 = P = P^dagger)");
    }
    EigenResult eig = hermitian_eig(p, tol);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < eig.values.size(); k++) {
        if (eig.values[k] > 0.5) {
            keep.push_back(k);
        }
    }
    if (keep.empty()) {
        throw InvariantError("projection_range: projection is zero");
    }
    ComplexMatrix basis(p.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); c++) {
        for (std::size_t i = 0; i < p.rows(); i++) {
            basis(i, c) = eig.vectors(i, keep[c]);
        }
    }
    return basis;
}

ElementaryOperator compress(const ElementaryOperator &phi, const ComplexMatrix &p, const ComplexMatrix &q,
                            double tol) {
    if (p.rows() != phi.dim_in() || q.rows() != phi.dim_out()) {
        throw DimensionError("compress: projections do not match the map's dimensions");
    }
    ComplexMatrix vp = projection_range(p, tol);
    ComplexMatrix vq_dag = dagger(projection_range(q, tol));
    auto restrict = [&](const std::vector<ComplexMatrix> &family) {
        std::vector<ComplexMatrix> out;
        out.reserve(family.size());
        for (const auto &k : family) {
            out.push_back(matmul(matmul(vq_dag, k), vp));
        }
        return out;
    };
    return {vp.cols(), vq_dag.rows(), restrict(phi.plus_kraus()), restrict(phi.minus_kraus()),
            phi.label() + "|compressed"};
}

}  // namespace ncp
