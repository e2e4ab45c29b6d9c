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

#include "ncp/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncp/random.hpp"

namespace ncp {

namespace {

void require_bipartite_shape(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b, const char *op) {
    if (dim_a == 0 || dim_b == 0) {
        throw DimensionError(std::string(op) + ": factor dimensions must be positive");
    }
    if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
        std::ostringstream msg;
        msg << op << ": matrix is " << rho.rows() << "x" << rho.cols() << ", expected " << dim_a * dim_b << "x"
            << dim_a * dim_b << " for " << dim_a << "x" << dim_b << " factors";
        throw DimensionError(msg.str());
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) { return 0.5 * (m + dagger(m)); }

ComplexMatrix wishart_density(Rng &rng, std::size_t dim) {
    ComplexMatrix g = rng.gaussian_matrix(dim, dim);
    ComplexMatrix w = hermitian_part(matmul(g, dagger(g)));
    return (1.0 / trace(w).real()) * w;
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view text) {
    if (text == "left") {
        return Side::Left;
    }
    if (text == "right") {
        return Side::Right;
    }
    throw std::invalid_argument("side must be 'left' or 'right', got '" + std::string(text) + "'");
}

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix, double tol)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
    require_bipartite_shape(matrix_, dim_a_, dim_b_, "BipartiteState");
    std::ostringstream msg;
    msg.precision(12);
    double defect = hermiticity_defect(matrix_);
    if (defect > tol) {
        msg << "state invariant violated: matrix is not Hermitian (defect " << defect << ", tol " << tol << ")";
        throw InvariantError(msg.str());
    }
    Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1, 0}) > tol) {
        msg << "state invariant violated: trace is " << tr.real() << ", expected 1 (tol " << tol << ")";
        throw InvariantError(msg.str());
    }
    auto psd = is_psd(matrix_, tol);
    if (!psd.psd) {
        msg << "state invariant violated: matrix is not positive semidefinite (min eigenvalue " << psd.min_eigenvalue
            << ", tol " << tol << ")";
        throw InvariantError(msg.str());
    }
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b, Side side) {
    require_bipartite_shape(rho, dim_a, dim_b, "partial_transpose");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t ia = 0; ia < dim_a; ia++) {
        for (std::size_t ib = 0; ib < dim_b; ib++) {
            for (std::size_t ja = 0; ja < dim_a; ja++) {
                for (std::size_t jb = 0; jb < dim_b; jb++) {
                    Complex v = side == Side::Right ? rho(ia * dim_b + jb, ja * dim_b + ib)
                                                    : rho(ja * dim_b + ib, ia * dim_b + jb);
                    out(ia * dim_b + ib, ja * dim_b + jb) = v;
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const BipartiteState &rho, Side side) {
    return partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b(), side);
}

ComplexMatrix realign(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b) {
    require_bipartite_shape(rho, dim_a, dim_b, "realign");
    ComplexMatrix out(dim_a * dim_a, dim_b * dim_b);
    for (std::size_t i = 0; i < dim_a; i++) {
        for (std::size_t j = 0; j < dim_a; j++) {
            for (std::size_t k = 0; k < dim_b; k++) {
                for (std::size_t l = 0; l < dim_b; l++) {
                    out(i * dim_a + j, k * dim_b + l) = rho(i * dim_b + k, j * dim_b + l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix realign(const BipartiteState &rho) { return realign(rho.matrix(), rho.dim_a(), rho.dim_b()); }

ComplexMatrix apply_map_side(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b,
                             const ElementaryOperator &phi, Side side) {
    require_bipartite_shape(rho, dim_a, dim_b, "apply_map_side");
    const std::size_t acted = side == Side::Right ? dim_b : dim_a;
    if (phi.dim_in() != acted) {
        std::ostringstream msg;
        msg << "apply_map_side: map '" << phi.label() << "' has input dimension " << phi.dim_in() << " but the "
            << to_string(side) << " factor has dimension " << acted;
        throw DimensionError(msg.str());
    }
    const std::size_t m = phi.dim_out();
    if (side == Side::Right) {
        ComplexMatrix out(dim_a * m, dim_a * m);
        ComplexMatrix block(dim_b, dim_b);
        for (std::size_t i = 0; i < dim_a; i++) {
            for (std::size_t j = 0; j < dim_a; j++) {
                for (std::size_t k = 0; k < dim_b; k++) {
                    for (std::size_t l = 0; l < dim_b; l++) {
                        block(k, l) = rho(i * dim_b + k, j * dim_b + l);
                    }
                }
                ComplexMatrix image = apply(phi, block);
                for (std::size_t k = 0; k < m; k++) {
                    for (std::size_t l = 0; l < m; l++) {
                        out(i * m + k, j * m + l) = image(k, l);
                    }
                }
            }
        }
        return out;
    }
    ComplexMatrix out(m * dim_b, m * dim_b);
    ComplexMatrix block(dim_a, dim_a);
    for (std::size_t k = 0; k < dim_b; k++) {
        for (std::size_t l = 0; l < dim_b; l++) {
            for (std::size_t i = 0; i < dim_a; i++) {
                for (std::size_t j = 0; j < dim_a; j++) {
                    block(i, j) = rho(i * dim_b + k, j * dim_b + l);
                }
            }
            ComplexMatrix image = apply(phi, block);
            for (std::size_t i = 0; i < m; i++) {
                for (std::size_t j = 0; j < m; j++) {
                    out(i * dim_b + k, j * dim_b + l) = image(i, j);
                }
            }
        }
    }
    return out;
}

ComplexMatrix apply_map_side(const BipartiteState &rho, const ElementaryOperator &phi, Side side) {
    return apply_map_side(rho.matrix(), rho.dim_a(), rho.dim_b(), phi, side);
}

PptResult is_ppt(const BipartiteState &rho, double tol) {
    auto psd = is_psd(partial_transpose(rho, Side::Right), tol);
    return {psd.psd, psd.min_eigenvalue};
}

RealignmentResult realignment_criterion(const BipartiteState &rho, double tol) {
    double norm = trace_norm(realign(rho));
    return {norm <= 1.0 + tol, norm};
}

WitnessResult map_witness_test(const BipartiteState &rho, const ElementaryOperator &phi, Side side, double tol) {
    ComplexMatrix image = apply_map_side(rho, phi, side);
    double lo = hermitian_eigenvalues(image, std::max(tol, 1e-9)).front();
    return {phi.label(), side, lo, lo >= -tol};
}

bool CriterionReport::entangled_detected() const {
    return !ppt.pass || !realignment.pass ||
           std::any_of(witnesses.begin(), witnesses.end(), [](const WitnessResult &w) { return !w.pass; });
}

std::vector<MapOnSide> default_battery(std::size_t dim_a, std::size_t dim_b) {
    std::vector<MapOnSide> maps;
    if (dim_a == 3 && dim_b == 3) {
        maps.push_back({gamma_map(), Side::Right});
        maps.push_back({gamma_prime_map(), Side::Right});
    }
    if (dim_b >= 2) {
        maps.push_back({transpose_map(dim_b), Side::Right});
        maps.push_back({reduction_map(dim_b), Side::Right});
    }
    return maps;
}

CriterionReport run_battery(const BipartiteState &rho, const std::vector<MapOnSide> &maps, double tol) {
    CriterionReport report;
    report.ppt = is_ppt(rho, tol);
    report.realignment = realignment_criterion(rho, tol);
    for (const auto &entry : maps) {
        report.witnesses.push_back(map_witness_test(rho, entry.map, entry.side, tol));
    }
    return report;
}

CriterionReport run_battery(const BipartiteState &rho, double tol) {
    return run_battery(rho, default_battery(rho.dim_a(), rho.dim_b()), tol);
}

ComplexMatrix paper_state_rho0(double a, double b) {
    ComplexMatrix m(9, 9);
    for (std::size_t i : {0, 4, 8}) {
        for (std::size_t j : {0, 4, 8}) {
            m(i, j) = 1;
        }
    }
    const double diag[9] = {1, a, b, b, 1, a, a, b, 1};
    for (std::size_t i = 0; i < 9; i++) {
        m(i, i) = diag[i];
    }
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 6}, {5, 7}}) {
        m(i, j) = 1;
        m(j, i) = 1;
    }
    return m;
}

BipartiteState paper_state_rho(double a, double b) {
    if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("paper_state_rho: a and b must be positive");
    }
    if (a == 1.0) {
        throw std::invalid_argument("paper_state_rho: a must differ from 1");
    }
    return {3, 3, (1.0 / (3 * (1 + a + b))) * paper_state_rho0(a, b)};
}

BipartiteState paper_state_rho1() {
    ComplexMatrix m(9, 9);
    for (std::size_t i : {0, 4, 8}) {
        for (std::size_t j : {0, 4, 8}) {
            m(i, j) = 0.99;
        }
    }
    for (std::size_t i : {2, 3, 7}) {
        for (std::size_t j : {2, 3, 7}) {
            m(i, j) = 1.01;
        }
    }
    for (std::size_t i : {1, 5, 6}) {
        m(i, i) = 63;
    }
    return {3, 3, (1.0 / 195) * m};
}

BipartiteState bell_state() {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Complex> phi_plus = {r, 0, 0, r};
    return {2, 2, projector(phi_plus)};
}

ComplexMatrix random_density(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw DimensionError("random_density: dimension must be positive");
    }
    Rng rng(seed);
    return wishart_density(rng, dim);
}

BipartiteState random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, std::uint64_t seed,
                                FactorKind kind) {
    if (terms == 0) {
        throw std::invalid_argument("random_separable: at least one term is required");
    }
    Rng rng(seed);
    std::vector<double> weights(terms);
    double total = 0;
    for (auto &w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    ComplexMatrix sum(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t t = 0; t < terms; t++) {
        ComplexMatrix left;
        ComplexMatrix right;
        if (kind == FactorKind::Pure) {
            left = projector(rng.haar_unit_vector(dim_a));
            right = projector(rng.haar_unit_vector(dim_b));
        } else {
            left = wishart_density(rng, dim_a);
            right = wishart_density(rng, dim_b);
        }
        sum += (weights[t] / total) * kron(left, right);
    }
    return {dim_a, dim_b, hermitian_part(sum)};
}

}  // namespace ncp
