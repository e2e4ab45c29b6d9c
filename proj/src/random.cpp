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

#include "ncp/random.hpp"

#include <cmath>

namespace ncp {

Complex Rng::gaussian() {
    double re = normal_(engine_);
    double im = normal_(engine_);
    return {re, im};
}

std::vector<Complex> Rng::gaussian_vector(std::size_t n) {
    std::vector<Complex> v(n);
    for (auto &z : v) {
        z = gaussian();
    }
    return v;
}

ComplexMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
    return {rows, cols, gaussian_vector(rows * cols)};
}

std::vector<Complex> Rng::haar_unit_vector(std::size_t n) {
    for (;;) {
        auto v = gaussian_vector(n);
        double norm = vector_norm(v);
        if (norm > 1e-12) {
            for (auto &z : v) {
                z /= norm;
            }
            return v;
        }
    }
}

ComplexMatrix Rng::haar_isometry(std::size_t rows, std::size_t cols) {
    if (cols > rows) {
        throw DimensionError("haar_isometry: more columns than rows");
    }
    ComplexMatrix g = gaussian_matrix(rows, cols);
    // Modified Gram-Schmidt, two passes for orthogonality to working precision.
    for (std::size_t j = 0; j < cols; j++) {
        for (int pass = 0; pass < 2; pass++) {
            for (std::size_t k = 0; k < j; k++) {
                Complex dot = 0;
                for (std::size_t i = 0; i < rows; i++) {
                    dot += std::conj(g(i, k)) * g(i, j);
                }
                for (std::size_t i = 0; i < rows; i++) {
                    g(i, j) -= dot * g(i, k);
                }
            }
        }
        double norm = vector_norm(g.column_vector(j));
        for (std::size_t i = 0; i < rows; i++) {
            g(i, j) /= norm;
        }
    }
    return g;
}

ComplexMatrix Rng::random_hermitian(std::size_t n) {
    ComplexMatrix g = gaussian_matrix(n, n);
    return 0.5 * (g + dagger(g));
}

ComplexMatrix projector(std::span<const Complex> psi) {
    ComplexMatrix p(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); i++) {
        for (std::size_t j = 0; j < psi.size(); j++) {
            p(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return p;
}

}  // namespace ncp
