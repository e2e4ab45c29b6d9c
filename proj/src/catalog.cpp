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

// Concrete positive maps that are not completely positive, written in
// signed Kraus form.

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncp/maps.hpp"

namespace ncp {

namespace {

constexpr double kCoefficientSlack = 1e-12;

ComplexMatrix e(std::size_t n, std::size_t i, std::size_t j) { return ComplexMatrix::unit(n, n, i, j); }

void require_at_least_two(std::size_t n, const char *name) {
    if (n < 2) {
        throw std::invalid_argument(std::string(name) + ": dimension must be at least 2");
    }
}

// Shared by Γ and Γ′: the diagonal G/F terms over ordered pairs i ≠ j plus
// three cyclic shift terms.
ElementaryOperator gamma_family(const std::size_t shifts[3][2], const char *label) {
    constexpr std::size_t n = 3;
    std::vector<ComplexMatrix> plus;
    std::vector<ComplexMatrix> minus;
    for (std::size_t i = 0; i < n; i++) {
        plus.push_back(e(n, i, i));
    }
    for (int k = 0; k < 3; k++) {
        plus.push_back(e(n, shifts[k][0], shifts[k][1]));
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (i == j) {
                continue;
            }
            plus.push_back(0.5 * (e(n, i, i) - e(n, j, j)));
            minus.push_back(0.5 * (e(n, i, i) + e(n, j, j)));
        }
    }
    return {n, n, std::move(plus), std::move(minus), label};
}

ComplexMatrix negated_offdiagonal(const ComplexMatrix &a, const std::size_t partner[3], const char *name) {
    if (a.rows() != 3 || a.cols() != 3) {
        throw DimensionError(std::string(name) + ": input must be 3x3");
    }
    ComplexMatrix out(3, 3);
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) {
            out(i, j) = i == j ? a(i, i) + a(partner[i], partner[i]) : -a(i, j);
        }
    }
    return out;
}

}  // namespace

ElementaryOperator transpose_map(std::size_t n) {
    require_at_least_two(n, "transpose_map");
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> plus;
    std::vector<ComplexMatrix> minus;
    for (std::size_t i = 0; i < n; i++) {
        plus.push_back(e(n, i, i));
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            plus.push_back(r * (e(n, i, j) + e(n, j, i)));
            minus.push_back(r * (e(n, i, j) - e(n, j, i)));
        }
    }
    return {n, n, std::move(plus), std::move(minus), "transpose"};
}

ElementaryOperator reduction_map(std::size_t n) {
    require_at_least_two(n, "reduction_map");
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> plus;
    std::vector<ComplexMatrix> minus;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (i != j) {
                plus.push_back(e(n, i, j));
            }
        }
    }
    // With the 1/√2 normalization the diagonal pairs run over i < j only.
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            plus.push_back(r * (e(n, i, i) - e(n, j, j)));
            minus.push_back(r * (e(n, i, i) + e(n, j, j)));
        }
    }
    return {n, n, std::move(plus), std::move(minus), "reduction"};
}

ElementaryOperator delta_t_map(std::size_t n, double t) {
    if (n < 1) {
        throw std::invalid_argument("delta_t_map: dimension must be positive");
    }
    if (!(t > 0) || !std::isfinite(t)) {
        throw std::invalid_argument("delta_t_map: t must be a positive number");
    }
    std::vector<ComplexMatrix> plus;
    for (std::size_t i = 0; i < n; i++) {
        plus.push_back(std::sqrt(t) * e(n, i, i));
    }
    std::ostringstream label;
    label << "delta-t(t=" << t << ")";
    return {n, n, std::move(plus), {ComplexMatrix::identity(n)}, label.str()};
}

ElementaryOperator prop51_map(std::size_t n, const std::vector<std::vector<double>> &a,
                              const std::vector<std::vector<double>> &b) {
    require_at_least_two(n, "prop51_map");
    const std::size_t s = a.size();
    const std::size_t t = b.size();
    if (t < 1) {
        throw std::invalid_argument("prop51_map: at least one negative coefficient row is required (t >= 1)");
    }
    if (s + t > n) {
        throw std::invalid_argument("prop51_map: s + t must not exceed n");
    }
    ComplexMatrix rows(s + t, n);
    for (std::size_t k = 0; k < s + t; k++) {
        const auto &row = k < s ? a[k] : b[k - s];
        if (row.size() != n) {
            throw std::invalid_argument("prop51_map: every coefficient row must have length n");
        }
        for (std::size_t i = 0; i < n; i++) {
            if (!std::isfinite(row[i])) {
                throw std::invalid_argument("prop51_map: coefficients must be finite");
            }
            rows(k, i) = row[i];
        }
    }
    if (rank(rows) != s + t) {
        throw std::invalid_argument("prop51_map: linear independence of {A_k, B_l} violated");
    }
    // f_ij = Σ_k a_ki a_kj − Σ_l b_li b_lj
    auto f = [&](std::size_t i, std::size_t j) {
        double v = 0;
        for (const auto &row : a) {
            v += row[i] * row[j];
        }
        for (const auto &row : b) {
            v -= row[i] * row[j];
        }
        return v;
    };
    for (std::size_t i = 0; i < n; i++) {
        if (f(i, i) < -kCoefficientSlack) {
            std::ostringstream msg;
            msg << "prop51_map: diagonal condition sum_k a_ki^2 >= sum_l b_li^2 violated at i=" << i + 1
                << " (f_ii = " << f(i, i) << ")";
            throw std::invalid_argument(msg.str());
        }
        for (std::size_t j = i + 1; j < n; j++) {
            if (std::abs(f(i, j)) > 1 + kCoefficientSlack) {
                std::ostringstream msg;
                msg << "prop51_map: off-diagonal condition |f_ij| <= 1 violated at (i,j)=(" << i + 1 << "," << j + 1
                    << ") (|f_ij| = " << std::abs(f(i, j)) << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    std::vector<ComplexMatrix> plus;
    std::vector<ComplexMatrix> minus;
    for (const auto &row : a) {
        plus.push_back(ComplexMatrix::diagonal(std::span<const double>(row)));
    }
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (i != j) {
                plus.push_back(e(n, i, j));
            }
        }
    }
    for (const auto &row : b) {
        minus.push_back(ComplexMatrix::diagonal(std::span<const double>(row)));
    }
    return {n, n, std::move(plus), std::move(minus), "prop51"};
}

ElementaryOperator gamma_map() {
    // E12·A·E21 + E23·A·E32 + E31·A·E13
    static constexpr std::size_t shifts[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    return gamma_family(shifts, "gamma");
}

ElementaryOperator gamma_prime_map() {
    // E21·A·E12 + E32·A·E23 + E13·A·E31
    static constexpr std::size_t shifts[3][2] = {{1, 0}, {2, 1}, {0, 2}};
    return gamma_family(shifts, "gamma-prime");
}

ComplexMatrix gamma_closed_form(const ComplexMatrix &a) {
    static constexpr std::size_t partner[3] = {1, 2, 0};
    return negated_offdiagonal(a, partner, "gamma_closed_form");
}

ComplexMatrix gamma_prime_closed_form(const ComplexMatrix &a) {
    static constexpr std::size_t partner[3] = {2, 0, 1};
    return negated_offdiagonal(a, partner, "gamma_prime_closed_form");
}

}  // namespace ncp
