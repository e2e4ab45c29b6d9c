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

#ifndef NCP_MAPS_HPP
#define NCP_MAPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncp/linalg.hpp"

namespace ncp {

/// Hermitian-preserving linear map in signed Kraus form,
///
///   Φ(X) = Σ_i A_i X A_i† − Σ_j C_j X C_j†,
///
/// from dim_in × dim_in to dim_out × dim_out matrices. The A_i are the
/// plus terms and the C_j the minus terms; every Kraus matrix is
/// dim_out × dim_in.
class ElementaryOperator {
  public:
    ElementaryOperator(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> plus_kraus,
                       std::vector<ComplexMatrix> minus_kraus, std::string label = "");

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix> &plus_kraus() const { return plus_; }
    const std::vector<ComplexMatrix> &minus_kraus() const { return minus_; }
    const std::string &label() const { return label_; }

    friend bool operator==(const ElementaryOperator &, const ElementaryOperator &) = default;

  private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    std::vector<ComplexMatrix> plus_;
    std::vector<ComplexMatrix> minus_;
    std::string label_;
};

/// X ↦ X on n × n matrices (single plus term I).
ElementaryOperator identity_map(std::size_t n);

ComplexMatrix apply(const ElementaryOperator &phi, const ComplexMatrix &x);

/// Σ_ij E_ij ⊗ Φ(E_ij) with E_ij the dim_in matrix units.
ComplexMatrix choi_matrix(const ElementaryOperator &phi);

struct CpResult {
    bool completely_positive = false;
    double min_choi_eigenvalue = 0.0;
};

CpResult is_completely_positive(const ElementaryOperator &phi, double tol = kDefaultTol);

struct FalsifierResult {
    /// Unit vector ψ with min eig Φ(ψψ†) < −tol; its presence proves Φ is not positive.
    std::optional<std::vector<Complex>> witness;
    /// Witness eigenvalue when found, otherwise the smallest eigenvalue seen.
    double min_eigenvalue = 0.0;
    std::size_t evaluated = 0;
};

/// One-sided positivity test over rank-one projections.
///
/// Caller-supplied candidates are tried first, then `samples` Haar-random
/// unit vectors drawn from `seed`. Returns at the first ψ with
/// min eig Φ(ψψ†) < −tol. An empty witness is evidence of positivity, not
/// a proof.
FalsifierResult positivity_falsifier(const ElementaryOperator &phi, std::size_t samples, std::uint64_t seed,
                                     double tol = kDefaultTol,
                                     const std::vector<std::vector<Complex>> &candidates = {});

/// Solution of C = A·Ωᵀ for a coefficient matrix Ω (l × k), either the
/// local system (columns A_iψ, C_jψ) or the global one (vectorized Kraus
/// matrices).
struct LocalCoefficientResult {
    bool feasible = false;
    ComplexMatrix omega;  // l × k
    double operator_norm = 0.0;
    double residual = 0.0;
    /// Local check only: min eig of Σ A_iψψ†A_i† − Σ C_jψψ†C_j†.
    std::optional<double> psd_min_eigenvalue;
};

/// Tests whether C_jψ = Σ_i ω_ji A_iψ has a solution with ‖Ω‖ ≤ 1.
///
/// Ω is the pseudoinverse solution, which has the least operator norm among
/// all exact solutions, so the verdict is definitive. It is cross-checked
/// against the PSD test on Φ(ψψ†); a decisive disagreement throws
/// std::logic_error. Throws InvariantError when ψ is not a unit vector.
LocalCoefficientResult local_combination_check(const ElementaryOperator &phi, std::span<const Complex> psi,
                                               double tol = kDefaultTol);

/// Global version: C_j = Σ_i ω_ji A_i with ‖Ω‖ ≤ 1, which certifies
/// complete positivity.
LocalCoefficientResult contractive_linear_combination_check(const ElementaryOperator &phi,
                                                            double tol = kDefaultTol);

struct FilterReport {
    std::size_t plus_count = 0;
    std::size_t minus_count = 0;
    /// k ≤ 2: a positive map is automatically completely positive.
    bool few_plus_terms = false;
    /// Some sampled ψ made {A_iψ} linearly independent: positive implies CP.
    bool independent_at_sample = false;
    std::size_t max_sampled_rank = 0;
    /// k ≥ 3 is necessary for a positive map that is not CP.
    bool ncp_possible = false;

    bool cp_if_positive() const { return few_plus_terms || independent_at_sample; }
};

FilterReport ncp_quick_filters(const ElementaryOperator &phi, std::size_t samples = 16, std::uint64_t seed = 0);

/// Orthonormal basis (as columns) of the range of an orthogonal projection.
/// Throws InvariantError unless p² = p = p† within tol.
ComplexMatrix projection_range(const ComplexMatrix &p, double tol = kDefaultTol);

/// X ↦ QΦ(PXP)Q restricted to range(P) → range(Q), expressed in the bases
/// returned by projection_range.
ElementaryOperator compress(const ElementaryOperator &phi, const ComplexMatrix &p, const ComplexMatrix &q,
                            double tol = kDefaultTol);

// Catalog of positive maps that are not completely positive.

/// T ↦ Tᵗ. Throws std::invalid_argument for n < 2.
ElementaryOperator transpose_map(std::size_t n);
/// T ↦ Tr(T)·I − T. Throws std::invalid_argument for n < 2.
ElementaryOperator reduction_map(std::size_t n);
/// X ↦ t·Σ E_ii X E_ii − X; positive iff completely positive iff t ≥ n.
ElementaryOperator delta_t_map(std::size_t n, double t);

/// Diagonal-coefficient family on n × n matrices:
///
///   Δ(T) = Σ_k A_k T A_k† + Σ_{i≠j} E_ij T E_ij† − Σ_l B_l T B_l†
///
/// with A_k = diag(a[k]) and B_l = diag(b[l]). The coefficients must satisfy
/// t ≥ 1, s + t ≤ n, linear independence of {A_k, B_l}, and for all i ≠ j
/// Σ_k a_ki² ≥ Σ_l b_li² and |Σ_k a_ki a_kj − Σ_l b_li b_lj| ≤ 1; a violation
/// throws std::invalid_argument naming the failed condition.
ElementaryOperator prop51_map(std::size_t n, const std::vector<std::vector<double>> &a,
                              const std::vector<std::vector<double>> &b);

/// Indecomposable positive maps on 3 × 3 matrices.
ElementaryOperator gamma_map();
ElementaryOperator gamma_prime_map();

/// Entrywise form of gamma_map(): diagonal (a11+a22, a22+a33, a33+a11), off-diagonals negated.
ComplexMatrix gamma_closed_form(const ComplexMatrix &a);
/// Entrywise form of gamma_prime_map(): diagonal (a11+a33, a22+a11, a33+a22), off-diagonals negated.
ComplexMatrix gamma_prime_closed_form(const ComplexMatrix &a);

}  // namespace ncp

#endif  // NCP_MAPS_HPP
