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

#ifndef NCP_STATES_HPP
#define NCP_STATES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncp/linalg.hpp"
#include "ncp/maps.hpp"

namespace ncp {

enum class Side { Left, Right };

std::string_view to_string(Side side);
/// Parses "left" / "right"; throws std::invalid_argument otherwise.
Side parse_side(std::string_view text);

/// Density matrix on C^dim_a ⊗ C^dim_b, row index i_a·dim_b + i_b.
///
/// The constructor enforces Hermiticity, unit trace, and positive
/// semidefiniteness within tol and throws InvariantError naming the first
/// violated invariant.
class BipartiteState {
  public:
    BipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix, double tol = kDefaultTol);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const ComplexMatrix &matrix() const { return matrix_; }

  private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix matrix_;
};

// The matrix-level operations accept any (dim_a·dim_b)-square matrix so
// that unnormalized operators can be inspected as well.

ComplexMatrix partial_transpose(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b, Side side);
ComplexMatrix partial_transpose(const BipartiteState &rho, Side side);

/// Realignment: row i·dim_a + j holds block (i, j) of ρ (dim_b × dim_b)
/// flattened row-major. The result is dim_a² × dim_b².
ComplexMatrix realign(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b);
ComplexMatrix realign(const BipartiteState &rho);

/// (I ⊗ Φ)ρ for Side::Right, (Φ ⊗ I)ρ for Side::Left.
ComplexMatrix apply_map_side(const ComplexMatrix &rho, std::size_t dim_a, std::size_t dim_b,
                             const ElementaryOperator &phi, Side side);
ComplexMatrix apply_map_side(const BipartiteState &rho, const ElementaryOperator &phi, Side side);

struct PptResult {
    bool pass = false;
    double min_eigenvalue = 0.0;
};

struct RealignmentResult {
    bool pass = false;
    double trace_norm = 0.0;
};

struct WitnessResult {
    std::string map_label;
    Side side = Side::Right;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

PptResult is_ppt(const BipartiteState &rho, double tol = kDefaultTol);
/// Fails (entangled) iff the realigned trace norm exceeds 1 + tol.
RealignmentResult realignment_criterion(const BipartiteState &rho, double tol = kDefaultTol);
/// Fails iff min eig of the side-applied map is below −tol. Only meaningful
/// as an entanglement certificate when phi is a positive map.
WitnessResult map_witness_test(const BipartiteState &rho, const ElementaryOperator &phi, Side side,
                               double tol = kDefaultTol);

struct MapOnSide {
    ElementaryOperator map;
    Side side = Side::Right;
};

struct CriterionReport {
    PptResult ppt;
    RealignmentResult realignment;
    std::vector<WitnessResult> witnesses;

    /// True iff any sub-criterion failed.
    bool entangled_detected() const;
};

/// {Γ, Γ′, transpose, reduction} on the right for 3 ⊗ 3, otherwise
/// {transpose, reduction} on the right.
std::vector<MapOnSide> default_battery(std::size_t dim_a, std::size_t dim_b);

CriterionReport run_battery(const BipartiteState &rho, const std::vector<MapOnSide> &maps,
                            double tol = kDefaultTol);
CriterionReport run_battery(const BipartiteState &rho, double tol = kDefaultTol);

// States.

/// Unnormalized 9 × 9 operator ρ₀(a, b) with diagonal (1,a,b,b,1,a,a,b,1).
ComplexMatrix paper_state_rho0(double a, double b);
/// ρ₀(a, b)/(3(1+a+b)); throws std::invalid_argument for a ≤ 0, b ≤ 0,
/// a = 1, and InvariantError if the result is not PSD.
BipartiteState paper_state_rho(double a, double b);
/// The PPT entangled 3 ⊗ 3 state with entries in {0, 0.99, 1.01, 63}/195.
BipartiteState paper_state_rho1();

/// |Φ⁺⟩⟨Φ⁺| on 2 ⊗ 2.
BipartiteState bell_state();

/// G·G†/Tr(G·G†) for a seeded complex Gaussian G.
ComplexMatrix random_density(std::size_t dim, std::uint64_t seed);

enum class FactorKind { Pure, Mixed };

/// Σ p_i ρ_i ⊗ σ_i with Haar-random pure factors (FactorKind::Pure) or
/// Wishart-normalized factors (FactorKind::Mixed).
BipartiteState random_separable(std::size_t dim_a, std::size_t dim_b, std::size_t terms, std::uint64_t seed,
                                FactorKind kind = FactorKind::Pure);

}  // namespace ncp

#endif  // NCP_STATES_HPP
