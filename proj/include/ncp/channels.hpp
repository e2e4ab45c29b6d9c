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

#ifndef NCP_CHANNELS_HPP
#define NCP_CHANNELS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "ncp/linalg.hpp"
#include "ncp/maps.hpp"

namespace ncp {

enum class ChannelKind { TracePreserving, TraceNonincreasing };

std::string_view to_string(ChannelKind kind);

/// Classifies a Kraus family {M_i} by S = Σ M_i†M_i: trace-preserving when
/// ‖S − I‖_max ≤ tol, trace-nonincreasing when I − S ⪰ 0 within tol.
/// Throws InvariantError otherwise, or for an empty or ragged family.
ChannelKind audit(const std::vector<ComplexMatrix> &kraus, double tol = kDefaultTol);

/// ρ ↦ Σ M_i ρ M_i†. The kind is audited at construction, not declared.
class QuantumChannel {
  public:
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus, double tol = kDefaultTol);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
    ChannelKind kind() const { return kind_; }

  private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    std::vector<ComplexMatrix> kraus_;
    ChannelKind kind_;
};

ChannelKind audit(const QuantumChannel &ch, double tol = kDefaultTol);

/// Throws InvariantError unless rho is a dim_in density matrix within tol.
ComplexMatrix evolve(const QuantumChannel &ch, const ComplexMatrix &rho, double tol = kDefaultTol);

/// ch2 ∘ ch1 with Kraus family {N_j·M_i}.
QuantumChannel compose(const QuantumChannel &ch2, const QuantumChannel &ch1);

ElementaryOperator as_elementary_operator(const QuantumChannel &ch);

QuantumChannel identity_channel(std::size_t n);
/// Kraus family {E_ii}: kills off-diagonal entries.
QuantumChannel dephasing_channel(std::size_t n);

/// Trace-preserving channel whose `count` Kraus blocks are the block rows of
/// a Haar-random isometry C^dim_in → C^(dim_out·count).
QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t count, std::uint64_t seed);

}  // namespace ncp

#endif  // NCP_CHANNELS_HPP
