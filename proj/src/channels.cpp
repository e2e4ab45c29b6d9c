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

#include "ncp/channels.hpp"

#include <sstream>

#include "ncp/random.hpp"

namespace ncp {

std::string_view to_string(ChannelKind kind) {
    return kind == ChannelKind::TracePreserving ? "trace-preserving" : "trace-nonincreasing";
}

ChannelKind audit(const std::vector<ComplexMatrix> &kraus, double tol) {
    if (kraus.empty()) {
        throw InvariantError("channel: Kraus family must be non-empty");
    }
    const std::size_t rows = kraus.front().rows();
    const std::size_t cols = kraus.front().cols();
    if (rows == 0 || cols == 0) {
        throw DimensionError("channel: Kraus matrices must have positive dimensions");
    }
    ComplexMatrix s(cols, cols);
    for (const auto &m : kraus) {
        if (m.rows() != rows || m.cols() != cols) {
            throw DimensionError("channel: Kraus matrices must share one shape");
        }
        s += matmul(dagger(m), m);
    }
    ComplexMatrix id = ComplexMatrix::identity(cols);
    if (max_abs_diff(s, id) <= tol) {
        return ChannelKind::TracePreserving;
    }
    auto slack = is_psd(id - s, tol);
    if (slack.psd) {
        return ChannelKind::TraceNonincreasing;
    }
    std::ostringstream msg;
    msg << "channel: sum of M_i^dagger M_i exceeds the identity (I - S has eigenvalue " << slack.min_eigenvalue
        << ")";
    throw InvariantError(msg.str());
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, double tol)
    : dim_in_(0), dim_out_(0), kraus_(std::move(kraus)), kind_(audit(kraus_, tol)) {
    dim_in_ = kraus_.front().cols();
    dim_out_ = kraus_.front().rows();
}

ChannelKind audit(const QuantumChannel &ch, double tol) { return audit(ch.kraus(), tol); }

ComplexMatrix evolve(const QuantumChannel &ch, const ComplexMatrix &rho, double tol) {
    if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in()) {
        throw DimensionError("evolve: state dimension does not match the channel input");
    }
    if (std::abs(trace(rho) - Complex{1, 0}) > tol) {
        throw InvariantError("evolve: input state must have unit trace");
    }
    if (!is_psd(rho, tol).psd) {
        throw InvariantError("evolve: input state must be positive semidefinite");
    }
    ComplexMatrix out(ch.dim_out(), ch.dim_out());
    for (const auto &m : ch.kraus()) {
        out += matmul(matmul(m, rho), dagger(m));
    }
    return out;
}

QuantumChannel compose(const QuantumChannel &ch2, const QuantumChannel &ch1) {
    if (ch1.dim_out() != ch2.dim_in()) {
        throw DimensionError("compose: output dimension of the first channel differs from the input of the second");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ch1.kraus().size() * ch2.kraus().size());
    for (const auto &n : ch2.kraus()) {
        for (const auto &m : ch1.kraus()) {
            kraus.push_back(matmul(n, m));
        }
    }
    // Products of valid families stay valid up to rounding.
    return QuantumChannel(std::move(kraus), 1e-8);
}

ElementaryOperator as_elementary_operator(const QuantumChannel &ch) {
    return {ch.dim_in(), ch.dim_out(), ch.kraus(), {}, "channel"};
}

QuantumChannel identity_channel(std::size_t n) { return QuantumChannel({ComplexMatrix::identity(n)}); }

QuantumChannel dephasing_channel(std::size_t n) {
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < n; i++) {
        kraus.push_back(ComplexMatrix::unit(n, n, i, i));
    }
    return QuantumChannel(std::move(kraus));
}

QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t count, std::uint64_t seed) {
    if (dim_in == 0 || dim_out == 0 || count == 0) {
        throw DimensionError("random_channel: dimensions and count must be positive");
    }
    if (dim_out * count < dim_in) {
        throw DimensionError("random_channel: dim_out * count must be at least dim_in");
    }
    Rng rng(seed);
    ComplexMatrix v = rng.haar_isometry(dim_out * count, dim_in);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t c = 0; c < count; c++) {
        ComplexMatrix m(dim_out, dim_in);
        for (std::size_t i = 0; i < dim_out; i++) {
            for (std::size_t j = 0; j < dim_in; j++) {
                m(i, j) = v(c * dim_out + i, j);
            }
        }
        kraus.push_back(std::move(m));
    }
    return QuantumChannel(std::move(kraus));
}

}  // namespace ncp
