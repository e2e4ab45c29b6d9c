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

#ifndef NCP_RANDOM_HPP
#define NCP_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ncp/linalg.hpp"

namespace ncp {

/// Seeded source of complex Gaussian samples. Sequences are reproducible for
/// a given seed on a given standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    Complex gaussian();
    std::vector<Complex> gaussian_vector(std::size_t n);
    ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

    /// Uniformly distributed unit vector on the complex sphere.
    std::vector<Complex> haar_unit_vector(std::size_t n);
    /// Matrix with orthonormal columns (rows >= cols), Gram-Schmidt of a Gaussian matrix.
    ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols);
    ComplexMatrix haar_unitary(std::size_t n) { return haar_isometry(n, n); }
    ComplexMatrix random_hermitian(std::size_t n);

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// ψψ† for a column vector ψ.
ComplexMatrix projector(std::span<const Complex> psi);

}  // namespace ncp

#endif  // NCP_RANDOM_HPP
