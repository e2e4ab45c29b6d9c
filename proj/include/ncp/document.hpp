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

#ifndef NCP_DOCUMENT_HPP
#define NCP_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncp/channels.hpp"
#include "ncp/linalg.hpp"
#include "ncp/maps.hpp"
#include "ncp/states.hpp"

namespace ncp {

/// Malformed or inconsistent matrix document.
class DocumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// JSON documents, one object per file:
//
//   {"kind": "state", "dim_a": 3, "dim_b": 3, "matrix": M}
//   {"kind": "map", "dim_in": n, "dim_out": m, "label": "...", "plus_kraus": [M...], "minus_kraus": [M...]}
//   {"kind": "channel", "dim_in": n, "dim_out": m, "kraus": [M...]}
//
// where M is an array of rows, each row an array of [real, imaginary] pairs.

struct StateDocument {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    ComplexMatrix matrix;
};

struct MapDocument {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::string label;
    std::vector<ComplexMatrix> plus_kraus;
    std::vector<ComplexMatrix> minus_kraus;
};

struct ChannelDocument {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::vector<ComplexMatrix> kraus;
};

using MatrixDocument = std::variant<StateDocument, MapDocument, ChannelDocument>;

/// Checks JSON structure and declared dimensions against array shapes.
/// Physical invariants (trace, positivity) are checked by to_state / to_channel.
MatrixDocument parse_document(std::string_view text);

/// Canonical text: fixed layout, every number printed with 17 significant
/// digits, so serialize(parse(serialize(d))) is byte-identical.
std::string serialize(const MatrixDocument &doc);

StateDocument to_document(const BipartiteState &rho);
MapDocument to_document(const ElementaryOperator &phi);
ChannelDocument to_document(const QuantumChannel &ch);

BipartiteState to_state(const MatrixDocument &doc, double tol = kDefaultTol);
/// Maps directly; channels as all-plus operators.
ElementaryOperator to_map(const MatrixDocument &doc);
QuantumChannel to_channel(const MatrixDocument &doc, double tol = kDefaultTol);

std::string_view kind_name(const MatrixDocument &doc);

}  // namespace ncp

#endif  // NCP_DOCUMENT_HPP
