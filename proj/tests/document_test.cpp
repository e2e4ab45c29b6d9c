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

#include "gtest/gtest.h"
#include "ncp/document.hpp"

using namespace ncp;

namespace {

std::string state_text(const std::string &matrix) {
    return R"({"kind": "state", "dim_a": 1, "dim_b": 2, "matrix": )" + matrix + "}";
}

std::string error_of(const std::string &text) {
    try {
        parse_document(text);
    } catch (const DocumentError &err) {
        return err.what();
    }
    return "";
}

}  // namespace

TEST(document, state_round_trip_is_byte_stable) {
    for (const BipartiteState &rho : {paper_state_rho1(), paper_state_rho(0.5, 2), random_separable(2, 3, 3, 7)}) {
        std::string text = serialize(to_document(rho));
        MatrixDocument parsed = parse_document(text);
        EXPECT_EQ(kind_name(parsed), "state");
        EXPECT_EQ(serialize(parsed), text);
        EXPECT_EQ(to_state(parsed).matrix(), rho.matrix());
    }
}

TEST(document, map_and_channel_round_trip) {
    for (const ElementaryOperator &phi : {gamma_map(), transpose_map(2), delta_t_map(3, 2.5)}) {
        std::string text = serialize(to_document(phi));
        MatrixDocument parsed = parse_document(text);
        EXPECT_EQ(serialize(parsed), text);
        EXPECT_EQ(to_map(parsed), phi);
    }
    QuantumChannel ch = random_channel(2, 3, 2, 5);
    std::string text = serialize(to_document(ch));
    MatrixDocument parsed = parse_document(text);
    EXPECT_EQ(kind_name(parsed), "channel");
    EXPECT_EQ(serialize(parsed), text);
    EXPECT_EQ(to_channel(parsed).kraus(), ch.kraus());
    ElementaryOperator as_map = to_map(parsed);
    EXPECT_TRUE(as_map.minus_kraus().empty());
    EXPECT_EQ(as_map.plus_kraus(), ch.kraus());
}

TEST(document, canonical_layout) {
    StateDocument doc{1, 1, ComplexMatrix{{Complex{1, 0}}}};
    EXPECT_EQ(serialize(doc),
              "{\n  \"kind\": \"state\",\n  \"dim_a\": 1,\n  \"dim_b\": 1,\n  \"matrix\": [\n    [[1, 0]]\n  ]\n}\n");
    std::string noncanonical = R"({"matrix": [[[1.0, 0.0]]], "dim_b": 1, "dim_a": 1, "kind": "state"})";
    EXPECT_EQ(serialize(parse_document(noncanonical)), serialize(doc));
}

TEST(document, shortest_exact_numbers) {
    StateDocument doc{1, 1, ComplexMatrix{{Complex{0.1, -1.0 / 3}}}};
    std::string text = serialize(doc);
    EXPECT_NE(text.find("[0.10000000000000001, -0.33333333333333331]"), std::string::npos) << text;
    EXPECT_EQ(std::get<StateDocument>(parse_document(text)).matrix(0, 0), (Complex{0.1, -1.0 / 3}));
}

TEST(document, rejects_malformed_input) {
    EXPECT_NE(error_of("not json").find("not valid JSON"), std::string::npos);
    EXPECT_NE(error_of("[1, 2]").find("top level"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "vector"})").find("unknown kind"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "state", "dim_b": 1, "matrix": []})").find("dim_a"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "state", "dim_a": 0, "dim_b": 1, "matrix": []})").find("positive integer"),
              std::string::npos);
    EXPECT_NE(error_of(state_text("[[[1, 0], [0, 0]]]")).find("rows"), std::string::npos);
    EXPECT_NE(error_of(state_text("[[[1, 0]], [[0, 0]]]")).find("row 0"), std::string::npos);
    EXPECT_NE(error_of(state_text("[[[1, 0], [0]], [[0, 0], [0, 0]]]")).find("number pairs"), std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "channel", "dim_in": 1, "dim_out": 1, "kraus": []})").find("non-empty"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"kind": "map", "dim_in": 1, "dim_out": 1, "plus_kraus": []})").find("minus_kraus"),
              std::string::npos);
}

TEST(document, kind_mismatch) {
    MatrixDocument state = to_document(bell_state());
    EXPECT_THROW(to_map(state), DocumentError);
    EXPECT_THROW(to_channel(state), DocumentError);
    EXPECT_THROW(to_state(to_document(gamma_map())), DocumentError);
}

TEST(document, state_invariants_checked_on_conversion) {
    MatrixDocument doc = parse_document(state_text("[[[0.5, 0], [0, 0]], [[0, 0], [0.4, 0]]]"));
    try {
        to_state(doc);
        FAIL() << "expected rejection";
    } catch (const InvariantError &err) {
        EXPECT_NE(std::string(err.what()).find("trace"), std::string::npos);
    }
}
