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

#include "ncp/document.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace ncp {

namespace {

using nlohmann::json;

std::string number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw DocumentError("serialize: cannot format number");
    }
    return {buf, end};
}

std::size_t read_dim(const json &j, const char *key) {
    if (!j.contains(key)) {
        throw DocumentError(std::string("document: missing field '") + key + "'");
    }
    const json &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw DocumentError(std::string("document: field '") + key + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

ComplexMatrix read_matrix(const json &j, std::size_t rows, std::size_t cols, const std::string &what) {
    if (!j.is_array()) {
        throw DocumentError("document: " + what + " must be an array of rows");
    }
    if (j.size() != rows) {
        std::ostringstream msg;
        msg << "document: " << what << " has " << j.size() << " rows, declared dimensions require " << rows;
        throw DocumentError(msg.str());
    }
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; r++) {
        const json &row = j[r];
        if (!row.is_array() || row.size() != cols) {
            std::ostringstream msg;
            msg << "document: " << what << " row " << r << " must hold " << cols << " entries";
            throw DocumentError(msg.str());
        }
        for (const json &z : row) {
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw DocumentError("document: " + what + " entries must be [real, imaginary] number pairs");
            }
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    try {
        return {rows, cols, std::move(entries)};
    } catch (const std::invalid_argument &e) {
        throw DocumentError("document: " + what + ": " + e.what());
    }
}

std::vector<ComplexMatrix> read_family(const json &j, const char *key, std::size_t rows, std::size_t cols,
                                       bool required) {
    std::vector<ComplexMatrix> out;
    if (!j.contains(key)) {
        if (required) {
            throw DocumentError(std::string("document: missing field '") + key + "'");
        }
        return out;
    }
    const json &list = j.at(key);
    if (!list.is_array()) {
        throw DocumentError(std::string("document: field '") + key + "' must be an array of matrices");
    }
    for (std::size_t i = 0; i < list.size(); i++) {
        out.push_back(read_matrix(list[i], rows, cols, std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void write_matrix(std::ostringstream &out, const ComplexMatrix &m, const std::string &indent) {
    out << "[\n";
    for (std::size_t i = 0; i < m.rows(); i++) {
        out << indent << "  [";
        for (std::size_t j = 0; j < m.cols(); j++) {
            if (j > 0) {
                out << ", ";
            }
            out << "[" << number(m(i, j).real()) << ", " << number(m(i, j).imag()) << "]";
        }
        out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
    }
    out << indent << "]";
}

void write_family(std::ostringstream &out, const char *key, const std::vector<ComplexMatrix> &family, bool last) {
    out << "  \"" << key << "\": [";
    if (family.empty()) {
        out << "]";
    } else {
        out << "\n";
        for (std::size_t i = 0; i < family.size(); i++) {
            out << "    ";
            write_matrix(out, family[i], "    ");
            out << (i + 1 < family.size() ? "," : "") << "\n";
        }
        out << "  ]";
    }
    out << (last ? "\n" : ",\n");
}

}  // namespace

MatrixDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw DocumentError(std::string("document: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw DocumentError("document: top level must be an object");
    }
    if (!j.contains("kind") || !j.at("kind").is_string()) {
        throw DocumentError("document: missing string field 'kind'");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "state") {
        StateDocument d;
        d.dim_a = read_dim(j, "dim_a");
        d.dim_b = read_dim(j, "dim_b");
        if (!j.contains("matrix")) {
            throw DocumentError("document: missing field 'matrix'");
        }
        d.matrix = read_matrix(j.at("matrix"), d.dim_a * d.dim_b, d.dim_a * d.dim_b, "matrix");
        return d;
    }
    if (kind == "map") {
        MapDocument d;
        d.dim_in = read_dim(j, "dim_in");
        d.dim_out = read_dim(j, "dim_out");
        if (j.contains("label")) {
            if (!j.at("label").is_string()) {
                throw DocumentError("document: field 'label' must be a string");
            }
            d.label = j.at("label").get<std::string>();
        }
        d.plus_kraus = read_family(j, "plus_kraus", d.dim_out, d.dim_in, true);
        d.minus_kraus = read_family(j, "minus_kraus", d.dim_out, d.dim_in, true);
        return d;
    }
    if (kind == "channel") {
        ChannelDocument d;
        d.dim_in = read_dim(j, "dim_in");
        d.dim_out = read_dim(j, "dim_out");
        d.kraus = read_family(j, "kraus", d.dim_out, d.dim_in, true);
        if (d.kraus.empty()) {
            throw DocumentError("document: channel Kraus list must be non-empty");
        }
        return d;
    }
    throw DocumentError("document: unknown kind '" + kind + "' (expected state, map or channel)");
}

std::string serialize(const MatrixDocument &doc) {
    std::ostringstream out;
    out << "{\n";
    if (const auto *s = std::get_if<StateDocument>(&doc)) {
        out << "  \"kind\": \"state\",\n";
        out << "  \"dim_a\": " << s->dim_a << ",\n";
        out << "  \"dim_b\": " << s->dim_b << ",\n";
        out << "  \"matrix\": ";
        write_matrix(out, s->matrix, "  ");
        out << "\n";
    } else if (const auto *m = std::get_if<MapDocument>(&doc)) {
        out << "  \"kind\": \"map\",\n";
        out << "  \"dim_in\": " << m->dim_in << ",\n";
        out << "  \"dim_out\": " << m->dim_out << ",\n";
        out << "  \"label\": " << json(m->label).dump() << ",\n";
        write_family(out, "plus_kraus", m->plus_kraus, false);
        write_family(out, "minus_kraus", m->minus_kraus, true);
    } else {
        const auto &c = std::get<ChannelDocument>(doc);
        out << "  \"kind\": \"channel\",\n";
        out << "  \"dim_in\": " << c.dim_in << ",\n";
        out << "  \"dim_out\": " << c.dim_out << ",\n";
        write_family(out, "kraus", c.kraus, true);
    }
    out << "}\n";
    return out.str();
}

StateDocument to_document(const BipartiteState &rho) { return {rho.dim_a(), rho.dim_b(), rho.matrix()}; }

MapDocument to_document(const ElementaryOperator &phi) {
    return {phi.dim_in(), phi.dim_out(), phi.label(), phi.plus_kraus(), phi.minus_kraus()};
}

ChannelDocument to_document(const QuantumChannel &ch) { return {ch.dim_in(), ch.dim_out(), ch.kraus()}; }

BipartiteState to_state(const MatrixDocument &doc, double tol) {
    const auto *s = std::get_if<StateDocument>(&doc);
    if (s == nullptr) {
        throw DocumentError("document: expected kind 'state', got '" + std::string(kind_name(doc)) + "'");
    }
    return {s->dim_a, s->dim_b, s->matrix, tol};
}

ElementaryOperator to_map(const MatrixDocument &doc) {
    if (const auto *m = std::get_if<MapDocument>(&doc)) {
        return {m->dim_in, m->dim_out, m->plus_kraus, m->minus_kraus, m->label};
    }
    if (const auto *c = std::get_if<ChannelDocument>(&doc)) {
        return {c->dim_in, c->dim_out, c->kraus, {}, "channel"};
    }
    throw DocumentError("document: expected kind 'map' or 'channel', got 'state'");
}

QuantumChannel to_channel(const MatrixDocument &doc, double tol) {
    const auto *c = std::get_if<ChannelDocument>(&doc);
    if (c == nullptr) {
        throw DocumentError("document: expected kind 'channel', got '" + std::string(kind_name(doc)) + "'");
    }
    return QuantumChannel(c->kraus, tol);
}

std::string_view kind_name(const MatrixDocument &doc) {
    switch (doc.index()) {
        case 0:
            return "state";
        case 1:
            return "map";
        default:
            return "channel";
    }
}

}  // namespace ncp
