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

#include "ncp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncp/channels.hpp"
#include "ncp/document.hpp"
#include "ncp/maps.hpp"
#include "ncp/states.hpp"

namespace ncp::cli {

namespace {

using nlohmann::json;

// Flags shared by every command that can name a builtin map.
struct MapParams {
    std::size_t n = 0;  // 0: use the acted factor's dimension
    std::optional<double> t;
    std::string coeffs_a;
    std::string coeffs_b;
};

const std::vector<std::string> kBuiltinMaps = {"identity", "transpose",   "reduction", "delta-t",
                                               "gamma",    "gamma-prime", "prop51"};

bool is_builtin(const std::string &name) {
    return std::find(kBuiltinMaps.begin(), kBuiltinMaps.end(), name) != kBuiltinMaps.end();
}

std::vector<std::vector<double>> parse_coefficients(const std::string &text, const char *flag) {
    std::vector<std::vector<double>> rows;
    if (text.empty()) {
        return rows;
    }
    std::stringstream all(text);
    std::string row_text;
    while (std::getline(all, row_text, ';')) {
        std::vector<double> row;
        std::stringstream row_stream(row_text);
        std::string cell;
        while (std::getline(row_stream, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t", used) != std::string::npos) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::exception &) {
                throw std::invalid_argument(std::string(flag) + ": cannot parse coefficient '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ElementaryOperator builtin_map(const std::string &name, const MapParams &p, std::size_t default_n) {
    std::size_t n = p.n != 0 ? p.n : default_n;
    if (name == "identity") {
        return identity_map(n);
    }
    if (name == "transpose") {
        return transpose_map(n);
    }
    if (name == "reduction") {
        return reduction_map(n);
    }
    if (name == "delta-t") {
        if (!p.t) {
            throw std::invalid_argument("delta-t requires --t");
        }
        return delta_t_map(n, *p.t);
    }
    if (name == "gamma") {
        return gamma_map();
    }
    if (name == "gamma-prime") {
        return gamma_prime_map();
    }
    if (name == "prop51") {
        return prop51_map(n, parse_coefficients(p.coeffs_a, "--coeffs-a"),
                          parse_coefficients(p.coeffs_b, "--coeffs-b"));
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

class Inputs {
  public:
    explicit Inputs(std::istream &in) : in_(in) {}

    std::string read(const std::string &path) {
        if (path == "-") {
            if (stdin_used_) {
                throw std::invalid_argument("standard input can be used for one input only");
            }
            stdin_used_ = true;
            return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        }
        std::ifstream file(path);
        if (!file) {
            throw std::invalid_argument("cannot open '" + path + "'");
        }
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

  private:
    std::istream &in_;
    bool stdin_used_ = false;
};

ElementaryOperator resolve_map(const std::string &spec, const MapParams &p, std::size_t default_n,
                               Inputs &inputs) {
    if (is_builtin(spec)) {
        return builtin_map(spec, p, default_n);
    }
    return to_map(parse_document(inputs.read(spec)));
}

const char *verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string sci(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(10) << x;
    return s.str();
}

json report_json(const BipartiteState &rho, const CriterionReport &r, double tol) {
    json j;
    j["state"] = {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}};
    j["tolerance"] = tol;
    j["ppt"] = {{"min_eigenvalue", r.ppt.min_eigenvalue}, {"verdict", verdict(r.ppt.pass)}};
    j["realignment"] = {{"trace_norm", r.realignment.trace_norm}, {"verdict", verdict(r.realignment.pass)}};
    j["witnesses"] = json::array();
    for (const auto &w : r.witnesses) {
        j["witnesses"].push_back({{"map_label", w.map_label},
                                  {"side", std::string(to_string(w.side))},
                                  {"min_eigenvalue", w.min_eigenvalue},
                                  {"verdict", verdict(w.pass)}});
    }
    j["overall"] = r.entangled_detected() ? "entangled-detected" : "separable-consistent";
    return j;
}

void print_report(std::ostream &out, const BipartiteState &rho, const CriterionReport &r) {
    out << "state: " << rho.dim_a() << " x " << rho.dim_b() << "\n";
    out << "  PPT          min eigenvalue " << sci(r.ppt.min_eigenvalue) << "  " << verdict(r.ppt.pass) << "\n";
    out << "  realignment  trace norm     " << sci(r.realignment.trace_norm) << "  " << verdict(r.realignment.pass)
        << "\n";
    for (const auto &w : r.witnesses) {
        out << "  witness " << w.map_label << " (" << to_string(w.side) << ")  min eigenvalue "
            << sci(w.min_eigenvalue) << "  " << verdict(w.pass) << "\n";
    }
    out << "overall: " << (r.entangled_detected() ? "entangled-detected" : "separable-consistent") << "\n";
}

void add_map_params(CLI::App *cmd, MapParams &p) {
    cmd->add_option("--n", p.n, "Dimension for builtin maps (defaults to the acted factor)");
    cmd->add_option("--t", p.t, "Parameter t of the delta-t map");
    cmd->add_option("--coeffs-a", p.coeffs_a, "prop51 positive coefficient rows, e.g. \"1,1,1\" or \"1,1,1;0,1,2\"");
    cmd->add_option("--coeffs-b", p.coeffs_b, "prop51 negative coefficient rows");
}

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw std::invalid_argument("cannot write '" + out_path + "'");
    }
    file << text;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement detection with positive maps that are not completely positive"};
    app.name("ncp");
    app.require_subcommand(1);

    double tol = kDefaultTol;
    bool as_json = false;
    std::string side_text = "right";
    MapParams params;

    auto *analyze = app.add_subcommand("analyze", "Run the separability criteria battery on a state");
    std::string state_path;
    std::vector<std::string> map_specs;
    analyze->add_option("state", state_path, "State document, or - for standard input")->required();
    analyze->add_option("--map", map_specs, "Builtin map name or map/channel document (repeatable)");
    analyze->add_option("--side", side_text, "Factor the --map maps act on")->check(CLI::IsMember({"left", "right"}));
    analyze->add_option("--tol", tol, "Tolerance");
    analyze->add_flag("--json", as_json, "Emit a JSON report");
    add_map_params(analyze, params);

    auto *choi = app.add_subcommand("choi", "Complete-positivity verdict from the Choi matrix");
    std::string map_path;
    choi->add_option("map", map_path, "Map or channel document, builtin map name, or -")->required();
    choi->add_option("--tol", tol, "Tolerance");
    choi->add_flag("--json", as_json, "Emit JSON");
    add_map_params(choi, params);

    auto *witness = app.add_subcommand("witness", "Apply one positive map to one side of a state");
    std::string witness_state;
    std::string witness_map;
    bool spectrum = false;
    witness->add_option("state", witness_state, "State document, or -")->required();
    witness->add_option("map", witness_map, "Builtin map name or map document")->required();
    witness->add_option("--side", side_text, "Factor the map acts on")->check(CLI::IsMember({"left", "right"}));
    witness->add_option("--tol", tol, "Tolerance");
    witness->add_flag("--spectrum", spectrum, "Print the full spectrum");
    witness->add_flag("--json", as_json, "Emit JSON");
    add_map_params(witness, params);

    auto *gen = app.add_subcommand("gen", "Write a state, map or channel document");
    std::string gen_name;
    double a = 0;
    double b = 0;
    std::vector<std::size_t> dims = {3, 3};
    std::size_t terms = 4;
    std::size_t count = 2;
    std::uint64_t seed = 0;
    bool mixed = false;
    std::string out_path;
    gen->add_option("name", gen_name,
                    "rho | rho1 | separable | bell | channel | identity | transpose | reduction | delta-t | gamma | "
                    "gamma-prime | prop51")
        ->required();
    auto *a_opt = gen->add_option("--a", a, "Parameter a of rho");
    auto *b_opt = gen->add_option("--b", b, "Parameter b of rho");
    gen->add_option("--dims", dims, "Factor dimensions of a separable state")->expected(2);
    gen->add_option("--terms", terms, "Number of product terms of a separable state");
    gen->add_option("--count", count, "Number of Kraus operators of a random channel");
    gen->add_option("--seed", seed, "Random seed");
    gen->add_flag("--mixed", mixed, "Use mixed (Wishart) factors for separable states");
    gen->add_option("--out", out_path, "Output path (default: standard output)");
    add_map_params(gen, params);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kInputError;
    }

    Inputs inputs(in);
    try {
        Side side = parse_side(side_text);
        if (analyze->parsed()) {
            BipartiteState rho = to_state(parse_document(inputs.read(state_path)), tol);
            std::vector<MapOnSide> maps;
            if (map_specs.empty()) {
                maps = default_battery(rho.dim_a(), rho.dim_b());
            } else {
                std::size_t acted = side == Side::Right ? rho.dim_b() : rho.dim_a();
                for (const auto &spec : map_specs) {
                    maps.push_back({resolve_map(spec, params, acted, inputs), side});
                }
            }
            CriterionReport report = run_battery(rho, maps, tol);
            if (as_json) {
                out << report_json(rho, report, tol).dump(2) << "\n";
            } else {
                print_report(out, rho, report);
            }
            return report.entangled_detected() ? kPositive : kNegative;
        }
        if (choi->parsed()) {
            ElementaryOperator phi = resolve_map(map_path, params, 3, inputs);
            CpResult cp = is_completely_positive(phi, tol);
            FilterReport f = ncp_quick_filters(phi);
            if (as_json) {
                json j = {{"label", phi.label()},
                          {"completely_positive", cp.completely_positive},
                          {"min_choi_eigenvalue", cp.min_choi_eigenvalue},
                          {"filters",
                           {{"plus_count", f.plus_count},
                            {"minus_count", f.minus_count},
                            {"few_plus_terms", f.few_plus_terms},
                            {"independent_at_sample", f.independent_at_sample},
                            {"max_sampled_rank", f.max_sampled_rank},
                            {"ncp_possible", f.ncp_possible}}}};
                out << j.dump(2) << "\n";
            } else {
                out << "map: " << (phi.label().empty() ? "(unlabeled)" : phi.label()) << " (" << phi.dim_in()
                    << " -> " << phi.dim_out() << ", " << f.plus_count << " plus / " << f.minus_count
                    << " minus Kraus terms)\n";
                out << "  min Choi eigenvalue " << sci(cp.min_choi_eigenvalue) << "\n";
                out << "  completely positive: " << (cp.completely_positive ? "yes" : "no") << "\n";
                out << "  filters: k<=2 " << (f.few_plus_terms ? "fires" : "no")
                    << "; independent A_i psi at sample " << (f.independent_at_sample ? "fires" : "no")
                    << " (max rank " << f.max_sampled_rank << "); k>=3 " << (f.ncp_possible ? "yes" : "no")
                    << "\n";
                if (f.cp_if_positive()) {
                    out << "  note: if this map is positive it is completely positive\n";
                }
            }
            return cp.completely_positive ? kNegative : kPositive;
        }
        if (witness->parsed()) {
            BipartiteState rho = to_state(parse_document(inputs.read(witness_state)), tol);
            std::size_t acted = side == Side::Right ? rho.dim_b() : rho.dim_a();
            ElementaryOperator phi = resolve_map(witness_map, params, acted, inputs);
            ComplexMatrix image = apply_map_side(rho, phi, side);
            std::vector<double> values = hermitian_eigenvalues(image, std::max(tol, 1e-9));
            bool pass = values.front() >= -tol;
            if (as_json) {
                json j = {{"map_label", phi.label()},
                          {"side", std::string(to_string(side))},
                          {"min_eigenvalue", values.front()},
                          {"verdict", verdict(pass)}};
                if (spectrum) {
                    j["spectrum"] = values;
                }
                out << j.dump(2) << "\n";
            } else {
                out << "witness " << phi.label() << " (" << to_string(side) << ")  min eigenvalue "
                    << sci(values.front()) << "  " << verdict(pass) << "\n";
                if (spectrum) {
                    out << "spectrum:\n";
                    for (double v : values) {
                        out << "  " << std::setprecision(17) << v << "\n";
                    }
                }
            }
            return pass ? kNegative : kPositive;
        }
        if (gen->parsed()) {
            MatrixDocument doc;
            if (gen_name == "rho") {
                if (a_opt->count() == 0 || b_opt->count() == 0) {
                    throw std::invalid_argument("gen rho requires --a and --b");
                }
                doc = to_document(paper_state_rho(a, b));
            } else if (gen_name == "rho1") {
                doc = to_document(paper_state_rho1());
            } else if (gen_name == "separable") {
                doc = to_document(
                    random_separable(dims[0], dims[1], terms, seed, mixed ? FactorKind::Mixed : FactorKind::Pure));
            } else if (gen_name == "bell") {
                doc = to_document(bell_state());
            } else if (gen_name == "channel") {
                std::size_t n = params.n != 0 ? params.n : 2;
                doc = to_document(random_channel(n, n, count, seed));
            } else if (is_builtin(gen_name)) {
                doc = to_document(builtin_map(gen_name, params, 3));
            } else {
                throw std::invalid_argument("gen: unknown name '" + gen_name + "'");
            }
            emit(serialize(doc), out_path, out);
            return kNegative;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace ncp::cli
