// Copyright 2026 The stabgrid Authors
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

#include "stabgrid/io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stabgrid::io {

namespace {
constexpr char kShotMagic[8] = {'S', 'G', 'S', 'H', 'O', 'T', '0', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
    char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    if (!in) throw std::runtime_error("truncated shot table header");
    return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
           (static_cast<std::uint32_t>(bytes[2]) << 16) |
           (static_cast<std::uint32_t>(bytes[3]) << 24);
}
}  // namespace

json lattice_to_json(const Lattice& lattice) {
    json j;
    j["shape"] = shape_name(lattice.shape());
    json params;
    switch (lattice.shape()) {
        case Shape::Grid:
            params["rows"] = lattice.shape_params()[0];
            params["cols"] = lattice.shape_params()[1];
            break;
        case Shape::TriFixed:
            params["rows"] = lattice.shape_params()[0];
            params["width"] = lattice.shape_params()[1];
            break;
        case Shape::Triangle: params["side"] = lattice.shape_params()[0]; break;
        case Shape::Path: params["sites"] = lattice.shape_params()[0]; break;
        case Shape::Custom: params["sites"] = lattice.num_sites(); break;
    }
    j["params"] = params;
    if (lattice.shape() == Shape::Custom || !lattice.is_binary()) {
        json weights = json::array();
        std::size_t n = lattice.num_sites();
        for (std::size_t r = 0; r < n; r++) {
            json row = json::array();
            for (std::size_t c = 0; c < n; c++) row.push_back(lattice.weight(r, c));
            weights.push_back(row);
        }
        j["weights"] = weights;
    }
    json coords = json::array();
    for (const auto& c : lattice.coords()) coords.push_back({c[0], c[1]});
    j["coords"] = coords;
    return j;
}

LatticePtr lattice_from_json(const json& j) {
    Shape shape = shape_from_name(j.at("shape").get<std::string>());
    const json& params = j.at("params");
    std::vector<std::array<double, 2>> coords;
    if (j.contains("coords")) {
        for (const auto& c : j.at("coords")) {
            coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
        }
    }
    if (j.contains("weights")) {
        const json& w = j.at("weights");
        std::size_t n = w.size();
        std::vector<double> weights(n * n, 0.0);
        for (std::size_t r = 0; r < n; r++) {
            if (w.at(r).size() != n) throw std::invalid_argument("weights matrix must be square");
            for (std::size_t c = 0; c < n; c++) weights[r * n + c] = w.at(r).at(c).get<double>();
        }
        if (shape != Shape::Custom) {
            throw std::invalid_argument("explicit weights are only supported for custom lattices");
        }
        return make_custom(n, weights, std::move(coords));
    }
    switch (shape) {
        case Shape::Grid:
            return make_grid(params.at("rows").get<std::size_t>(),
                             params.at("cols").get<std::size_t>());
        case Shape::TriFixed:
            return make_tri_fixed(params.at("rows").get<std::size_t>(),
                                  params.at("width").get<std::size_t>());
        case Shape::Triangle: return make_triangle(params.at("side").get<std::size_t>());
        case Shape::Path: return make_path(params.at("sites").get<std::size_t>());
        case Shape::Custom:
            throw std::invalid_argument("custom lattices require a weights matrix");
    }
    throw std::logic_error("unreachable");
}

json pauli_to_json(const PauliOperator& p) {
    return json{{"x", p.x.to_string()}, {"z", p.z.to_string()}, {"phase", p.phase_exp}};
}

PauliOperator pauli_from_json(const json& j) {
    return PauliOperator(gf2::BitVec::from_string(j.at("x").get<std::string>()),
                         gf2::BitVec::from_string(j.at("z").get<std::string>()),
                         static_cast<std::uint8_t>(j.at("phase").get<int>()));
}

json set_to_json(const StabilizerSet& set) {
    json ops = json::array();
    for (const auto& op : set.ops) {
        json o = pauli_to_json(op);
        o["text"] = to_text(op);
        ops.push_back(o);
    }
    return json{{"lattice", lattice_to_json(*set.lattice)}, {"ops", ops}};
}

StabilizerSet set_from_json(const json& j) {
    StabilizerSet set;
    set.lattice = lattice_from_json(j.at("lattice"));
    for (const auto& o : j.at("ops")) set.ops.push_back(pauli_from_json(o));
    for (const auto& op : set.ops) {
        if (op.num_sites() != set.lattice->num_sites()) {
            throw std::invalid_argument("operator length does not match the lattice");
        }
    }
    return set;
}

json breakdown_to_json(const PenaltyBreakdown& breakdown) {
    json edges = json::array();
    for (const auto& [pair, value] : breakdown.per_edge) {
        edges.push_back({{"j", pair.first + 1}, {"k", pair.second + 1}, {"value", value}});
    }
    return json{{"per_stabilizer", breakdown.per_stabilizer},
                {"total", breakdown.total},
                {"per_edge", edges}};
}

json xpattern_to_json(const XPattern& pattern) {
    json j{{"bits", pattern.member.to_string()}};
    if (!pattern.row_structure.empty()) j["rows"] = pattern.row_structure;
    return j;
}

XPattern xpattern_from_json(const json& j) {
    XPattern pattern;
    pattern.member = gf2::BitVec::from_string(j.at("bits").get<std::string>());
    if (j.contains("rows")) {
        pattern.row_structure = j.at("rows").get<std::vector<std::size_t>>();
    }
    return pattern;
}

json pattern_to_json(const MeasurementPattern& pattern) {
    std::string basis, resolved;
    for (std::size_t q = 0; q < pattern.num_sites(); q++) {
        basis.push_back(static_cast<char>(pattern.basis[q]));
        resolved.push_back(static_cast<char>(pattern.resolved_at(q)));
    }
    return json{{"basis", basis}, {"resolved", resolved}};
}

MeasurementPattern pattern_from_json(const json& j) {
    MeasurementPattern pattern;
    for (char c : j.at("basis").get<std::string>()) {
        switch (c) {
            case 'X': pattern.basis.push_back(MeasBasis::X); break;
            case 'Y': pattern.basis.push_back(MeasBasis::Y); break;
            case 'Z': pattern.basis.push_back(MeasBasis::Z); break;
            case '.': pattern.basis.push_back(MeasBasis::Free); break;
            default: throw std::invalid_argument("pattern basis must use X, Y, Z or '.'");
        }
    }
    return pattern;
}

json plan_to_json(const std::vector<MeasurementPattern>& plan, const Lattice& lattice) {
    json patterns = json::array();
    double total = 0.0;
    for (const auto& p : plan) {
        json pj = pattern_to_json(p);
        double pen = pattern_penalty(p, lattice);
        pj["penalty"] = pen;
        total += pen;
        patterns.push_back(pj);
    }
    return json{{"patterns", patterns}, {"total_penalty", total}};
}

std::vector<MeasurementPattern> plan_from_json(const json& j) {
    std::vector<MeasurementPattern> plan;
    for (const auto& p : j.at("patterns")) plan.push_back(pattern_from_json(p));
    return plan;
}

json basis_to_json(const OptimizedBasis& basis) {
    json j = set_to_json(basis.set);
    j["total_penalty"] = basis.total_penalty;
    j["mode"] = basis.mode == OptimizerMode::Exact ? "exact" : "heuristic";
    j["certificate"] = basis.certificate;
    j["penalty"] = breakdown_to_json(total_penalty(basis.set));
    return j;
}

json report_to_json(const EstimationReport& report) {
    json per = json::array();
    for (const auto& e : report.per_stabilizer) {
        per.push_back({{"mean", e.mean},
                       {"std_error", e.std_error},
                       {"pattern", e.pattern_index},
                       {"shots_used", e.shots_used}});
    }
    return json{{"per_stabilizer", per},
                {"shots_per_pattern", report.shots_per_pattern},
                {"fidelity_bound", report.fidelity_bound}};
}

VacancyPolicy vacancy_policy_from_name(const std::string& name) {
    if (name == "plus") return VacancyPolicy::Plus;
    if (name == "minus") return VacancyPolicy::Minus;
    if (name == "skip") return VacancyPolicy::Skip;
    throw std::invalid_argument("vacancy policy must be plus, minus or skip");
}

std::string vacancy_policy_name(VacancyPolicy policy) {
    switch (policy) {
        case VacancyPolicy::Plus: return "plus";
        case VacancyPolicy::Minus: return "minus";
        case VacancyPolicy::Skip: return "skip";
    }
    throw std::logic_error("unreachable");
}

void write_shot_table(std::ostream& out, const ShotTable& table) {
    out.write(kShotMagic, sizeof(kShotMagic));
    put_u32(out, table.shots);
    put_u32(out, table.num_sites);
    out.write(reinterpret_cast<const char*>(table.data.data()),
              static_cast<std::streamsize>(table.data.size()));
}

ShotTable read_shot_table(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kShotMagic, sizeof(magic)) != 0) {
        throw std::runtime_error("not a stabgrid shot table (bad magic)");
    }
    ShotTable table;
    table.shots = get_u32(in);
    table.num_sites = get_u32(in);
    table.data.resize(static_cast<std::size_t>(table.shots) * table.num_sites);
    in.read(reinterpret_cast<char*>(table.data.data()),
            static_cast<std::streamsize>(table.data.size()));
    if (!in) throw std::runtime_error("truncated shot table payload");
    return table;
}

void write_shot_table_csv(std::ostream& out, const ShotTable& table) {
    for (std::uint32_t s = 0; s < table.shots; s++) {
        for (std::uint32_t q = 0; q < table.num_sites; q++) {
            if (q) out << ',';
            out << static_cast<int>(table.at(s, q));
        }
        out << '\n';
    }
}

ShotTable read_shot_table_csv(std::istream& in) {
    ShotTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::uint32_t sites = 0;
        while (std::getline(row, cell, ',')) {
            int v = std::stoi(cell);
            if (v < -1 || v > 1) throw std::runtime_error("shot values must be -1, 0 or 1");
            table.data.push_back(static_cast<std::int8_t>(v));
            sites++;
        }
        if (table.num_sites == 0) {
            table.num_sites = sites;
        } else if (sites != table.num_sites) {
            throw std::runtime_error("ragged CSV shot table");
        }
        table.shots++;
    }
    return table;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace stabgrid::io

namespace stabgrid {

namespace {
std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) throw std::invalid_argument("expected WxH dimensions: " + text);
    return {std::stoul(text.substr(0, x)), std::stoul(text.substr(x + 1))};
}
}  // namespace

LatticePtr lattice_from_shorthand(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("lattice shorthand must look like grid:RxC, tri:WxH, "
                                    "triangle:R, path:N or file:PATH (got '" + text + "')");
    }
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (kind == "grid") {
            auto [rows, cols] = parse_dims(rest);
            return make_grid(rows, cols);
        }
        if (kind == "tri") {
            auto [width, height] = parse_dims(rest);
            return make_tri_fixed(height, width);
        }
        if (kind == "triangle") return make_triangle(std::stoul(rest));
        if (kind == "path") return make_path(std::stoul(rest));
        if (kind == "file") return io::lattice_from_json(io::json::parse(io::read_file(rest)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad lattice shorthand '" + text + "': " + e.what());
    }
    throw std::invalid_argument("unknown lattice kind '" + kind + "'");
}

}  // namespace stabgrid
