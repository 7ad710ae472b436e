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

#include "stabgrid/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabgrid/estimator.hpp"
#include "stabgrid/hctf.hpp"
#include "stabgrid/io.hpp"
#include "stabgrid/optimizer.hpp"
#include "stabgrid/penalty.hpp"
#include "stabgrid/planner.hpp"
#include "stabgrid/render.hpp"

namespace stabgrid {

namespace {

using io::json;

// Flag values that fail to parse are usage errors (exit 2), unlike domain
// failures inside the library (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    std::ostringstream s;
    s << v;
    return s.str();
}

LatticePtr parse_lattice(const std::string& shorthand) {
    try {
        return lattice_from_shorthand(shorthand);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const std::string& out_path, const std::string& contents, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << contents;
    } else {
        io::write_file(out_path, contents);
    }
}

StabilizerSet load_set(const std::string& set_arg, const LatticePtr& lattice) {
    if (set_arg.empty() || set_arg == "canonical") return canonical_set(lattice);
    StabilizerSet set = io::set_from_json(json::parse(io::read_file(set_arg)));
    if (lattice && set.lattice->num_sites() != lattice->num_sites()) {
        throw std::invalid_argument("set file was built for a different lattice size");
    }
    return set;
}

PlanOrder parse_order(const std::string& name) {
    if (name == "given") return PlanOrder::Given;
    if (name == "penalty-ascending") return PlanOrder::PenaltyAscending;
    if (name == "random-seeded") return PlanOrder::RandomSeeded;
    throw UsageError("--order must be given, penalty-ascending or random-seeded");
}

struct CommonFlags {
    std::string lattice;
    std::string set;
    std::string method;
    std::string order = "given";
    std::string format;
    std::string vacancy_policy = "minus";
    std::string out;
    std::size_t max_rows = 0;
    std::size_t degree = 2;
    std::uint32_t shots = 10000;
    double p_flip = 0.0;
    double p_vacancy = 0.0;
    std::uint64_t seed = 0;
    int threads = 0;
    std::vector<std::string> paths;
};

int run_lattice(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    std::string format = f.format.empty() ? "json" : f.format;
    if (format == "json") {
        emit(f.out, io::lattice_to_json(*lattice).dump(2) + "\n", out);
    } else if (format == "dot") {
        emit(f.out, render::dot_export(*lattice), out);
    } else if (format == "svg") {
        emit(f.out, render::svg_export(*lattice), out);
    } else {
        throw UsageError("--format must be json, dot or svg");
    }
    return 0;
}

int run_canonical(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    StabilizerSet set = canonical_set(lattice);
    for (const auto& op : set.ops) out << to_text(op) << "\n";
    if (!f.out.empty()) io::write_file(f.out, io::set_to_json(set).dump(2) + "\n");
    return 0;
}

int run_score(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    StabilizerSet set = load_set(f.set, lattice);
    PenaltyBreakdown breakdown = total_penalty(set);
    out << "total " << format_number(breakdown.total) << "\n";
    if (!f.out.empty()) io::write_file(f.out, io::breakdown_to_json(breakdown).dump(2) + "\n");
    return 0;
}

int run_hctf(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    std::string method = f.method.empty() ? "kernel" : f.method;
    std::vector<XPattern> patterns;

    if (method == "kernel") {
        patterns = kernel_basis(*lattice);
    } else if (method.rfind("propagate:", 0) == 0) {
        gf2::BitVec initial;
        try {
            initial = gf2::BitVec::from_string(method.substr(10));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::size_t width = 0;
        Propagation prop;
        if (lattice->shape() == Shape::Grid) {
            width = lattice->shape_params()[1];
            if (initial.size() != width) throw UsageError("initial row must match the lattice width");
            prop = propagate_rectangular(width, initial, f.max_rows);
        } else if (lattice->shape() == Shape::TriFixed) {
            width = lattice->shape_params()[1];
            if (initial.size() != width) throw UsageError("initial row must match the lattice width");
            prop = propagate_triangular(width, initial, f.max_rows);
        } else {
            throw UsageError("propagate needs a grid or tri lattice");
        }
        out << (prop.terminated ? "terminated" : "budget exhausted, not terminated") << " after "
            << prop.rows.size() << " rows\n";
        if (prop.terminated && !prop.rows.empty()) patterns.push_back(stack_rows(prop, width));
    } else if (method == "triangle") {
        if (lattice->shape() != Shape::Triangle) throw UsageError("triangle method needs triangle:R");
        patterns = triangle_canonical_hctf(lattice->shape_params()[0]);
    } else if (method.rfind("tiling:", 0) == 0) {
        std::size_t k = 0, l = 0;
        std::string dims = method.substr(7);
        auto x = dims.find('x');
        if (x == std::string::npos) throw UsageError("tiling method must look like tiling:KxL");
        try {
            k = std::stoul(dims.substr(0, x));
            l = std::stoul(dims.substr(x + 1));
        } catch (const std::exception&) {
            throw UsageError("tiling method must look like tiling:KxL");
        }
        if (f.set.empty()) throw UsageError("tiling needs --set pointing at a base pattern JSON");
        json parsed = json::parse(io::read_file(f.set));
        if (parsed.contains("patterns")) {  // wrapper emitted by `hctf --out`
            if (parsed.at("patterns").size() != 1) {
                throw std::invalid_argument("base pattern file holds " +
                                            std::to_string(parsed.at("patterns").size()) +
                                            " patterns; extract one");
            }
            parsed = parsed.at("patterns").at(0);
        }
        XPattern base = io::xpattern_from_json(parsed);
        patterns.push_back(extended_tiling(base, k, l));
    } else {
        throw UsageError("--method must be kernel, propagate:BITS, triangle or tiling:KxL");
    }

    for (std::size_t i = 0; i < patterns.size(); i++) {
        out << "pattern " << (i + 1) << ":\n" << to_ascii(patterns[i]);
    }
    if (patterns.empty()) out << "no nontrivial patterns\n";
    if (!f.out.empty()) {
        json j = json::array();
        for (const auto& p : patterns) j.push_back(io::xpattern_to_json(p));
        io::write_file(f.out, json{{"patterns", j}}.dump(2) + "\n");
    }
    return 0;
}

int run_optimize(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    std::string method = f.method.empty() ? "exact" : f.method;
    OptimizedBasis basis;
    if (method == "exact") {
        basis = min_penalty_basis_exact(lattice);
    } else if (method == "heuristic") {
        basis = min_penalty_basis_heuristic(lattice, f.degree);
    } else {
        throw UsageError("--method must be exact or heuristic");
    }
    for (const auto& op : basis.set.ops) out << to_text(op) << "\n";
    out << "total " << format_number(basis.total_penalty) << "\n";
    if (!f.out.empty()) io::write_file(f.out, io::basis_to_json(basis).dump(2) + "\n");
    return 0;
}

int run_plan(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    StabilizerSet set = load_set(f.set, lattice);  // a set file keeps its own lattice
    std::vector<MeasurementPattern> plan = plan_patterns(set, parse_order(f.order), f.seed);

    const Lattice& scored_on = *set.lattice;
    double total = 0.0;
    for (std::size_t i = 0; i < plan.size(); i++) {
        double pen = pattern_penalty(plan[i], scored_on);
        total += pen;
        out << "pattern " << (i + 1) << " (penalty " << format_number(pen) << "):\n"
            << render::ascii_pattern(scored_on, plan[i]);
        out << "covers:";
        for (std::size_t s = 0; s < set.size(); s++) {
            if (pattern_covers(plan[i], set.ops[s])) out << ' ' << (s + 1);
        }
        out << "\n";
    }
    out << "patterns " << plan.size() << "\n";
    out << "total " << format_number(total) << "\n";
    if (!f.out.empty()) io::write_file(f.out, io::plan_to_json(plan, scored_on).dump(2) + "\n");
    return 0;
}

int run_simulate(const CommonFlags& f, std::ostream& out) {
    if (f.paths.size() != 1) throw UsageError("simulate needs one plan file argument");
    LatticePtr lattice = parse_lattice(f.lattice);
    std::vector<MeasurementPattern> plan =
        io::plan_from_json(json::parse(io::read_file(f.paths[0])));
    if (f.out.empty()) throw UsageError("simulate needs --out PREFIX for the shot tables");

    NoiseModel noise;
    noise.p_flip = f.p_flip;
    noise.p_vacancy = f.p_vacancy;
    noise.vacancy_policy = io::vacancy_policy_from_name(f.vacancy_policy);
    noise.seed = f.seed;

    std::string format = f.format.empty() ? "bin" : f.format;
    if (format != "bin" && format != "csv") throw UsageError("--format must be bin or csv");
    for (std::size_t i = 0; i < plan.size(); i++) {
        ShotTable table = simulate_pattern(*lattice, plan[i], f.shots, noise);
        std::string path = f.out + ".p" + std::to_string(i) + "." + format;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + path);
        if (format == "bin") {
            io::write_shot_table(file, table);
        } else {
            io::write_shot_table_csv(file, table);
        }
        out << "wrote " << path << " (" << table.shots << " shots x " << table.num_sites
            << " sites)\n";
        noise.seed = f.seed + i + 1;  // one independent stream per pattern
    }
    return 0;
}

int run_estimate(const CommonFlags& f, std::ostream& out) {
    if (f.paths.size() != 3) {
        throw UsageError("estimate needs SET.json PLAN.json SHOTPREFIX arguments");
    }
    StabilizerSet set = io::set_from_json(json::parse(io::read_file(f.paths[0])));
    if (!f.lattice.empty()) {
        LatticePtr lattice = parse_lattice(f.lattice);
        if (lattice->num_sites() != set.lattice->num_sites()) {
            throw std::invalid_argument("--lattice disagrees with the set file");
        }
    }
    std::vector<MeasurementPattern> plan =
        io::plan_from_json(json::parse(io::read_file(f.paths[1])));
    std::string format = f.format.empty() ? "bin" : f.format;
    if (format != "bin" && format != "csv") throw UsageError("--format must be bin or csv");

    std::vector<ShotTable> tables;
    for (std::size_t i = 0; i < plan.size(); i++) {
        std::string path = f.paths[2] + ".p" + std::to_string(i) + "." + format;
        std::ifstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + path);
        tables.push_back(format == "bin" ? io::read_shot_table(file)
                                         : io::read_shot_table_csv(file));
    }
    EstimationReport report =
        estimate_set(tables, set, plan, io::vacancy_policy_from_name(f.vacancy_policy));
    for (std::size_t i = 0; i < report.per_stabilizer.size(); i++) {
        const auto& e = report.per_stabilizer[i];
        out << "stabilizer " << (i + 1) << " mean " << e.mean << " stderr " << e.std_error
            << " (pattern " << (e.pattern_index + 1) << ", shots " << e.shots_used << ")\n";
    }
    out << "fidelity_bound " << report.fidelity_bound << "\n";
    if (!f.out.empty()) io::write_file(f.out, io::report_to_json(report).dump(2) + "\n");
    return 0;
}

int run_render(const CommonFlags& f, std::ostream& out) {
    LatticePtr lattice = parse_lattice(f.lattice);
    std::string format = f.format.empty() ? "ascii" : f.format;

    std::vector<PauliOperator> overlays;
    if (!f.set.empty()) overlays = load_set(f.set, lattice).ops;

    std::string output;
    if (format == "ascii") {
        if (overlays.empty()) {
            std::string letters(lattice->num_sites(), 'o');
            output = render::ascii_sites(*lattice, letters);
        } else {
            for (const auto& op : overlays) {
                output += to_text(op) + "\n" + render::ascii_operator(*lattice, op) + "\n";
            }
        }
    } else if (format == "dot") {
        output = render::dot_export(*lattice, overlays.empty() ? nullptr : &overlays.front());
    } else if (format == "svg") {
        output = render::svg_export(*lattice, overlays.empty() ? nullptr : &overlays.front());
    } else {
        throw UsageError("--format must be ascii, dot or svg");
    }
    emit(f.out, output, out);
    return 0;
}

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool lattice_required = true) {
    auto* opt = cmd->add_option("--lattice", f.lattice,
                                "Lattice shorthand: grid:RxC, tri:WxH, triangle:R, path:N, file:PATH");
    if (lattice_required) opt->required();
    cmd->add_option("--threads", f.threads, "Worker thread cap (default $STABGRID_THREADS)");
    cmd->add_option("--out", f.out, "Output path");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross-talk-minimizing stabilizer planning for cluster states"};
    app.require_subcommand(1);

    CommonFlags f;
    if (const char* env = std::getenv("STABGRID_THREADS")) {
        f.threads = std::atoi(env);
    }

    auto* lattice_cmd = app.add_subcommand("lattice", "Build a lattice and export it");
    add_common_flags(lattice_cmd, f);
    lattice_cmd->add_option("--format", f.format, "json, dot or svg (default json)");

    auto* canonical_cmd = app.add_subcommand("canonical", "Emit the canonical stabilizer set");
    add_common_flags(canonical_cmd, f);

    auto* score_cmd = app.add_subcommand("score", "Cross-talk penalty of a stabilizer set");
    add_common_flags(score_cmd, f);
    score_cmd->add_option("--set", f.set, "'canonical' or a set JSON path (default canonical)");

    auto* hctf_cmd = app.add_subcommand("hctf", "Homogeneous cross-talk-free stabilizers");
    add_common_flags(hctf_cmd, f);
    hctf_cmd->add_option("--method", f.method,
                         "kernel (default), propagate:BITS, triangle or tiling:KxL");
    hctf_cmd->add_option("--max-rows", f.max_rows, "Propagation row budget (default 4*width^2)");
    hctf_cmd->add_option("--set", f.set, "Base pattern JSON for tiling");

    auto* optimize_cmd = app.add_subcommand("optimize", "Minimum-penalty generating set");
    add_common_flags(optimize_cmd, f);
    optimize_cmd->add_option("--method", f.method, "exact (default) or heuristic");
    optimize_cmd->add_option("--degree", f.degree, "Heuristic product degree (default 2)");

    auto* plan_cmd = app.add_subcommand("plan", "Group stabilizers into measurement patterns");
    add_common_flags(plan_cmd, f);
    plan_cmd->add_option("--set", f.set, "'canonical' or a set JSON path (default canonical)");
    plan_cmd->add_option("--order", f.order, "given (default), penalty-ascending, random-seeded");
    plan_cmd->add_option("--seed", f.seed, "Seed for random-seeded order");

    auto* simulate_cmd = app.add_subcommand("simulate", "Sample noisy shots for a plan");
    add_common_flags(simulate_cmd, f);
    simulate_cmd->add_option("plan", f.paths, "Plan JSON path")->expected(1);
    simulate_cmd->add_option("--shots", f.shots, "Shots per pattern (default 10000)");
    simulate_cmd->add_option("--p-flip", f.p_flip, "Per-edge corruption probability");
    simulate_cmd->add_option("--p-vacancy", f.p_vacancy, "Per-site vacancy probability");
    simulate_cmd->add_option("--vacancy-policy", f.vacancy_policy, "plus, minus or skip");
    simulate_cmd->add_option("--seed", f.seed, "RNG seed (runs are bit-reproducible)");
    simulate_cmd->add_option("--format", f.format, "bin (default) or csv");

    auto* estimate_cmd = app.add_subcommand("estimate", "Estimate stabilizers and the fidelity bound");
    estimate_cmd->add_option("--lattice", f.lattice, "Optional consistency check");
    estimate_cmd->add_option("--threads", f.threads, "Worker thread cap");
    estimate_cmd->add_option("--out", f.out, "Report JSON path");
    estimate_cmd->add_option("inputs", f.paths, "SET.json PLAN.json SHOTPREFIX")->expected(3);
    estimate_cmd->add_option("--vacancy-policy", f.vacancy_policy, "plus, minus or skip");
    estimate_cmd->add_option("--format", f.format, "Shot table format: bin (default) or csv");

    auto* render_cmd = app.add_subcommand("render", "Diagrams of lattices and operators");
    add_common_flags(render_cmd, f);
    render_cmd->add_option("--set", f.set, "'canonical' or a set JSON path to overlay");
    render_cmd->add_option("--format", f.format, "ascii (default), dot or svg");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (f.threads > 0) omp_set_num_threads(f.threads);
#endif

    try {
        if (lattice_cmd->parsed()) return run_lattice(f, out);
        if (canonical_cmd->parsed()) return run_canonical(f, out);
        if (score_cmd->parsed()) return run_score(f, out);
        if (hctf_cmd->parsed()) return run_hctf(f, out);
        if (optimize_cmd->parsed()) return run_optimize(f, out);
        if (plan_cmd->parsed()) return run_plan(f, out);
        if (simulate_cmd->parsed()) return run_simulate(f, out);
        if (estimate_cmd->parsed()) return run_estimate(f, out);
        if (render_cmd->parsed()) return run_render(f, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace stabgrid
