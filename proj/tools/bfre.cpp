#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bfre/oracle.hpp"
#include "bfre/result.hpp"
#include "bfre/system_solver.hpp"

namespace {

// exit codes: 0 solvable / verified, 1 unsolvable, 2 input error,
// 3 resource cap exceeded, 4 verification failure

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bfre::ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bfre::ParseError("cannot write \"" + path + "\"");
    out << content;
}

std::string format_tuple(const bfre::Assignment& x) {
    std::string out = "(";
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j) out += ", ";
        out += x[j].str();
    }
    return out + ")";
}

int run_check(const std::string& path, const bfre::SolverOptions& opts) {
    bfre::BipolarSystem sys = bfre::parse_system(read_file(path));
    bfre::ResultDocument doc;
    doc.solvable = bfre::solvable_system(sys, opts);
    std::cout << doc.to_json();
    return doc.solvable ? 0 : 1;
}

int run_solve(const std::string& path, const bfre::SolverOptions& opts,
              const bfre::FieldSelection& fields) {
    bfre::BipolarSystem sys = bfre::parse_system(read_file(path));
    bfre::SolutionSummary summary = bfre::summarize(sys, opts);
    std::cout << bfre::make_result(summary, fields).to_json();
    return summary.solvable ? 0 : 1;
}

int run_gen(const std::string& out_path, std::uint64_t seed, std::size_t m, std::size_t n,
            unsigned q) {
    bfre::PlantedInstance inst = bfre::plant_instance(seed, m, n, q);
    write_file(out_path, bfre::serialize_system(inst.system));

    std::string sidecar = out_path;
    const std::string ext = ".json";
    if (sidecar.size() >= ext.size() &&
        sidecar.compare(sidecar.size() - ext.size(), ext.size(), ext) == 0)
        sidecar.resize(sidecar.size() - ext.size());
    sidecar += ".planted.json";

    nlohmann::ordered_json side;
    side["seed"] = seed;
    side["m"] = m;
    side["n"] = n;
    side["q"] = q;
    nlohmann::ordered_json tuple = nlohmann::ordered_json::array();
    for (const bfre::Scalar& v : inst.planted) tuple.push_back(v.str());
    side["planted"] = std::move(tuple);
    write_file(sidecar, side.dump(2) + "\n");

    std::cout << "wrote " << out_path << " and " << sidecar << "\n";
    return 0;
}

int run_verify(const std::string& instance_path, const std::string& result_path, unsigned q) {
    bfre::BipolarSystem sys = bfre::parse_system(read_file(instance_path));
    bfre::ResultDocument doc = bfre::ResultDocument::from_json(read_file(result_path));
    const bfre::GridSpec grid{q, 10'000'000};

    std::vector<std::string> violations;
    auto solves = [&](const bfre::Assignment& x, const std::string& label) {
        if (x.size() != sys.cols()) {
            violations.push_back(label + " " + format_tuple(x) + ": expected " +
                                 std::to_string(sys.cols()) + " components");
            return false;
        }
        if (!bfre::is_solution(sys, x)) {
            violations.push_back(label + " " + format_tuple(x) + ": not a solution");
            return false;
        }
        return true;
    };

    if (doc.feasible_pairs) {
        for (std::size_t i = 0; i < doc.feasible_pairs->size(); ++i) {
            const bfre::FeasiblePair& pair = (*doc.feasible_pairs)[i];
            try {
                if (!bfre::is_feasible_pair(sys, pair))
                    violations.push_back("feasible_pairs[" + std::to_string(i + 1) +
                                         "]: pair is not feasible");
            } catch (const bfre::DimensionError& e) {
                violations.push_back("feasible_pairs[" + std::to_string(i + 1) + "]: " +
                                     e.what());
            }
        }
    }

    const bool wants_grid = (doc.greatest && doc.greatest->has_value()) || doc.maximal ||
                            (doc.lower && !doc.lower->tuples.empty());
    std::vector<bfre::Assignment> sols;
    if (wants_grid) sols = bfre::grid_solutions(sys, grid);

    auto dominated_by = [](const bfre::Assignment& low, const bfre::Assignment& high) {
        for (std::size_t j = 0; j < low.size(); ++j)
            if (!(low[j] <= high[j])) return false;
        return true;
    };

    auto check_above = [&](const bfre::Assignment& x, const std::string& label) {
        for (const bfre::Assignment& y : sols)
            if (y != x && dominated_by(x, y)) {
                violations.push_back(label + " " + format_tuple(x) +
                                     ": grid solution strictly above: " + format_tuple(y));
                return;
            }
    };
    auto check_below = [&](const bfre::Assignment& x, const std::string& label) {
        for (const bfre::Assignment& y : sols)
            if (y != x && dominated_by(y, x)) {
                violations.push_back(label + " " + format_tuple(x) +
                                     ": grid solution strictly below: " + format_tuple(y));
                return;
            }
    };

    if (doc.greatest && doc.greatest->has_value()) {
        const bfre::Assignment& top = **doc.greatest;
        if (solves(top, "greatest")) {
            check_above(top, "greatest");
            for (const bfre::Assignment& y : sols)
                if (!dominated_by(y, top)) {
                    violations.push_back("greatest " + format_tuple(top) +
                                         ": does not dominate grid solution " + format_tuple(y));
                    break;
                }
        }
    }

    if (doc.maximal)
        for (const bfre::Assignment& x : *doc.maximal)
            if (solves(x, "maximal")) check_above(x, "maximal");

    if (doc.lower) {
        if (doc.lower->kind == bfre::LowerDescription::Kind::least) {
            for (const bfre::Assignment& x : doc.lower->tuples)
                if (solves(x, "least")) {
                    for (const bfre::Assignment& y : sols)
                        if (!dominated_by(x, y)) {
                            violations.push_back("least " + format_tuple(x) +
                                                 ": grid solution not above it: " +
                                                 format_tuple(y));
                            break;
                        }
                }
        } else if (doc.lower->kind == bfre::LowerDescription::Kind::finite_minimals) {
            for (const bfre::Assignment& x : doc.lower->tuples)
                if (solves(x, "minimal")) check_below(x, "minimal");
        }
    }

    for (const std::string& v : violations) std::cout << "violation: " << v << "\n";
    if (!violations.empty()) return 4;
    std::cout << "ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for systems of bipolar max-product fuzzy relation equations"};
    app.require_subcommand(1);

    bfre::SolverOptions opts;

    auto* check = app.add_subcommand("check", "report whether an instance is solvable");
    std::string check_path;
    check->add_option("instance", check_path, "instance JSON file")->required();
    check->add_option("--cap", opts.cap, "enumeration width cap");

    auto* solve = app.add_subcommand("solve", "solve an instance and print a result document");
    std::string solve_path;
    bool f_pairs = false, f_greatest = false, f_maximal = false, f_minimal = false,
         f_least = false, f_all = false;
    solve->add_option("instance", solve_path, "instance JSON file")->required();
    solve->add_flag("--pairs", f_pairs, "include the feasible pairs");
    solve->add_flag("--greatest", f_greatest, "include the greatest solution");
    solve->add_flag("--maximal", f_maximal, "include all maximal solutions");
    solve->add_flag("--minimal", f_minimal, "include the lower description");
    solve->add_flag("--least", f_least, "include the lower description");
    solve->add_flag("--all", f_all, "include every field (default)");
    solve->add_option("--cap", opts.cap, "enumeration width cap");
    solve->add_option("--threads", opts.threads, "worker count for the partition sweep");

    auto* gen = app.add_subcommand("gen", "generate a solvable instance with a planted tuple");
    std::string gen_path;
    std::uint64_t gen_seed = 1;
    std::size_t gen_m = 0, gen_n = 0;
    unsigned gen_q = 10;
    gen->add_option("output", gen_path, "instance file to write")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-m,--cols", gen_m, "number of unknowns")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("-n,--rows", gen_n, "number of equations")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--q", gen_q, "grid denominator for drawn values")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "check a result document against an instance");
    std::string verify_instance, verify_result;
    unsigned verify_q = 20;
    verify->add_option("instance", verify_instance, "instance JSON file")->required();
    verify->add_option("result", verify_result, "result JSON file")->required();
    verify->add_option("--q", verify_q, "grid denominator for refutation sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return run_check(check_path, opts);
        if (app.got_subcommand(solve)) {
            bfre::FieldSelection fields;
            const bool any = f_pairs || f_greatest || f_maximal || f_minimal || f_least;
            if (!f_all && any) {
                fields.pairs = f_pairs;
                fields.greatest = f_greatest;
                fields.maximal = f_maximal;
                fields.lower = f_minimal || f_least;
            }
            return run_solve(solve_path, opts, fields);
        }
        if (app.got_subcommand(gen)) return run_gen(gen_path, gen_seed, gen_m, gen_n, gen_q);
        if (app.got_subcommand(verify)) return run_verify(verify_instance, verify_result, verify_q);
    } catch (const bfre::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bfre::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
