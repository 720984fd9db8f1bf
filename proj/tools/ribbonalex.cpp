// ribbonalex: Conway-normalized Alexander polynomials of ribbon knots from
// combinatorial ribbon input.
//
// Subcommands: compute, convert, reduce, verify, enumerate, selftest.
// Exit codes: 0 success, 1 invalid input, 2 verification failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ribbon/alexander.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/io.hpp"
#include "ribbon/reductions.hpp"
#include "ribbon/rng.hpp"
#include "ribbon/seifert.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerificationFailure = 2;

std::string format_doubled(const ribbon::RibbonMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.genus; ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < m.genus; ++j) {
            if (j) out += ",";
            out += std::to_string(m.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        out += "]";
    }
    return out + "]";
}

ribbon::RibbonGraph load_validated_graph(const std::string& path) {
    ribbon::RibbonGraph g = ribbon::load_graph(path);
    auto errs = ribbon::validate(g);
    if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "error: [" << ribbon::to_string(e.kind) << "] " << e.message << "\n";
        throw CLI::RuntimeError(kExitInvalidInput);
    }
    return g;
}

ribbon::RibbonGraph load_graph_from_diagram(const std::string& path) {
    ribbon::RibbonDiagram d = ribbon::load_diagram(path);
    auto errs = ribbon::validate(d);
    if (!errs.empty()) {
        for (const auto& e : errs) std::cerr << "error: [" << ribbon::to_string(e.kind) << "] " << e.message << "\n";
        throw CLI::RuntimeError(kExitInvalidInput);
    }
    return ribbon::to_ribbon_graph(d);
}

int run_compute(const std::string& graph_path, const std::string& diagram_path, bool reduce, bool show_matrix) {
    ribbon::RibbonGraph g =
        graph_path.empty() ? load_graph_from_diagram(diagram_path) : load_validated_graph(graph_path);
    if (reduce) {
        auto [reduced, log] = ribbon::reduce_fully(g, /*use_r3=*/false);
        for (const auto& step : log) std::cout << step.to_string() << "\n";
        g = reduced;
    }
    ribbon::RibbonMatrix m = ribbon::ribbon_matrix(g);
    if (show_matrix) std::cout << "2R = " << format_doubled(m) << "\n";
    ribbon::AlexanderResult res = ribbon::analyze(m);
    std::cout << ribbon::format_report(res);
    ribbon::InvariantReport rep = ribbon::check_invariants(res);
    if (!rep.ok) {
        for (const auto& v : rep.violations) std::cerr << "error: invariant violated: " << v << "\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int run_convert(const std::string& diagram_path, const std::string& out_path) {
    ribbon::RibbonGraph g = load_graph_from_diagram(diagram_path);
    ribbon::write_file(out_path, ribbon::canonical_serialize(g) + "\n");
    return kExitOk;
}

int run_reduce(const std::string& graph_path, bool use_r3, const std::string& out_path) {
    ribbon::RibbonGraph g = load_validated_graph(graph_path);
    auto [reduced, log] = ribbon::reduce_fully(g, use_r3);
    for (const auto& step : log) std::cout << step.to_string() << "\n";
    ribbon::write_file(out_path, ribbon::canonical_serialize(reduced) + "\n");
    return kExitOk;
}

int run_verify(const std::string& graph_path, int samples, uint64_t seed, long long bound) {
    ribbon::RibbonGraph g = load_validated_graph(graph_path);
    ribbon::RibbonMatrix m = ribbon::ribbon_matrix(g);
    ribbon::OracleReport rep = ribbon::verify_l_independence(m, samples, seed, bound);
    if (rep.pass) {
        std::cout << "delta = " << rep.expected.to_string() << "\n";
        std::cout << rep.to_string() << "\n";
        return kExitOk;
    }
    std::cout << "expected = " << rep.expected.to_string() << "\n";
    std::cout << "got = " << rep.got.to_string() << "\n";
    std::cout << rep.to_string() << "\n";
    return kExitVerificationFailure;
}

int run_enumerate(int genus, bool distinct) {
    ribbon::EnumerationSpec spec{genus, distinct};
    if (distinct) {
        std::cout << ribbon::format_table(ribbon::tabulate(spec));
        return kExitOk;
    }
    ribbon::enumerate_graphs(spec, [](const ribbon::RibbonGraph& g) {
        ribbon::LaurentPoly delta = ribbon::conway_alexander(ribbon::half_alexander(ribbon::ribbon_matrix(g)));
        std::cout << "1\t" << delta.to_string() << "\t" << ribbon::canonical_serialize(g) << "\n";
    });
    return kExitOk;
}

// Every invariant sweep at desk scale; any violation is a verification
// failure.
int run_selftest(uint64_t seed) {
    int failures = 0;
    auto sweep = [&failures](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << "selftest: " << name << (ok ? ": ok" : ": FAILED") << (detail.empty() ? "" : " " + detail) << "\n";
        if (!ok) ++failures;
    };

    // enumeration counts against the closed formula, g <= 4
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g <= 4; ++g) {
            uint64_t n = 0;
            ribbon::enumerate_graphs({g, false}, [&n](const ribbon::RibbonGraph&) { ++n; });
            if (n != ribbon::enumeration_count(g)) {
                ok = false;
                detail = "genus " + std::to_string(g) + ": " + std::to_string(n) + " != " +
                         std::to_string(ribbon::enumeration_count(g));
                break;
            }
        }
        sweep("enumeration counts (g<=4)", ok, detail);
    }

    // Alexander invariants over the exhaustive g <= 3 population
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g <= 3 && ok; ++g)
            ribbon::enumerate_graphs({g, false}, [&](const ribbon::RibbonGraph& graph) {
                if (!ok) return;
                ribbon::AlexanderResult res = ribbon::analyze(ribbon::ribbon_matrix(graph));
                ribbon::InvariantReport rep = ribbon::check_invariants(res);
                if (!rep.ok) {
                    ok = false;
                    detail = ribbon::canonical_serialize(graph) + ": " + rep.violations.front();
                }
            });
        sweep("alexander invariants (exhaustive g<=3)", ok, detail);
    }

    // reduce_fully preserves Delta over the exhaustive g <= 3 population
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g <= 3 && ok; ++g)
            ribbon::enumerate_graphs({g, false}, [&](const ribbon::RibbonGraph& graph) {
                if (!ok) return;
                ribbon::LaurentPoly before =
                    ribbon::conway_alexander(ribbon::half_alexander(ribbon::ribbon_matrix(graph)));
                auto [reduced, log] = ribbon::reduce_fully(graph, /*use_r3=*/true);
                ribbon::LaurentPoly after =
                    ribbon::conway_alexander(ribbon::half_alexander(ribbon::ribbon_matrix(reduced)));
                if (before != after) {
                    ok = false;
                    detail = ribbon::canonical_serialize(graph);
                }
            });
        sweep("reduction soundness (exhaustive g<=3)", ok, detail);
    }

    // two matrix routes agree: exhaustive-style random diagrams
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 300 && ok; ++i) {
            ribbon::SampleRng rng(seed, static_cast<uint64_t>(i));
            int g = static_cast<int>(rng.uniform(0, 6));
            ribbon::RibbonDiagram d = ribbon::random_diagram(rng, g);
            ribbon::RibbonMatrix direct = ribbon::ribbon_matrix_direct(d);
            ribbon::RibbonMatrix via_graph = ribbon::ribbon_matrix(ribbon::to_ribbon_graph(d));
            if (direct.doubled != via_graph.doubled) {
                ok = false;
                detail = "sample " + std::to_string(i);
            }
        }
        sweep("diagram matrix routes (300 random g<=6)", ok, detail);
    }

    // Seifert oracle agrees with the graph route
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 60 && ok; ++i) {
            ribbon::SampleRng rng(seed, 1000 + static_cast<uint64_t>(i));
            int g = static_cast<int>(rng.uniform(0, 5));
            ribbon::RibbonGraph graph = ribbon::random_graph(rng, g);
            ribbon::OracleReport rep =
                ribbon::verify_l_independence(ribbon::ribbon_matrix(graph), 4, seed + static_cast<uint64_t>(i), 3);
            if (!rep.pass) {
                ok = false;
                detail = ribbon::canonical_serialize(graph) + " " + rep.to_string();
            }
        }
        sweep("seifert oracle (60 random graphs, 4 L each)", ok, detail);
    }

    // determinant routes agree on random polynomial matrices
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 150 && ok; ++i) {
            ribbon::SampleRng rng(seed, 2000 + static_cast<uint64_t>(i));
            int n = static_cast<int>(rng.uniform(0, 5));
            ribbon::PolyMatrix m(n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    for (int e = -1; e <= 1; ++e)
                        m.at(r, c) += ribbon::LaurentPoly::term(rng.uniform(-2, 2), e);
            if (ribbon::det(m) != ribbon::det_cofactor(m)) {
                ok = false;
                detail = "sample " + std::to_string(i);
            }
        }
        sweep("determinant routes (150 random matrices)", ok, detail);
    }

    std::cout << (failures == 0 ? "selftest: all sweeps passed" : "selftest: FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway-normalized Alexander polynomials of ribbon knots from ribbon graphs and diagrams"};
    app.require_subcommand(1);

    // compute
    std::string graph_path, diagram_path;
    bool reduce_flag = false, show_matrix = false;
    CLI::App* compute = app.add_subcommand("compute", "full pipeline: input -> 2R -> R(t) -> delta(t)");
    CLI::Option* gopt = compute->add_option("--graph", graph_path, "ribbon graph file");
    CLI::Option* dopt = compute->add_option("--diagram", diagram_path, "ribbon diagram file");
    gopt->excludes(dopt);
    dopt->excludes(gopt);
    compute->add_flag("--reduce", reduce_flag, "apply R0/R1/R2 reductions first and print the step log");
    compute->add_flag("--show-matrix", show_matrix, "print the doubled ribbon matrix 2R");

    // convert
    std::string conv_diagram, conv_out;
    CLI::App* convert = app.add_subcommand("convert", "diagram file -> canonical graph file");
    convert->add_option("--diagram", conv_diagram, "ribbon diagram file")->required();
    convert->add_option("-o,--output", conv_out, "output graph file")->required();

    // reduce
    std::string red_graph, red_out;
    bool red_r3 = false;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a graph file, print the step log");
    reduce->add_option("--graph", red_graph, "ribbon graph file")->required();
    reduce->add_flag("--r3", red_r3, "also explore R3 transformations when stuck");
    reduce->add_option("-o,--output", red_out, "output graph file")->required();

    // verify
    std::string ver_graph;
    int ver_samples = 10;
    uint64_t ver_seed = 0;
    long long ver_bound = 3;
    CLI::App* verify = app.add_subcommand("verify", "Seifert-matrix oracle: delta must not depend on L");
    verify->add_option("--graph", ver_graph, "ribbon graph file")->required();
    verify->add_option("--samples", ver_samples, "number of random L blocks");
    verify->add_option("--seed", ver_seed, "RNG seed (required; all randomness is explicit)")->required();
    verify->add_option("--bound", ver_bound, "L entries drawn uniformly from [-bound, bound]");

    // enumerate
    int enum_genus = 0;
    bool enum_distinct = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "tabulate delta over all labeled ribbon graphs");
    enumerate->add_option("--genus", enum_genus, "genus to enumerate")->required();
    enumerate->add_flag("--distinct", enum_distinct, "group by distinct delta with multiplicities");

    // selftest
    uint64_t self_seed = 0x5EEDBA5Eull;
    CLI::App* selftest = app.add_subcommand("selftest", "run every invariant sweep");
    selftest->add_option("--seed", self_seed, "RNG seed for the randomized sweeps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (graph_path.empty() && diagram_path.empty()) {
                std::cerr << "error: compute needs --graph or --diagram\n";
                return kExitInvalidInput;
            }
            return run_compute(graph_path, diagram_path, reduce_flag, show_matrix);
        }
        if (convert->parsed()) return run_convert(conv_diagram, conv_out);
        if (reduce->parsed()) return run_reduce(red_graph, red_r3, red_out);
        if (verify->parsed()) return run_verify(ver_graph, ver_samples, ver_seed, ver_bound);
        if (enumerate->parsed()) return run_enumerate(enum_genus, enum_distinct);
        if (selftest->parsed()) return run_selftest(self_seed);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const ribbon::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
