// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Usage: acceptance <ribbonalex-binary> <data-dir>
//
//   1. genus-4 worked example, exact matrix and polynomial text
//   2. Seifert oracle equals the graph route (100 graphs x 10 L blocks)
//   3. every reduction application preserves delta, R(t) moves by a unit
//   4. invariant sweep over the same populations
//   5. genus-1 exhaustion: all four graphs give delta = 1
//   6. square-knot polynomial and witness in the genus-2 table
//   7. both ribbon-matrix routes agree on diagrams
//   8. CLI subcommands are byte-deterministic

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/alexander.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/reductions.hpp"
#include "ribbon/rng.hpp"
#include "ribbon/seifert.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

void report(const Criterion& c, double elapsed, double limit, int& failures) {
    bool ok = c.pass && (limit <= 0 || elapsed < limit);
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.name << "): " << (ok ? "PASS" : "FAIL");
    char buf[64];
    std::snprintf(buf, sizeof(buf), " [%.2fs", elapsed);
    line << buf;
    if (limit > 0) {
        std::snprintf(buf, sizeof(buf), " < %.0fs", limit);
        line << buf;
    }
    line << "]";
    if (!ok && !c.detail.empty()) line << " " << c.detail;
    if (!ok && c.pass) line << " runtime limit exceeded";
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

ribbon::RibbonGraph fixture_genus4() {
    return ribbon::RibbonGraph{5, {{0, 1}, {2, 1}, {1, 3}, {4, 3}}, {4, 0, 2, 1}};
}

std::string run_command(const std::string& cmd, int& exit_code) {
    std::string output;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <ribbonalex-binary> <data-dir>\n";
        return 64;
    }
    const std::string bin = argv[1];
    const std::string data = argv[2];
    int failures = 0;

    // ---- criterion 1: the worked genus-4 example, exact ----
    {
        Criterion c{1, "paper example, exact"};
        auto start = Clock::now();
        try {
            ribbon::RibbonMatrix m = ribbon::ribbon_matrix(fixture_genus4());
            std::vector<std::vector<int>> expected{
                {1, -2, 0, 0}, {0, 1, -2, 0}, {2, 0, -1, -2}, {-2, 0, 0, 1}};
            if (m.doubled != expected) c.fail("2R mismatch");
            ribbon::AlexanderResult res = ribbon::analyze(m);
            if (res.half.to_string() != "2*t - 3*t^2 + 3*t^3 - 1*t^4")
                c.fail("half = " + res.half.to_string());
            if (res.delta.to_string() != "-2*t^-3 + 9*t^-2 - 18*t^-1 + 23 - 18*t + 9*t^2 - 2*t^3")
                c.fail("delta = " + res.delta.to_string());
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        report(c, seconds_since(start), 1.0, failures);
    }

    // ---- criterion 2: oracle equivalence over random graphs and L blocks ----
    {
        Criterion c{2, "oracle equivalence, 100 graphs x 10 L"};
        auto start = Clock::now();
        try {
            for (int i = 0; i < 100; ++i) {
                ribbon::SampleRng rng(0xACCE9501ull, static_cast<uint64_t>(i));
                int genus = static_cast<int>(rng.uniform(0, 5));
                ribbon::RibbonGraph g = ribbon::random_graph(rng, genus);
                ribbon::OracleReport rep =
                    ribbon::verify_l_independence(ribbon::ribbon_matrix(g), 10, 7000 + static_cast<uint64_t>(i), 3);
                if (!rep.pass) {
                    c.fail("graph " + std::to_string(i) + ": " + rep.to_string());
                    break;
                }
            }
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        report(c, seconds_since(start), 30.0, failures);
    }

    // ---- criteria 3 and 4 share their populations ----
    {
        Criterion c3{3, "reduction invariance, exhaustive g<=3 + 500 random g<=6"};
        Criterion c4{4, "invariant sweep over the same populations"};
        auto start = Clock::now();
        uint64_t graphs = 0, applications = 0;
        auto check_graph = [&](const ribbon::RibbonGraph& g) {
            ++graphs;
            ribbon::AlexanderResult res;
            try {
                res = ribbon::analyze(ribbon::ribbon_matrix(g));  // asserts 2^g divisibility + route agreement
            } catch (const std::exception& e) {
                c4.fail(ribbon::canonical_serialize(g) + ": " + e.what());
                return;
            }
            if (!ribbon::check_invariants(res).ok)
                c4.fail(ribbon::canonical_serialize(g) + ": " + ribbon::check_invariants(res).violations.front());
            for (const ribbon::ReductionStep& step : ribbon::find_reductions(g)) {
                ++applications;
                try {
                    ribbon::RibbonGraph next = ribbon::apply(g, step);
                    ribbon::LaurentPoly next_half = ribbon::half_alexander(ribbon::ribbon_matrix(next));
                    if (ribbon::conway_alexander(next_half) != res.delta)
                        c3.fail(ribbon::canonical_serialize(g) + ": delta changed under " + step.to_string());
                    if (!ribbon::unit_equivalent(res.half, next_half))
                        c3.fail(ribbon::canonical_serialize(g) + ": R(t) not unit-stable under " + step.to_string());
                } catch (const std::exception& e) {
                    c3.fail(ribbon::canonical_serialize(g) + ": " + step.to_string() + ": " + e.what());
                }
            }
        };
        try {
            for (int g = 0; g <= 3; ++g) ribbon::enumerate_graphs({g, false}, check_graph);
            for (int i = 0; i < 500; ++i) {
                ribbon::SampleRng rng(0xD1CE5ull, static_cast<uint64_t>(i));
                check_graph(ribbon::random_graph(rng, static_cast<int>(rng.uniform(0, 6))));
            }
        } catch (const std::exception& e) {
            c3.fail(e.what());
            c4.fail(e.what());
        }
        double elapsed = seconds_since(start);
        c3.name += " (" + std::to_string(graphs) + " graphs, " + std::to_string(applications) + " applications)";
        report(c3, elapsed, 60.0, failures);
        report(c4, elapsed, 0.0, failures);
    }

    // ---- criterion 5: genus-1 exhaustion ----
    {
        Criterion c{5, "genus-1 exhaustion, delta = 1"};
        auto start = Clock::now();
        try {
            uint64_t count = 0;
            ribbon::enumerate_graphs({1, false}, [&](const ribbon::RibbonGraph& g) {
                ++count;
                if (ribbon::conway_alexander(ribbon::half_alexander(ribbon::ribbon_matrix(g))) !=
                    ribbon::LaurentPoly::one())
                    c.fail(ribbon::canonical_serialize(g));
            });
            if (count != 4) c.fail("expected 4 graphs, saw " + std::to_string(count));
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        report(c, seconds_since(start), 0.0, failures);
    }

    // ---- criterion 6: square-knot witness in the genus-2 table ----
    {
        Criterion c{6, "square-knot witness at genus 2"};
        auto start = Clock::now();
        try {
            ribbon::LaurentPoly square;
            for (auto [coeff, exp] : std::initializer_list<std::pair<int, int>>{
                     {1, -2}, {-2, -1}, {3, 0}, {-2, 1}, {1, 2}})
                square += ribbon::LaurentPoly::term(coeff, exp);

            bool found = false;
            for (const auto& entry : ribbon::tabulate({2, true}))
                if (entry.delta == square) found = true;
            if (!found) c.fail("polynomial missing from the table");

            ribbon::RibbonGraph witness{3, {{0, 1}, {1, 2}}, {2, 0}};
            ribbon::RibbonMatrix m = ribbon::ribbon_matrix(witness);
            if (m.doubled != std::vector<std::vector<int>>{{1, -2}, {2, -1}}) c.fail("witness 2R mismatch");
            if (ribbon::conway_alexander(ribbon::half_alexander(m)) != square) c.fail("witness delta mismatch");
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        report(c, seconds_since(start), 0.0, failures);
    }

    // ---- criterion 7: two matrix routes over diagrams ----
    {
        Criterion c{7, "two-route matrix equality on diagrams"};
        auto start = Clock::now();
        uint64_t count = 0;
        auto check = [&](const ribbon::RibbonDiagram& d) {
            ++count;
            ribbon::RibbonMatrix direct = ribbon::ribbon_matrix_direct(d);
            ribbon::RibbonMatrix via_graph = ribbon::ribbon_matrix(ribbon::to_ribbon_graph(d));
            if (direct.doubled != via_graph.doubled) c.fail("mismatch at diagram " + std::to_string(count));
        };
        try {
            for (int g = 0; g <= 3; ++g) ribbon::enumerate_diagrams(g, check);
            for (int i = 0; i < 200; ++i) {
                ribbon::SampleRng rng(0xD1A6ull, static_cast<uint64_t>(i));
                check(ribbon::random_diagram(rng, static_cast<int>(rng.uniform(0, 6))));
            }
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        c.name += " (" + std::to_string(count) + " diagrams)";
        report(c, seconds_since(start), 0.0, failures);
    }

    // ---- criterion 8: CLI determinism ----
    {
        Criterion c{8, "CLI determinism"};
        auto start = Clock::now();
        const std::vector<std::string> invocations{
            bin + " compute --graph " + data + "/example_genus4.json --show-matrix",
            bin + " compute --graph " + data + "/chain_genus2.json --reduce",
            bin + " compute --diagram " + data + "/diagram_nested_genus2.json",
            bin + " convert --diagram " + data + "/diagram_genus1.json -o /tmp/acceptance_convert.json",
            bin + " reduce --graph " + data + "/chain_genus2.json --r3 -o /tmp/acceptance_reduce.json",
            bin + " verify --graph " + data + "/example_genus4.json --samples 5 --seed 31 --bound 3",
            bin + " enumerate --genus 2 --distinct",
            bin + " enumerate --genus 1",
            bin + " selftest --seed 99",
        };
        for (const std::string& cmd : invocations) {
            int code1 = 0, code2 = 0;
            std::string out1 = run_command(cmd, code1);
            std::string out2 = run_command(cmd, code2);
            if (code1 != code2 || out1 != out2) {
                c.fail("non-deterministic: " + cmd);
                break;
            }
            if (code1 != 0) {
                c.fail("exit " + std::to_string(code1) + ": " + cmd);
                break;
            }
        }
        report(c, seconds_since(start), 0.0, failures);
    }

    if (failures == 0) std::cout << "acceptance: all criteria passed\n";
    else std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
