#pragma once

// Exhaustive enumeration of labeled ribbon graphs at small genus: every
// labeled tree on g+1 vertices (Prufer sequences in lexicographic order),
// every edge orientation, every singularity map. The stream is generated
// lazily; nothing is materialized.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/alexander.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

struct EnumerationSpec {
    int genus = 0;
    bool dedup = false;  // tabulate distinct Delta only
};

inline constexpr int kMaxEnumerationGenus = 5;

/// (g+1)^(g-1) trees x 2^g orientations x (g+1)^g maps.
inline uint64_t enumeration_count(int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (genus == 0) return 1;
    uint64_t trees = 1, maps = 1;
    for (int i = 0; i < genus - 1; ++i) trees *= static_cast<uint64_t>(genus + 1);
    for (int i = 0; i < genus; ++i) maps *= static_cast<uint64_t>(genus + 1);
    return trees * (uint64_t{1} << genus) * maps;
}

namespace detail {

// Standard Prufer decode; returns edges sorted by (min, max).
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<std::pair<int, int>> edges;
    if (n < 2) return edges;
    if (n == 2) return {{0, 1}};
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<size_t>(x)];
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) { leaf = v; break; }
        used[static_cast<size_t>(leaf)] = true;
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --deg[static_cast<size_t>(x)];
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
        if (!used[static_cast<size_t>(w)] && deg[static_cast<size_t>(w)] == 1) (u < 0 ? u : v) = w;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline bool odometer_next(std::vector<int>& digits, int base) {
    for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace detail

/// Streams every labeled ribbon graph of the requested genus, in a fixed
/// lexicographic order, to the visitor.
template <typename Visitor>
void enumerate_graphs(const EnumerationSpec& spec, Visitor&& visit) {
    int g = spec.genus;
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (g > kMaxEnumerationGenus)
        throw std::invalid_argument("genus " + std::to_string(g) + " exceeds the enumeration bound " +
                                    std::to_string(kMaxEnumerationGenus));
    int n = g + 1;

    RibbonGraph graph;
    graph.vertex_count = n;
    if (g == 0) {
        visit(static_cast<const RibbonGraph&>(graph));
        return;
    }

    std::vector<int> prufer(static_cast<size_t>(std::max(0, n - 2)), 0);
    bool more_trees = true;
    while (more_trees) {
        auto tree = detail::prufer_decode(prufer, n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << g); ++mask) {
            graph.edges.clear();
            for (int i = 0; i < g; ++i) {
                auto [a, b] = tree[static_cast<size_t>(i)];
                if ((mask >> i) & 1) graph.edges.push_back({b, a});
                else graph.edges.push_back({a, b});
            }
            std::vector<int> smap(static_cast<size_t>(g), 0);
            bool more_maps = true;
            while (more_maps) {
                graph.singularity = smap;
                visit(static_cast<const RibbonGraph&>(graph));
                more_maps = detail::odometer_next(smap, n);
            }
        }
        more_trees = !prufer.empty() && detail::odometer_next(prufer, n);
    }
}

struct TabulationEntry {
    LaurentPoly delta;
    uint64_t multiplicity = 0;
    RibbonGraph witness;  // first graph in enumeration order with this Delta
};

/// Table of Alexander polynomials over the full enumeration, sorted by
/// canonical polynomial text. With dedup, one entry per distinct Delta;
/// otherwise one entry per graph (intended for small genus).
inline std::vector<TabulationEntry> tabulate(const EnumerationSpec& spec) {
    std::vector<TabulationEntry> out;
    if (spec.dedup) {
        std::map<std::string, TabulationEntry> table;  // canonical text keys come out sorted
        enumerate_graphs(spec, [&](const RibbonGraph& g) {
            LaurentPoly delta = conway_alexander(half_alexander(ribbon_matrix(g)));
            auto [it, inserted] = table.try_emplace(delta.to_string());
            if (inserted) {
                it->second.delta = std::move(delta);
                it->second.witness = g;
            }
            ++it->second.multiplicity;
        });
        out.reserve(table.size());
        for (auto& [key, entry] : table) out.push_back(std::move(entry));
    } else {
        enumerate_graphs(spec, [&](const RibbonGraph& g) {
            LaurentPoly delta = conway_alexander(half_alexander(ribbon_matrix(g)));
            out.push_back({std::move(delta), 1, g});
        });
        std::stable_sort(out.begin(), out.end(), [](const TabulationEntry& x, const TabulationEntry& y) {
            return x.delta.to_string() < y.delta.to_string();
        });
    }
    return out;
}

/// One line per entry: multiplicity, canonical polynomial, witness graph.
inline std::string format_table(const std::vector<TabulationEntry>& table) {
    std::string out;
    for (const TabulationEntry& e : table)
        out += std::to_string(e.multiplicity) + "\t" + e.delta.to_string() + "\t" + canonical_serialize(e.witness) + "\n";
    return out;
}

inline constexpr int kMaxDiagramEnumerationGenus = 3;

namespace detail {

// All non-crossing perfect matchings of points [lo, hi): the first point
// pairs with each odd-offset partner, both gaps recurse. Catalan-many
// results, so materializing is cheap.
inline std::vector<std::vector<Chord>> noncrossing_matchings(int lo, int hi) {
    if (lo >= hi) return {{}};
    std::vector<std::vector<Chord>> out;
    for (int partner = lo + 1; partner < hi; partner += 2)
        for (const auto& left : noncrossing_matchings(lo + 1, partner))
            for (const auto& right : noncrossing_matchings(partner + 1, hi)) {
                std::vector<Chord> m{{lo, partner}};
                m.insert(m.end(), left.begin(), left.end());
                m.insert(m.end(), right.begin(), right.end());
                out.push_back(std::move(m));
            }
    return out;
}

}  // namespace detail

/// Streams every valid ribbon diagram of the requested genus: every
/// non-crossing chord matching, every assignment of chord labels, every
/// mark and beta arc. Exhaustive only at tiny genus; the count grows like
/// Catalan(g) * g! * (2g)^(2g).
template <typename Visitor>
void enumerate_diagrams(int genus, Visitor&& visit) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    if (genus > kMaxDiagramEnumerationGenus)
        throw std::invalid_argument("genus " + std::to_string(genus) + " exceeds the diagram enumeration bound " +
                                    std::to_string(kMaxDiagramEnumerationGenus));
    RibbonDiagram d;
    d.genus = genus;
    if (genus == 0) {
        visit(static_cast<const RibbonDiagram&>(d));
        return;
    }
    int arcs = 2 * genus;
    for (const std::vector<Chord>& matching : detail::noncrossing_matchings(0, 2 * genus)) {
        std::vector<int> perm(static_cast<size_t>(genus));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            d.gamma.clear();
            for (int i = 0; i < genus; ++i) d.gamma.push_back(matching[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
            std::vector<int> mark(static_cast<size_t>(genus), 0);
            bool more_marks = true;
            while (more_marks) {
                d.mark_arc = mark;
                std::vector<int> beta(static_cast<size_t>(genus), 0);
                bool more_betas = true;
                while (more_betas) {
                    d.beta_arc = beta;
                    visit(static_cast<const RibbonDiagram&>(d));
                    more_betas = detail::odometer_next(beta, arcs);
                }
                more_marks = detail::odometer_next(mark, arcs);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

}  // namespace ribbon
