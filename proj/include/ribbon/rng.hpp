#pragma once

// Deterministic, platform-independent sampling. Every sample stream is
// derived from an explicit (seed, index) pair, so concurrent or re-ordered
// evaluation cannot change any result.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ribbon/alexander.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SampleRng {
public:
    explicit SampleRng(uint64_t seed, uint64_t index = 0) : state_(seed) {
        // decorrelate the per-index stream from the raw seed
        state_ ^= 0xA0761D6478BD642Full * (index + 1);
        for (int i = 0; i < 3; ++i) splitmix64(state_);
    }

    uint64_t next() { return splitmix64(state_); }

    /// Uniform integer in [lo, hi], inclusive; rejection sampling keeps the
    /// distribution exact and the sequence platform-independent.
    long long uniform(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("empty sampling range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long long>(v % span);
    }

    bool coin() { return (next() & 1) != 0; }

private:
    uint64_t state_;
};

/// Uniform random labeled tree (random Prufer sequence) with random edge
/// orientations and singularity map.
inline RibbonGraph random_graph(SampleRng& rng, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    int n = genus + 1;
    RibbonGraph g;
    g.vertex_count = n;
    if (genus == 0) return g;

    std::vector<std::pair<int, int>> tree;
    if (n == 2) {
        tree = {{0, 1}};
    } else {
        std::vector<int> seq(static_cast<size_t>(n - 2));
        for (int& x : seq) x = static_cast<int>(rng.uniform(0, n - 1));
        std::vector<int> deg(static_cast<size_t>(n), 1);
        for (int x : seq) ++deg[static_cast<size_t>(x)];
        std::vector<bool> used(static_cast<size_t>(n), false);
        for (int x : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) { leaf = v; break; }
            used[static_cast<size_t>(leaf)] = true;
            tree.emplace_back(std::min(leaf, x), std::max(leaf, x));
            --deg[static_cast<size_t>(x)];
        }
        int u = -1, v = -1;
        for (int w = 0; w < n; ++w)
            if (!used[static_cast<size_t>(w)] && deg[static_cast<size_t>(w)] == 1) (u < 0 ? u : v) = w;
        tree.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(tree.begin(), tree.end());
    }

    for (auto [a, b] : tree) {
        if (rng.coin()) g.edges.push_back({b, a});
        else g.edges.push_back({a, b});
    }
    for (int i = 0; i < genus; ++i) g.singularity.push_back(static_cast<int>(rng.uniform(0, n - 1)));
    return g;
}

namespace detail {

// Non-crossing perfect matching of points[lo..hi): pair the first point
// with a partner leaving even-sized gaps, recurse on both sides.
inline void random_matching(SampleRng& rng, int lo, int hi, std::vector<Chord>& out) {
    if (lo >= hi) return;
    int count = (hi - lo) / 2;  // candidate partners (odd offsets)
    int pick = static_cast<int>(rng.uniform(0, count - 1));
    int partner = lo + 2 * pick + 1;
    out.push_back({lo, partner});
    random_matching(rng, lo + 1, partner, out);
    random_matching(rng, partner + 1, hi, out);
}

}  // namespace detail

/// Random valid ribbon diagram: random non-crossing chords with shuffled
/// labels, then uniform mark and beta arcs.
inline RibbonDiagram random_diagram(SampleRng& rng, int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    RibbonDiagram d;
    d.genus = genus;
    if (genus == 0) return d;

    detail::random_matching(rng, 0, 2 * genus, d.gamma);
    for (size_t i = d.gamma.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.uniform(0, static_cast<long long>(i) - 1));
        std::swap(d.gamma[i - 1], d.gamma[j]);
    }
    for (int i = 0; i < genus; ++i) {
        d.mark_arc.push_back(static_cast<int>(rng.uniform(0, 2 * genus - 1)));
        d.beta_arc.push_back(static_cast<int>(rng.uniform(0, 2 * genus - 1)));
    }
    return d;
}

inline IntMatrix random_int_matrix(SampleRng& rng, int n, long long bound) {
    IntMatrix m = zero_int_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = rng.uniform(-bound, bound);
    return m;
}

}  // namespace ribbon
