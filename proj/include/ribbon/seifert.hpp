#pragma once

// Independent verification route through the Seifert matrix
// A = [[0, P], [Q, L]]. The L block carries embedding data the ribbon
// diagram does not determine; Delta must come out the same for every
// choice of L, and must match the graph-route R(t) R(1/t).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ribbon/alexander.hpp"
#include "ribbon/poly_matrix.hpp"
#include "ribbon/rng.hpp"

namespace ribbon {

struct SeifertMatrix {
    int genus = 0;
    IntMatrix a;  // 2g x 2g
};

/// Assembles [[0, P], [Q, L]] from the ribbon matrix and a free integer
/// block L, checking the block identities (zero top-left, Q = P^T + I).
inline SeifertMatrix seifert_matrix(const RibbonMatrix& r, const IntMatrix& l) {
    int g = r.genus;
    if (static_cast<int>(l.size()) != g) throw std::invalid_argument("L block has wrong size");
    for (const auto& row : l)
        if (static_cast<int>(row.size()) != g) throw std::invalid_argument("L block is not square");

    PQPair pq = pq_from_ribbon(r);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            long long expect = pq.p[static_cast<size_t>(j)][static_cast<size_t>(i)] + (i == j ? 1 : 0);
            if (pq.q[static_cast<size_t>(i)][static_cast<size_t>(j)] != expect)
                throw std::logic_error("Q != P^T + I");
        }

    SeifertMatrix out;
    out.genus = g;
    out.a = zero_int_matrix(2 * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            out.a[static_cast<size_t>(i)][static_cast<size_t>(g + j)] = pq.p[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out.a[static_cast<size_t>(g + i)][static_cast<size_t>(j)] = pq.q[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out.a[static_cast<size_t>(g + i)][static_cast<size_t>(g + j)] = l[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return out;
}

/// Conway-normalized Delta from a Seifert matrix, computed integrally as
/// t^-g det(tA - A^T); no fractional powers of t are ever represented.
inline LaurentPoly alexander_from_seifert(const SeifertMatrix& s) {
    int n = 2 * s.genus;
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = LaurentPoly::term(s.a[static_cast<size_t>(i)][static_cast<size_t>(j)], 1) -
                         LaurentPoly::constant(s.a[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    return det(m).shifted(-s.genus);
}

struct OracleReport {
    bool pass = true;
    int samples = 0;
    int failed_sample = -1;
    IntMatrix failed_l;
    LaurentPoly expected;
    LaurentPoly got;

    std::string to_string() const {
        if (pass) return "oracle: PASS samples=" + std::to_string(samples);
        std::string flat = "[";
        for (size_t i = 0; i < failed_l.size(); ++i)
            for (size_t j = 0; j < failed_l.size(); ++j) {
                if (i || j) flat += ",";
                flat += std::to_string(failed_l[i][j]);
            }
        flat += "]";
        return "oracle: FAIL sample=" + std::to_string(failed_sample) + " L=" + flat;
    }
};

/// Draws `samples` random L blocks with entries in [-bound, bound] and
/// checks that every Seifert-route Delta equals the graph-route Delta
/// exactly. Sample i is derived from (seed, i), so reports are
/// reproducible.
inline OracleReport verify_l_independence(const RibbonMatrix& r, int samples, uint64_t seed, long long bound) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");

    OracleReport rep;
    rep.samples = samples;
    rep.expected = conway_alexander(half_alexander(r));
    for (int s = 0; s < samples; ++s) {
        SampleRng rng(seed, static_cast<uint64_t>(s));
        IntMatrix l = random_int_matrix(rng, r.genus, bound);
        LaurentPoly got = alexander_from_seifert(seifert_matrix(r, l));
        if (got != rep.expected) {
            rep.pass = false;
            rep.failed_sample = s;
            rep.failed_l = std::move(l);
            rep.got = std::move(got);
            break;
        }
    }
    return rep;
}

}  // namespace ribbon
