#pragma once

// Graph-level reductions R0, R1, R2 and the genus-preserving R3
// transformation. Every successful application keeps the Conway-normalized
// Alexander polynomial unchanged; the property suite enforces exactly that.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

enum class ReductionKind { R0, R1, R2, R3 };

class NotApplicable : public std::runtime_error {
public:
    explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

struct ReductionStep {
    ReductionKind kind = ReductionKind::R0;
    int a = -1, b = -1, c = -1, d = -1;  // R0: a=v; R1: a=e; R2: a,b=edge pair; R3: a=i b=j c=k d=q

    static ReductionStep r0(int v) { return {ReductionKind::R0, v, -1, -1, -1}; }
    static ReductionStep r1(int e) { return {ReductionKind::R1, e, -1, -1, -1}; }
    static ReductionStep r2(int e, int f) { return {ReductionKind::R2, e, f, -1, -1}; }
    static ReductionStep r3(int i, int j, int k, int q) { return {ReductionKind::R3, i, j, k, q}; }

    bool operator==(const ReductionStep& o) const {
        return kind == o.kind && a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // log line format: "R0 v=3" / "R1 e=0" / "R2 e=1,2" / "R3 i=0 j=1 k=2 q=3"
    std::string to_string() const {
        switch (kind) {
            case ReductionKind::R0: return "R0 v=" + std::to_string(a);
            case ReductionKind::R1: return "R1 e=" + std::to_string(a);
            case ReductionKind::R2: return "R2 e=" + std::to_string(a) + "," + std::to_string(b);
            case ReductionKind::R3:
                return "R3 i=" + std::to_string(a) + " j=" + std::to_string(b) + " k=" + std::to_string(c) +
                       " q=" + std::to_string(d);
        }
        return "?";
    }
};

namespace detail {

inline std::vector<int> vertex_degrees(const RibbonGraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.vertex_count), 0);
    for (const EdgeRec& e : g.edges) {
        ++deg[static_cast<size_t>(e.tail)];
        ++deg[static_cast<size_t>(e.head)];
    }
    return deg;
}

inline std::vector<bool> in_singularity_image(const RibbonGraph& g) {
    std::vector<bool> im(static_cast<size_t>(g.vertex_count), false);
    for (int s : g.singularity) im[static_cast<size_t>(s)] = true;
    return im;
}

// Drops vertex `dead` (which must be isolated by now) and compacts ids.
inline RibbonGraph drop_vertex(RibbonGraph g, int dead) {
    for (EdgeRec& e : g.edges) {
        if (e.tail > dead) --e.tail;
        if (e.head > dead) --e.head;
    }
    for (int& s : g.singularity)
        if (s > dead) --s;
    --g.vertex_count;
    return g;
}

// Redirects every reference from vertex `from` to vertex `to`, then compacts.
inline RibbonGraph merge_vertices(RibbonGraph g, int va, int vb) {
    int keep = std::min(va, vb), dead = std::max(va, vb);
    for (EdgeRec& e : g.edges) {
        if (e.tail == dead) e.tail = keep;
        if (e.head == dead) e.head = keep;
    }
    for (int& s : g.singularity)
        if (s == dead) s = keep;
    return drop_vertex(std::move(g), dead);
}

inline RibbonGraph erase_edge(RibbonGraph g, int eid) {
    g.edges.erase(g.edges.begin() + eid);
    g.singularity.erase(g.singularity.begin() + eid);
    return g;
}

}  // namespace detail

/// All applicable steps in a fixed order: R0 by pendant vertex id, R1 by
/// edge id, R2 by lexicographic edge pair, R3 by lexicographic witness
/// quadruple.
inline std::vector<ReductionStep> find_reductions(const RibbonGraph& g) {
    require_valid(g);
    std::vector<ReductionStep> out;
    auto deg = detail::vertex_degrees(g);
    auto im = detail::in_singularity_image(g);

    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[static_cast<size_t>(v)] == 1 && !im[static_cast<size_t>(v)]) out.push_back(ReductionStep::r0(v));

    int n = g.genus();
    for (int e = 0; e < n; ++e) {
        int s = g.singularity[static_cast<size_t>(e)];
        if (s == g.edges[static_cast<size_t>(e)].tail || s == g.edges[static_cast<size_t>(e)].head)
            out.push_back(ReductionStep::r1(e));
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.singularity[static_cast<size_t>(i)] != g.singularity[static_cast<size_t>(j)]) continue;
            const EdgeRec &ei = g.edges[static_cast<size_t>(i)], &ej = g.edges[static_cast<size_t>(j)];
            if (ei.head == ej.head || ei.tail == ej.tail) out.push_back(ReductionStep::r2(i, j));
        }

    // R3 witness (i, j, k, q): q has degree 2 and is outside Im(S); e_j runs
    // into q; e_k is the other edge at q and must run out of q (the
    // orientation for which the move provably preserves Delta); e_i is a
    // third edge with S(e_i) = S(e_j) and head(e_i) = S(e_k).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int q = g.edges[static_cast<size_t>(j)].head;
            if (deg[static_cast<size_t>(q)] != 2 || im[static_cast<size_t>(q)]) continue;
            int k = -1;
            for (int e = 0; e < n && k < 0; ++e)
                if (e != j && (g.edges[static_cast<size_t>(e)].tail == q || g.edges[static_cast<size_t>(e)].head == q))
                    k = e;
            if (k < 0 || k == i) continue;
            if (g.edges[static_cast<size_t>(k)].tail != q) continue;
            if (g.singularity[static_cast<size_t>(i)] != g.singularity[static_cast<size_t>(j)]) continue;
            if (g.edges[static_cast<size_t>(i)].head != g.singularity[static_cast<size_t>(k)]) continue;
            out.push_back(ReductionStep::r3(i, j, k, q));
        }
    return out;
}

/// R0: delete a pendant vertex that carries no singularity, together with
/// its edge. Genus drops by one.
inline RibbonGraph apply_r0(const RibbonGraph& g, const ReductionStep& step) {
    require_valid(g);
    if (step.kind != ReductionKind::R0) throw NotApplicable("step is not an R0 step");
    int v = step.a;
    if (v < 0 || v >= g.vertex_count) throw NotApplicable("R0 vertex " + std::to_string(v) + " does not exist");
    auto deg = detail::vertex_degrees(g);
    if (deg[static_cast<size_t>(v)] != 1) throw NotApplicable("R0 vertex " + std::to_string(v) + " is not pendant");
    if (detail::in_singularity_image(g)[static_cast<size_t>(v)])
        throw NotApplicable("R0 vertex " + std::to_string(v) + " is in the singularity image");

    int eid = -1;
    for (int e = 0; e < g.genus(); ++e)
        if (g.edges[static_cast<size_t>(e)].tail == v || g.edges[static_cast<size_t>(e)].head == v) { eid = e; break; }
    RibbonGraph out = detail::erase_edge(g, eid);
    return detail::drop_vertex(std::move(out), v);
}

/// R1: contract an edge whose singularity sits at one of its own ends.
/// The two ends merge; singularities pointing at either end follow the
/// merged vertex. Genus drops by one.
inline RibbonGraph apply_r1(const RibbonGraph& g, const ReductionStep& step) {
    require_valid(g);
    if (step.kind != ReductionKind::R1) throw NotApplicable("step is not an R1 step");
    int e = step.a;
    if (e < 0 || e >= g.genus()) throw NotApplicable("R1 edge " + std::to_string(e) + " does not exist");
    const EdgeRec& rec = g.edges[static_cast<size_t>(e)];
    int s = g.singularity[static_cast<size_t>(e)];
    if (s != rec.tail && s != rec.head)
        throw NotApplicable("R1 edge " + std::to_string(e) + ": singularity is not at an end");
    int ta = rec.tail, he = rec.head;
    RibbonGraph out = detail::erase_edge(g, e);
    return detail::merge_vertices(std::move(out), ta, he);
}

/// R2: two edges with a common head (or common tail) and equal
/// singularities fuse: the far ends are identified and the resulting
/// parallel pair collapses to a single edge. Genus drops by one.
inline RibbonGraph apply_r2(const RibbonGraph& g, const ReductionStep& step) {
    require_valid(g);
    if (step.kind != ReductionKind::R2) throw NotApplicable("step is not an R2 step");
    int i = step.a, j = step.b;
    if (i < 0 || j < 0 || i >= g.genus() || j >= g.genus() || i == j)
        throw NotApplicable("R2 edge pair is out of range");
    if (g.singularity[static_cast<size_t>(i)] != g.singularity[static_cast<size_t>(j)])
        throw NotApplicable("R2 edges " + std::to_string(i) + "," + std::to_string(j) + " have different singularities");
    const EdgeRec &ei = g.edges[static_cast<size_t>(i)], &ej = g.edges[static_cast<size_t>(j)];
    int far_i, far_j;
    if (ei.head == ej.head) {
        far_i = ei.tail;
        far_j = ej.tail;
    } else if (ei.tail == ej.tail) {
        far_i = ei.head;
        far_j = ej.head;
    } else {
        throw NotApplicable("R2 edges " + std::to_string(i) + "," + std::to_string(j) + " share no end");
    }
    RibbonGraph out = detail::erase_edge(g, std::max(i, j));
    return detail::merge_vertices(std::move(out), far_i, far_j);
}

/// R3: edges e_j and e_k exchange their attachments wholesale (singularity
/// entries travel with the labels) and e_k's singularity moves to the tail
/// of e_i. The underlying tree is unchanged up to the label swap; genus is
/// unchanged.
inline RibbonGraph apply_r3(const RibbonGraph& g, const ReductionStep& step) {
    require_valid(g);
    if (step.kind != ReductionKind::R3) throw NotApplicable("step is not an R3 step");
    int i = step.a, j = step.b, k = step.c, q = step.d;
    int n = g.genus();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n || i == j || i == k || j == k)
        throw NotApplicable("R3 witness edges are out of range");
    if (q < 0 || q >= g.vertex_count) throw NotApplicable("R3 vertex is out of range");
    auto deg = detail::vertex_degrees(g);
    if (deg[static_cast<size_t>(q)] != 2) throw NotApplicable("R3 vertex " + std::to_string(q) + " is not of degree 2");
    if (detail::in_singularity_image(g)[static_cast<size_t>(q)])
        throw NotApplicable("R3 vertex " + std::to_string(q) + " is in the singularity image");
    if (g.edges[static_cast<size_t>(j)].head != q)
        throw NotApplicable("R3 edge " + std::to_string(j) + " does not run into the witness vertex");
    if (g.edges[static_cast<size_t>(k)].tail != q)
        throw NotApplicable("R3 edge " + std::to_string(k) + " does not run out of the witness vertex");
    if (g.singularity[static_cast<size_t>(i)] != g.singularity[static_cast<size_t>(j)])
        throw NotApplicable("R3 edges " + std::to_string(i) + "," + std::to_string(j) + " have different singularities");
    if (g.edges[static_cast<size_t>(i)].head != g.singularity[static_cast<size_t>(k)])
        throw NotApplicable("R3: head of edge " + std::to_string(i) + " is not the singularity of edge " + std::to_string(k));

    RibbonGraph out = g;
    std::swap(out.edges[static_cast<size_t>(j)], out.edges[static_cast<size_t>(k)]);
    out.singularity[static_cast<size_t>(k)] = g.edges[static_cast<size_t>(i)].tail;
    return out;
}

inline RibbonGraph apply(const RibbonGraph& g, const ReductionStep& step) {
    switch (step.kind) {
        case ReductionKind::R0: return apply_r0(g, step);
        case ReductionKind::R1: return apply_r1(g, step);
        case ReductionKind::R2: return apply_r2(g, step);
        case ReductionKind::R3: return apply_r3(g, step);
    }
    throw NotApplicable("unknown reduction kind");
}

/// Applies the first available R0/R1/R2 until none is left. With use_r3,
/// each R3 is tried once whenever stuck and taken only if it unlocks a
/// genuine reduction; a visited set over canonical serializations bounds
/// the exploration.
inline std::pair<RibbonGraph, std::vector<ReductionStep>> reduce_fully(const RibbonGraph& g, bool use_r3 = false) {
    RibbonGraph cur = g;
    std::vector<ReductionStep> log;
    std::set<std::string> visited{canonical_serialize(cur)};

    for (;;) {
        std::vector<ReductionStep> steps = find_reductions(cur);
        auto reducing = std::find_if(steps.begin(), steps.end(),
                                     [](const ReductionStep& s) { return s.kind != ReductionKind::R3; });
        if (reducing != steps.end()) {
            cur = apply(cur, *reducing);
            log.push_back(*reducing);
            visited.insert(canonical_serialize(cur));
            continue;
        }
        if (!use_r3) break;
        bool advanced = false;
        for (const ReductionStep& s : steps) {
            RibbonGraph next = apply_r3(cur, s);
            std::string key = canonical_serialize(next);
            if (visited.count(key)) continue;
            std::vector<ReductionStep> unlocked = find_reductions(next);
            bool unlocks = std::any_of(unlocked.begin(), unlocked.end(),
                                       [](const ReductionStep& u) { return u.kind != ReductionKind::R3; });
            if (!unlocks) continue;
            cur = std::move(next);
            log.push_back(s);
            visited.insert(std::move(key));
            advanced = true;
            break;
        }
        if (!advanced) break;
    }
    return {cur, log};
}

}  // namespace ribbon
