#pragma once

// The ribbon graph: a directed tree with g edges on g+1 vertices plus a
// singularity map sending each edge to a vertex. Edge i's path P_i runs
// from the midpoint of edge i to its singularity vertex; the ribbon matrix
// is read off the paths.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon {

struct EdgeRec {
    int tail = 0;
    int head = 0;
};

struct RibbonGraph {
    int vertex_count = 1;
    std::vector<EdgeRec> edges;
    std::vector<int> singularity;  // entry i = S(e_i)

    int genus() const { return static_cast<int>(edges.size()); }

    bool operator==(const RibbonGraph& o) const {
        if (vertex_count != o.vertex_count || singularity != o.singularity) return false;
        if (edges.size() != o.edges.size()) return false;
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].tail != o.edges[i].tail || edges[i].head != o.edges[i].head) return false;
        return true;
    }
};

enum class GraphErrorKind { Disconnected, Cyclic, BadVertexRef, SelfLoop };

struct ValidationError {
    GraphErrorKind kind;
    std::string message;
};

inline const char* to_string(GraphErrorKind k) {
    switch (k) {
        case GraphErrorKind::Disconnected: return "Disconnected";
        case GraphErrorKind::Cyclic: return "Cyclic";
        case GraphErrorKind::BadVertexRef: return "BadVertexRef";
        case GraphErrorKind::SelfLoop: return "SelfLoop";
    }
    return "?";
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
};

}  // namespace detail

/// Checks every structural invariant; an empty result means the graph is a
/// valid ribbon graph. Each error names the offending element.
inline std::vector<ValidationError> validate(const RibbonGraph& g) {
    std::vector<ValidationError> errs;
    if (g.vertex_count < 1) {
        errs.push_back({GraphErrorKind::BadVertexRef, "vertex count " + std::to_string(g.vertex_count) + " must be positive"});
        return errs;
    }
    if (g.singularity.size() != g.edges.size())
        errs.push_back({GraphErrorKind::BadVertexRef,
                        "singularity list has " + std::to_string(g.singularity.size()) + " entries for " +
                            std::to_string(g.edges.size()) + " edges"});

    bool refs_ok = true;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeRec& e = g.edges[i];
        if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 || e.head >= g.vertex_count) {
            errs.push_back({GraphErrorKind::BadVertexRef, "edge " + std::to_string(i) + " references a vertex outside 0.." +
                                                              std::to_string(g.vertex_count - 1)});
            refs_ok = false;
            continue;
        }
        if (e.tail == e.head)
            errs.push_back({GraphErrorKind::SelfLoop, "edge " + std::to_string(i) + " is a self-loop at vertex " +
                                                          std::to_string(e.tail)});
    }
    for (size_t i = 0; i < g.singularity.size(); ++i)
        if (g.singularity[i] < 0 || g.singularity[i] >= g.vertex_count) {
            errs.push_back({GraphErrorKind::BadVertexRef, "singularity entry " + std::to_string(i) + " names vertex " +
                                                              std::to_string(g.singularity[i]) + " outside 0.." +
                                                              std::to_string(g.vertex_count - 1)});
            refs_ok = false;
        }
    if (!refs_ok) return errs;

    detail::UnionFind uf(g.vertex_count);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].tail == g.edges[i].head) continue;  // already reported
        if (!uf.unite(g.edges[i].tail, g.edges[i].head))
            errs.push_back({GraphErrorKind::Cyclic, "edge " + std::to_string(i) + " closes a cycle"});
    }
    int root0 = uf.find(0);
    for (int v = 1; v < g.vertex_count; ++v)
        if (uf.find(v) != root0) {
            errs.push_back({GraphErrorKind::Disconnected, "vertex " + std::to_string(v) + " is unreachable from vertex 0"});
            break;
        }
    return errs;
}

inline bool is_valid(const RibbonGraph& g) { return validate(g).empty(); }

inline void require_valid(const RibbonGraph& g) {
    auto errs = validate(g);
    if (errs.empty()) return;
    std::string msg = "invalid ribbon graph:";
    for (const auto& e : errs) msg += std::string(" [") + to_string(e.kind) + "] " + e.message + ";";
    throw std::invalid_argument(msg);
}

/// One step of a path P_i. The first step of every path reports the half
/// edge of e_i itself: forward when the path leaves the midpoint toward the
/// head, reverse when it leaves toward the tail. Later steps are full edges
/// with their traversal direction.
struct PathStep {
    int edge = 0;
    bool forward = true;

    bool operator==(const PathStep& o) const { return edge == o.edge && forward == o.forward; }
};

namespace detail {

inline std::vector<std::vector<std::pair<int, int>>> adjacency(const RibbonGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.vertex_count));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        adj[static_cast<size_t>(g.edges[i].tail)].emplace_back(g.edges[i].head, static_cast<int>(i));
        adj[static_cast<size_t>(g.edges[i].head)].emplace_back(g.edges[i].tail, static_cast<int>(i));
    }
    return adj;
}

// Unique tree path src -> dst avoiding one edge; empty when unreachable.
inline bool tree_walk(const RibbonGraph& g, const std::vector<std::vector<std::pair<int, int>>>& adj, int src,
                      int dst, int banned_edge, std::vector<PathStep>& out) {
    std::vector<std::pair<int, int>> prev(static_cast<size_t>(g.vertex_count), {-1, -1});  // (vertex, edge)
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count), false);
    std::vector<int> stack{src};
    seen[static_cast<size_t>(src)] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == dst) break;
        for (const auto& [v, eid] : adj[static_cast<size_t>(u)]) {
            if (eid == banned_edge || seen[static_cast<size_t>(v)]) continue;
            seen[static_cast<size_t>(v)] = true;
            prev[static_cast<size_t>(v)] = {u, eid};
            stack.push_back(v);
        }
    }
    if (!seen[static_cast<size_t>(dst)]) return false;
    std::vector<PathStep> steps;
    for (int cur = dst; cur != src;) {
        auto [u, eid] = prev[static_cast<size_t>(cur)];
        steps.push_back({eid, g.edges[static_cast<size_t>(eid)].tail == u});
        cur = u;
    }
    std::reverse(steps.begin(), steps.end());
    out = std::move(steps);
    return true;
}

}  // namespace detail

/// The unique path P_i from the midpoint of edge i to S(e_i).
inline std::vector<PathStep> path(const RibbonGraph& g, int edge_id) {
    if (edge_id < 0 || edge_id >= g.genus()) throw std::out_of_range("edge id " + std::to_string(edge_id));
    const EdgeRec& e = g.edges[static_cast<size_t>(edge_id)];
    int target = g.singularity[static_cast<size_t>(edge_id)];
    if (target == e.head) return {{edge_id, true}};
    if (target == e.tail) return {{edge_id, false}};

    auto adj = detail::adjacency(g);
    std::vector<PathStep> rest;
    if (detail::tree_walk(g, adj, e.head, target, edge_id, rest)) {
        rest.insert(rest.begin(), PathStep{edge_id, true});
        return rest;
    }
    if (!detail::tree_walk(g, adj, e.tail, target, edge_id, rest))
        throw std::logic_error("singularity vertex unreachable; graph is not a valid tree");
    rest.insert(rest.begin(), PathStep{edge_id, false});
    return rest;
}

/// The ribbon matrix R stored doubled (entries of 2R), so everything stays
/// integral: diagonal +-1, off-diagonal in {-2, 0, 2}.
struct RibbonMatrix {
    int genus = 0;
    std::vector<std::vector<int>> doubled;
};

inline RibbonMatrix ribbon_matrix(const RibbonGraph& g) {
    require_valid(g);
    int n = g.genus();
    RibbonMatrix r;
    r.genus = n;
    r.doubled.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        std::vector<PathStep> p = path(g, i);
        r.doubled[static_cast<size_t>(i)][static_cast<size_t>(i)] = p.front().forward ? 1 : -1;
        for (size_t s = 1; s < p.size(); ++s)
            r.doubled[static_cast<size_t>(p[s].edge)][static_cast<size_t>(i)] = p[s].forward ? 2 : -2;
    }
    return r;
}

/// Deterministic byte-identical serialization; equal graphs give equal
/// bytes. This is also the on-disk graph format.
inline std::string canonical_serialize(const RibbonGraph& g) {
    require_valid(g);
    std::string out = "{\"genus\":" + std::to_string(g.genus()) + ",\"vertices\":" + std::to_string(g.vertex_count) +
                      ",\"edges\":[";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) out += ",";
        out += "{\"tail\":" + std::to_string(g.edges[i].tail) + ",\"head\":" + std::to_string(g.edges[i].head) + "}";
    }
    out += "],\"singularity\":[";
    for (size_t i = 0; i < g.singularity.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.singularity[i]);
    }
    out += "]}";
    return out;
}

}  // namespace ribbon
