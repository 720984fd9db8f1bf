#pragma once

// Combinatorial ribbon diagrams: g non-crossing marked chords on the disk
// boundary (2g points, 2g arcs) plus, per chord, one arc witnessing the
// marked side and one arc naming the face that holds the interior arc
// beta_i. Faces come from a single stack scan over the boundary; the dual
// tree of the faces is the ribbon graph.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

struct Chord {
    int a = 0;
    int b = 0;
};

struct RibbonDiagram {
    int genus = 0;
    std::vector<Chord> gamma;
    std::vector<int> mark_arc;  // arc on the marked side of chord i
    std::vector<int> beta_arc;  // arc of the face containing beta_i
};

enum class DiagramErrorKind { CrossingChords, DuplicateEndpoint, BadArcRef };

struct DiagramError {
    DiagramErrorKind kind;
    std::string message;
};

inline const char* to_string(DiagramErrorKind k) {
    switch (k) {
        case DiagramErrorKind::CrossingChords: return "CrossingChords";
        case DiagramErrorKind::DuplicateEndpoint: return "DuplicateEndpoint";
        case DiagramErrorKind::BadArcRef: return "BadArcRef";
    }
    return "?";
}

inline std::vector<DiagramError> validate(const RibbonDiagram& d) {
    std::vector<DiagramError> errs;
    int g = d.genus;
    int n = 2 * g;
    if (g < 0) {
        errs.push_back({DiagramErrorKind::BadArcRef, "genus must be nonnegative"});
        return errs;
    }
    if (static_cast<int>(d.gamma.size()) != g || static_cast<int>(d.mark_arc.size()) != g ||
        static_cast<int>(d.beta_arc.size()) != g) {
        errs.push_back({DiagramErrorKind::BadArcRef, "gamma, mark_arc and beta_arc must each have genus entries"});
        return errs;
    }

    std::vector<int> uses(static_cast<size_t>(n), 0);
    bool points_ok = true;
    for (int i = 0; i < g; ++i) {
        for (int p : {d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b}) {
            if (p < 0 || p >= n) {
                errs.push_back({DiagramErrorKind::BadArcRef, "chord " + std::to_string(i) + " endpoint " +
                                                                 std::to_string(p) + " outside 0.." + std::to_string(n - 1)});
                points_ok = false;
            } else if (++uses[static_cast<size_t>(p)] == 2) {
                errs.push_back({DiagramErrorKind::DuplicateEndpoint,
                                "boundary point " + std::to_string(p) + " is used more than once"});
                points_ok = false;
            }
        }
    }
    if (points_ok) {
        for (int i = 0; i < g; ++i) {
            int a1 = std::min(d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b);
            int b1 = std::max(d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b);
            for (int j = i + 1; j < g; ++j) {
                int a2 = std::min(d.gamma[static_cast<size_t>(j)].a, d.gamma[static_cast<size_t>(j)].b);
                int b2 = std::max(d.gamma[static_cast<size_t>(j)].a, d.gamma[static_cast<size_t>(j)].b);
                bool j_in_i = (a1 < a2 && b2 < b1);
                bool disjoint = (b2 < a1) || (b1 < a2);
                bool i_in_j = (a2 < a1 && b1 < b2);
                if (!j_in_i && !disjoint && !i_in_j)
                    errs.push_back({DiagramErrorKind::CrossingChords,
                                    "chords " + std::to_string(i) + " and " + std::to_string(j) + " cross"});
            }
        }
    }
    for (int i = 0; i < g; ++i) {
        if (d.mark_arc[static_cast<size_t>(i)] < 0 || d.mark_arc[static_cast<size_t>(i)] >= n)
            errs.push_back({DiagramErrorKind::BadArcRef, "mark_arc[" + std::to_string(i) + "] = " +
                                                             std::to_string(d.mark_arc[static_cast<size_t>(i)]) +
                                                             " is not an arc id"});
        if (d.beta_arc[static_cast<size_t>(i)] < 0 || d.beta_arc[static_cast<size_t>(i)] >= n)
            errs.push_back({DiagramErrorKind::BadArcRef, "beta_arc[" + std::to_string(i) + "] = " +
                                                             std::to_string(d.beta_arc[static_cast<size_t>(i)]) +
                                                             " is not an arc id"});
    }
    return errs;
}

inline bool is_valid(const RibbonDiagram& d) { return validate(d).empty(); }

inline void require_valid(const RibbonDiagram& d) {
    auto errs = validate(d);
    if (errs.empty()) return;
    std::string msg = "invalid ribbon diagram:";
    for (const auto& e : errs) msg += std::string(" [") + to_string(e.kind) + "] " + e.message + ";";
    throw std::invalid_argument(msg);
}

/// Faces of the disk cut along the chords. A face is named by the minimum
/// boundary-arc id it touches; arc j is the boundary piece between points j
/// and j+1 (mod 2g). open_mask[j] records which chords enclose arc j, so
/// two arcs share a face exactly when their masks agree.
struct FaceDecomposition {
    int genus = 0;
    std::vector<int> face_of_arc;                 // arc id -> face id
    std::vector<uint64_t> open_mask;              // arc id -> enclosing chord set
    std::vector<int> face_ids;                    // sorted, g+1 entries
    std::vector<std::pair<int, int>> chord_faces;  // chord -> (marked-side face, unmarked-side face)

    bool arc_inside(int chord, int arc) const {
        return (open_mask[static_cast<size_t>(arc)] >> chord) & 1u;
    }
};

inline FaceDecomposition build_faces(const RibbonDiagram& d) {
    require_valid(d);
    int g = d.genus;
    if (g > 63) throw std::invalid_argument("diagram genus too large for face masks");
    int n = 2 * g;

    FaceDecomposition f;
    f.genus = g;
    if (g == 0) {
        f.face_ids = {0};  // the whole disk
        return f;
    }

    std::vector<int> chord_at(static_cast<size_t>(n));
    for (int i = 0; i < g; ++i) {
        chord_at[static_cast<size_t>(d.gamma[static_cast<size_t>(i)].a)] = i;
        chord_at[static_cast<size_t>(d.gamma[static_cast<size_t>(i)].b)] = i;
    }

    f.open_mask.resize(static_cast<size_t>(n));
    uint64_t open = 0;
    for (int p = 0; p < n; ++p) {
        open ^= uint64_t{1} << chord_at[static_cast<size_t>(p)];
        f.open_mask[static_cast<size_t>(p)] = open;
    }

    f.face_of_arc.assign(static_cast<size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
        if (f.face_of_arc[static_cast<size_t>(j)] >= 0) continue;
        for (int k = j; k < n; ++k)
            if (f.open_mask[static_cast<size_t>(k)] == f.open_mask[static_cast<size_t>(j)])
                f.face_of_arc[static_cast<size_t>(k)] = j;
        f.face_ids.push_back(j);
    }
    if (static_cast<int>(f.face_ids.size()) != g + 1)
        throw std::logic_error("face count is not genus + 1");

    f.chord_faces.resize(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        int a = std::min(d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b);
        int inside = f.face_of_arc[static_cast<size_t>(a)];
        int outside = f.face_of_arc[static_cast<size_t>((a + n - 1) % n)];
        bool marked_inside = f.arc_inside(i, d.mark_arc[static_cast<size_t>(i)]);
        f.chord_faces[static_cast<size_t>(i)] =
            marked_inside ? std::make_pair(inside, outside) : std::make_pair(outside, inside);
    }
    return f;
}

/// Dual tree of the face decomposition: vertices are faces (renumbered
/// densely in face-id order), edge i joins the two faces adjacent to chord
/// i with the head on the marked side, and S(e_i) is the face holding
/// beta_i.
inline RibbonGraph to_ribbon_graph(const RibbonDiagram& d) {
    FaceDecomposition f = build_faces(d);
    int g = d.genus;

    RibbonGraph out;
    out.vertex_count = g + 1;
    if (g == 0) return out;

    std::vector<int> dense(static_cast<size_t>(2 * g), -1);
    for (size_t i = 0; i < f.face_ids.size(); ++i) dense[static_cast<size_t>(f.face_ids[i])] = static_cast<int>(i);

    for (int i = 0; i < g; ++i) {
        auto [marked_face, unmarked_face] = f.chord_faces[static_cast<size_t>(i)];
        out.edges.push_back({dense[static_cast<size_t>(unmarked_face)], dense[static_cast<size_t>(marked_face)]});
    }
    for (int i = 0; i < g; ++i)
        out.singularity.push_back(dense[static_cast<size_t>(f.face_of_arc[static_cast<size_t>(d.beta_arc[static_cast<size_t>(i)])])]);

    require_valid(out);  // non-crossing chords always dualize to a tree
    return out;
}

/// Ribbon matrix straight from separation data, without the dual tree:
/// entry (i,j) compares which side of chord i holds beta_j versus chord j
/// itself. Cross-checked against the path formula in tests.
inline RibbonMatrix ribbon_matrix_direct(const RibbonDiagram& d) {
    FaceDecomposition f = build_faces(d);
    int g = d.genus;
    RibbonMatrix r;
    r.genus = g;
    r.doubled.assign(static_cast<size_t>(g), std::vector<int>(static_cast<size_t>(g), 0));

    for (int i = 0; i < g; ++i) {
        bool marked_inside = f.arc_inside(i, d.mark_arc[static_cast<size_t>(i)]);
        int a = std::min(d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b);
        int b = std::max(d.gamma[static_cast<size_t>(i)].a, d.gamma[static_cast<size_t>(i)].b);
        for (int j = 0; j < g; ++j) {
            bool beta_inside = f.arc_inside(i, d.beta_arc[static_cast<size_t>(j)]);
            bool beta_marked = (beta_inside == marked_inside);
            if (i == j) {
                r.doubled[static_cast<size_t>(i)][static_cast<size_t>(i)] = beta_marked ? 1 : -1;
                continue;
            }
            int endpoint = d.gamma[static_cast<size_t>(j)].a;
            bool chord_inside = (a < endpoint && endpoint < b);
            bool chord_marked = (chord_inside == marked_inside);
            if (beta_marked && !chord_marked) r.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)] = 2;
            else if (chord_marked && !beta_marked) r.doubled[static_cast<size_t>(i)][static_cast<size_t>(j)] = -2;
        }
    }
    return r;
}

}  // namespace ribbon
