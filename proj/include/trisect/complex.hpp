#ifndef TRISECT_COMPLEX_HPP
#define TRISECT_COMPLEX_HPP

#include "trisect/surface.hpp"

#include <vector>

namespace trisect {

struct ComplementComponent {
    int euler = 0;
    int boundary_circles = 0;
};

/// Components of the surface cut along a family of pairwise disjoint curves.
/// Throws naming the offending pair when two family curves cross. Component
/// Euler characteristics always sum to 2 - 2g.
std::vector<ComplementComponent> cut_complement(const Arrangement& arr, std::string_view family);

/// One step of a face boundary walk.
struct WalkStep {
    enum Kind { BoundaryArc, ChordSegment } kind = BoundaryArc;
    int edge_letter = -1; // BoundaryArc: edge index, arc position along it
    int arc_index = -1;
    int chord = -1;       // ChordSegment: global chord id, segment rank
    int segment = -1;
    bool forward = true;  // traversal direction relative to the edge
};

struct Face {
    std::vector<WalkStep> walk;
    int sides() const { return static_cast<int>(walk.size()); }
};

struct CutComponent {
    int euler = 0;
    int boundary_circles = 0;
    int faces = 0;
};

struct CutResult {
    int component_count = 0;
    std::vector<int> comp_of_face;
    std::vector<CutComponent> components;
    std::vector<std::vector<int>> circle_darts; // boundary circles as dart cycles
    std::vector<int> circle_component;
    std::vector<int> circle_corners; // junctions at cut-cut crossings
};

/// The cell complex of a glued arrangement: polygon boundary arcs plus chord
/// segments, with the rotation system of the closed surface. Faces are traced
/// as orbits of next = sigma(twin(dart)); the Euler relation V - E + F = 2 - 2g
/// is asserted at construction. Only meaningful for genus >= 1 (the genus-0
/// sphere carries no polygon).
class CellComplex {
public:
    explicit CellComplex(const Arrangement& arr);

    const Arrangement& arrangement() const { return *arr_; }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edge_arc_letter_.size()); }
    int face_count() const { return face_count_; }
    int dart_count() const { return 2 * edge_count(); }

    // --- edges and darts ---------------------------------------------------
    bool edge_is_arc(int e) const { return edge_arc_letter_[e] >= 0; }
    int arc_letter(int e) const { return edge_arc_letter_[e]; }
    int arc_index(int e) const { return edge_arc_index_[e]; }
    int seg_chord(int e) const { return edge_chord_[e]; }
    int seg_rank(int e) const { return edge_chord_rank_[e]; }

    static int edge_of_dart(int d) { return d / 2; }
    static bool dart_forward(int d) { return (d & 1) == 0; }
    static int twin(int d) { return d ^ 1; }
    int sigma(int d) const { return sigma_[d]; }
    int dart_origin(int d) const { return dart_forward(d) ? edge_from_[d / 2] : edge_to_[d / 2]; }
    int dart_head(int d) const { return dart_forward(d) ? edge_to_[d / 2] : edge_from_[d / 2]; }
    int face_of_dart(int d) const { return face_of_dart_[d]; }
    const std::vector<int>& face_darts(int f) const { return face_darts_[f]; }

    // --- vertices ------------------------------------------------------------
    // 0 = corner; then one vertex per event; then one per crossing.
    bool vertex_is_corner(int v) const { return v == 0; }
    bool vertex_is_slot(int v) const { return v >= 1 && v < 1 + event_count_; }
    bool vertex_is_crossing(int v) const { return v >= 1 + event_count_; }
    int slot_event(int v) const { return v - 1; }              // flat event id
    int crossing_index(int v) const { return v - 1 - event_count_; }

    struct EventRef {
        CurveId curve;
        int index = 0;
    };
    const EventRef& event_ref(int flat_event) const { return event_refs_[flat_event]; }
    int flat_event_id(CurveId c, int index) const;

    // Crossing ranks: position of a crossing along each of its two chords.
    int rank_on_chord(int crossing_idx, int chord) const;
    int chord_segment_count(int chord) const {
        return static_cast<int>(chord_cross_[chord].size()) + 1;
    }
    int chord_segment_edge(int chord, int rank) const { return chord_seg_edges_[chord][rank]; }
    const std::vector<int>& chord_crossing_list(int chord) const { return chord_cross_[chord]; }

    /// Faces with explicit boundary walks.
    std::vector<Face> faces() const;

    /// Cut the surface along the given curves (flat curve ids; use
    /// flat_curve_id). Curves in the set may cross each other.
    CutResult cut_along(const std::vector<char>& in_cut) const;

    int flat_curve_id(CurveId c) const;
    int flat_curve_count() const { return flat_curve_count_; }
    CurveId curve_of_flat(int flat) const { return flat_curve_refs_[flat]; }

    int arc_edge(int letter, int arc) const { return arc_edge_base_[letter] + arc; }

private:
    void build_embedding();
    void build_cells();
    void build_rotation();
    void trace_faces();
    int flat_event_base_unsafe(CurveId c, int index) const;

    const Arrangement* arr_;

    // perturbed moment-curve positions per boundary point
    std::vector<long long> pos_;

    int event_count_ = 0;
    int vertex_count_ = 0;
    int face_count_ = 0;
    int flat_curve_count_ = 0;

    std::vector<EventRef> event_refs_;
    std::vector<int> event_flat_of_hit_pid_;
    std::vector<CurveId> flat_curve_refs_;
    std::vector<int> curve_flat_base_; // per family

    // per chord: crossing indices sorted along the chord, and segment edges
    std::vector<std::vector<int>> chord_cross_;
    std::vector<std::vector<int>> chord_seg_edges_;
    std::vector<std::pair<int, int>> cross_rank_; // (rank on chord_a, rank on chord_b)

    // edges
    std::vector<int> arc_edge_base_; // per edge letter
    std::vector<int> edge_arc_letter_, edge_arc_index_;
    std::vector<int> edge_chord_, edge_chord_rank_;
    std::vector<int> edge_from_, edge_to_;

    std::vector<int> sigma_;
    std::vector<int> face_of_dart_;
    std::vector<std::vector<int>> face_darts_;
};

} // namespace trisect

#endif
