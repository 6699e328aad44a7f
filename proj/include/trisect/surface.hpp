#ifndef TRISECT_SURFACE_HPP
#define TRISECT_SURFACE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trisect {

// Thrown when input data violates a structural invariant (bad slot table,
// crossing curves inside a family, malformed file, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Thrown when an internal consistency check fails (e.g. the Euler relation).
// Indicates a bug, never a bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(std::string msg) : std::logic_error(std::move(msg)) {}
};

/// Closed orientable genus-g surface presented as a 4g-gon with boundary word
/// a1 b1 A1 B1 a2 b2 A2 B2 ... (counterclockwise, capitals = reversed edge).
/// Genus 0 is the empty polygon: a sphere carrying only the empty arrangement.
struct SurfaceModel {
    int genus = 0;

    int segment_count() const { return 4 * genus; }
    int edge_count() const { return 2 * genus; }

    // Segment s encodes handle h = s/4 and role s%4: 0=a_h, 1=b_h, 2=A_h, 3=B_h.
    static int handle_of(int seg) { return seg / 4; }
    static bool is_lowercase(int seg) { return seg % 4 < 2; }
    static int partner(int seg) { return seg % 4 < 2 ? seg + 2 : seg - 2; }
    // Edges are numbered 2h (letter a_h) and 2h+1 (letter b_h).
    static int edge_of(int seg) { return 2 * handle_of(seg) + (seg % 2); }
    // The lowercase segment carrying a given edge.
    static int lower_segment_of_edge(int edge) { return 4 * (edge / 2) + (edge % 2); }

    std::string segment_name(int seg) const;
    // Parses "a1".."aG", "b..", "A..", "B.."; nullopt if malformed or out of range.
    std::optional<int> parse_segment(std::string_view name) const;
};

/// One transverse crossing of a curve with a polygon segment. Slots along a
/// segment are numbered 1..N in the counterclockwise boundary direction; slot s
/// on a segment is glued to slot N-s+1 on the partner segment.
struct CrossingEvent {
    int seg = 0;
    int slot = 0;

    bool operator==(const CrossingEvent&) const = default;
};

/// Closed curve as a cyclic, oriented sequence of crossing events. Consecutive
/// events bound a straight chord inside the polygon, from the glued partner
/// point of one event to the recorded point of the next.
struct Curve {
    std::string name;
    std::vector<CrossingEvent> events;
};

struct Family {
    std::string name;
    std::vector<Curve> curves;
};

struct CurveId {
    int family = -1;
    int curve = -1;

    bool operator==(const CurveId&) const = default;
};

/// A validated multicurve arrangement: curves grouped into named families,
/// pairwise disjoint within each family. Immutable after construction; all
/// derived geometry (boundary points, chords, crossings) is built eagerly.
class Arrangement {
public:
    struct Chord {
        CurveId curve;
        int index = 0;    // chord k runs from resume(event k) to hit(event k+1)
        int from_pid = 0; // boundary point id of the resume point
        int to_pid = 0;   // boundary point id of the hit point
    };

    struct Crossing {
        int chord_a = 0;
        int chord_b = 0; // chord_a < chord_b
        int sign = 0;    // +1 iff (a.start, b.start, a.end, b.end) is ccw
    };

    // Validates and builds. Throws ValidationError on any structural defect.
    static Arrangement create(SurfaceModel surface, std::vector<Family> families);

    const SurfaceModel& surface() const { return surface_; }
    int genus() const { return surface_.genus; }
    const std::vector<Family>& families() const { return families_; }

    int family_index(std::string_view name) const; // -1 when absent
    int family_index_checked(std::string_view name) const;
    const Family& family(int f) const { return families_[f]; }
    const Curve& curve(CurveId id) const { return families_[id.family].curves[id.curve]; }
    int curve_count() const;

    // --- boundary points ------------------------------------------------
    // Points are all (segment, slot) pairs, ordered counterclockwise:
    // segments in polygon word order, slots ascending. Each event owns two
    // points, the recorded (hit) point and its glued partner (resume) point.
    int edge_crossings(int edge) const { return edge_counts_[edge]; }
    int segment_points(int seg) const { return edge_counts_[SurfaceModel::edge_of(seg)]; }
    int point_count() const { return total_points_; }
    int point_id(int seg, int slot) const { return seg_offsets_[seg] + slot - 1; }
    CrossingEvent point_of(int pid) const;
    static CrossingEvent partner_point(const SurfaceModel& s, CrossingEvent p, int edge_n);
    CrossingEvent partner_point(CrossingEvent p) const;

    // Canonical position of an event along its edge, 1..N in the direction of
    // the lowercase segment.
    int canonical_pos(CrossingEvent e) const;

    // --- chords and crossings --------------------------------------------
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int chord_id(CurveId c, int index) const;
    const std::vector<int>& curve_chords(CurveId c) const;
    // Which (curve, event index) hits / resumes at a boundary point.
    struct PointUse {
        CurveId curve;
        int event = 0;
        bool is_hit = false;
    };
    const PointUse& point_use(int pid) const { return point_uses_[pid]; }

    /// All boundary points in counterclockwise cyclic order.
    std::vector<CrossingEvent> boundary_order() const;

    struct CrossingRecord {
        int chord_u = 0; // chord index within u
        int chord_v = 0; // chord index within v
        int sign = 0;    // sign of (u, v)
    };
    /// Transverse crossings between two curves (u == v allowed; a curve never
    /// crosses itself in a valid arrangement).
    std::vector<CrossingRecord> chord_crossings(CurveId u, CurveId v) const;
    int geometric_crossings(CurveId u, CurveId v) const;
    int algebraic_crossings(CurveId u, CurveId v) const;

    /// Deterministic byte string, equal for arrangements differing only by
    /// curve renaming within families, event rotation, or curve reversal.
    std::string canonical_form() const;

    /// Event list of the orientation-reversed curve (partner points, reversed).
    static std::vector<CrossingEvent> reversed_events(const SurfaceModel& s,
                                                      const std::vector<CrossingEvent>& events,
                                                      const std::vector<int>& edge_counts);
    std::vector<CrossingEvent> reversed_events(const std::vector<CrossingEvent>& events) const;

    /// Canonical encoding of one event cycle (minimum over rotations and the
    /// reversal image), used both for canonical_form and curve equality.
    std::string canonical_curve_key(const std::vector<CrossingEvent>& events) const;
    static std::string cycle_key(const SurfaceModel& s, const std::vector<CrossingEvent>& events,
                                 const std::vector<int>& edge_counts);

private:
    Arrangement() = default;
    void build(); // derives points, chords, crossings; throws on invalid data

    SurfaceModel surface_;
    std::vector<Family> families_;

    std::vector<int> edge_counts_;
    std::vector<int> seg_offsets_;
    int total_points_ = 0;

    std::vector<PointUse> point_uses_;
    std::vector<Chord> chords_;
    std::vector<std::vector<int>> curve_chord_ids_; // indexed by flat curve id
    std::vector<int> curve_flat_ids_;               // family offsets
    std::vector<Crossing> crossings_;
};

/// True iff the two point pairs interleave in the cyclic boundary order.
bool cyclic_interleave(int a1, int a2, int b1, int b2);
/// True iff x lies strictly inside the ccw open interval (from, to).
bool ccw_between(int from, int x, int to);

} // namespace trisect

#endif
