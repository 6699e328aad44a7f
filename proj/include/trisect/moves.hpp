#ifndef TRISECT_MOVES_HPP
#define TRISECT_MOVES_HPP

#include "trisect/diagram.hpp"
#include "trisect/surface.hpp"

#include <string>
#include <vector>

namespace trisect {

class IllegalSlide : public ValidationError {
public:
    explicit IllegalSlide(std::string msg) : ValidationError(std::move(msg)) {}
};

/// A band guiding a slide of curve i over curve j within one family. The band
/// leaves curve i at one of its chords, crosses polygon edges at the listed
/// gap positions (seg = exit side, slot = gap index 1..N+1 along that
/// segment), and attaches to a chord of curve j on the given side. The two
/// routing flags fix how the strands close up around curve j; enumeration
/// emits every embeddable combination.
struct BandArc {
    int curve_i = -1;
    int chord_i = 0;
    int curve_j = -1;
    int chord_j = 0;
    bool attach_left = true; // side of curve j, relative to its orientation
    std::vector<CrossingEvent> events;
    bool push_forward = true;  // pushoff runs along or against curve j
    bool return_after = true;  // return strand on the canonical-after side

    std::string to_spec() const;
    static BandArc from_spec(const std::string& spec, const SurfaceModel& s);
};

/// Removes out-and-back edge crossings: consecutive events whose connecting
/// chord has adjacent boundary endpoints bound an empty sliver with the edge,
/// so erasing both is an isotopy. Slide results are normalized this way, which
/// makes the inverse of a slide restore the original curve exactly.
Arrangement remove_edge_backtracks(const Arrangement& arr);

/// Slide curve i over curve j along the band: curve i is replaced by the
/// band-connected boundary component that traverses curve i, one band strand,
/// a pushoff of curve j, and the other strand. Throws IllegalSlide when the
/// result is not an embedded family-disjoint curve, or when the family was a
/// cut system and would stop being one.
Arrangement slide(const Arrangement& arr, std::string_view family, int i, int j,
                  const BandArc& band);

/// True iff every slide (i, j) in the sequence has j in the rel set.
bool rel_slide_check(const std::vector<std::pair<int, int>>& slides,
                     const std::vector<int>& rel_set);

struct SlideCandidate {
    BandArc band;
    Arrangement result;
    std::string canonical; // canonical_form of the result
};

/// All slides of curve i over curve j realizable by bands with at most
/// max_events boundary crossings and max_transitions face transitions,
/// deduplicated by the canonical form of the slid arrangement. Deterministic
/// order.
std::vector<SlideCandidate> enumerate_slides(const Arrangement& arr, std::string_view family,
                                             int i, int j, int max_events, int max_transitions);

std::vector<BandArc> enumerate_bands(const Arrangement& arr, std::string_view family, int i,
                                     int j, int max_events, int max_transitions);

/// Connect sum at the corner face; parameters add.
TrisectionDiagram connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);

/// Connect sum with the genus-1 catalog piece S100/S010/S001 (kind 1, 2, 3).
TrisectionDiagram stabilize(const TrisectionDiagram& d, int kind);

} // namespace trisect

#endif
