#ifndef TRISECT_TESTS_ORACLE_HPP
#define TRISECT_TESTS_ORACLE_HPP

#include "trisect/surface.hpp"

#include <vector>

namespace trisect::testing {

// Independent face/cut oracle: regions of the chord subdivision of the polygon
// computed by corner-merging flood fill over exact convex-position geometry,
// then glued across polygon edges by union-find. Shares no code with the
// rotation-system tracer in the library.
class FloodOracle {
public:
    explicit FloodOracle(const Arrangement& arr);

    // Number of planar regions; equals the face count of the glued complex.
    int region_count() const { return region_count_; }
    int crossing_count() const { return crossing_count_; }

    struct CutComponentInfo {
        int euler = 0;
        int boundary_circles = 0;
    };
    // Cut the glued surface along the given curves (flat ids in arrangement
    // family/curve order). The cut curves must be pairwise disjoint.
    std::vector<CutComponentInfo> cut_components(const std::vector<char>& in_cut) const;

private:
    const Arrangement* arr_;
    int region_count_ = 0;
    int crossing_count_ = 0;

    // chords, as endpoint circle-item indices
    struct OChord {
        int item_from, item_to;
        int flat_curve;
    };
    struct OCross {
        int chord_a, chord_b;
    };
    std::vector<OChord> chords_;
    std::vector<OCross> crossings_;
    std::vector<std::vector<int>> chord_cross_sorted_; // crossing ids along chord
    // region id of each (edge piece, side); pieces indexed as below
    // arcs: one per circle gap (between consecutive circle items)
    // segments: chord ch, rank t
    std::vector<int> arc_region_;                  // inner side per circle arc
    std::vector<std::vector<int>> seg_region_l_;   // per chord, per segment
    std::vector<std::vector<int>> seg_region_r_;
    std::vector<int> circle_items_;                // -1-k for corner k, else pid
    std::vector<int> item_of_pid_;
    int items_ = 0;

    int seg_count(int ch) const { return (int)chord_cross_sorted_[ch].size() + 1; }
};

} // namespace trisect::testing

#endif
