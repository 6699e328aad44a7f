#ifndef TRISECT_EDITOR_HPP
#define TRISECT_EDITOR_HPP

#include "trisect/surface.hpp"

#include <vector>

namespace trisect {

/// Surgery buffer for rebuilding an arrangement with inserted and deleted
/// events. Tokens are prospective crossings kept in per-edge ordered lists
/// (canonical, lowercase-side order); slots are renumbered on finish(). Used
/// by bigon reduction and handle slides, which both route new strands through
/// positions adjacent to existing events or through gaps between them.
class ArrangementEditor {
public:
    explicit ArrangementEditor(const Arrangement& base);

    // Token of an existing event of the base arrangement.
    int token_of(CurveId c, int event_index) const;

    // New token immediately adjacent to an existing token on the same edge.
    int insert_adjacent(int token, bool after_in_canonical);

    // New token in the gap after canonical position g (0..N) of an edge,
    // positions counted in the base arrangement. Repeated inserts in one gap
    // stack in call order.
    int insert_at_gap(int edge, int gap);

    void erase(int token);

    // Helper: the canonical-side flag for inserting a parallel strand at an
    // event recorded on segment `seg`, running on the curve's left (true) or
    // right. Left of the curve at its recorded (exit) point is the ascending
    // direction along that segment.
    static bool after_flag_for_side(int seg, bool left_of_curve) {
        return left_of_curve == SurfaceModel::is_lowercase(seg);
    }

    struct NewEvent {
        int token = -1;
        int seg = -1; // recording segment; fixes the crossing direction
    };
    struct NewCurve {
        std::string name;
        std::vector<NewEvent> events;
    };
    struct NewFamily {
        std::string name;
        std::vector<NewCurve> curves;
    };

    /// Assemble and validate. Every live token must be referenced exactly once.
    Arrangement finish(const std::vector<NewFamily>& families) const;

    /// Convenience: rebuild from the base families, replacing exactly one
    /// curve's event list (all other curves keep their base tokens).
    Arrangement finish_with_replacement(CurveId replaced,
                                        const std::vector<NewEvent>& events) const;

    /// Final canonical position of every live token and crossing counts per
    /// edge, without building an arrangement. Lets callers test candidate
    /// surgeries cheaply before committing to a full rebuild.
    struct Layout {
        std::vector<int> canon;  // per token, 1-based; 0 for dead tokens
        std::vector<int> edge_n; // per edge letter
    };
    Layout layout() const;

    const Arrangement& base() const { return *base_; }

private:
    const Arrangement* base_;

    // Tokens form doubly linked lists per edge (indices into the arrays; -1
    // terminates). No per-operation allocation.
    std::vector<int> token_edge_;
    std::vector<int> next_, prev_;
    std::vector<char> live_;
    std::vector<int> head_, tail_;               // per edge
    std::vector<std::vector<int>> base_tokens_;  // per edge, canonical order
    std::vector<int> event_token_base_;          // per flat curve: first event's token
    std::vector<std::vector<int>> event_token_;  // per flat curve, per event

    int flat_curve(CurveId c) const;
    int new_token_before(int edge, int before); // before = -1 appends at tail
};

} // namespace trisect

#endif
