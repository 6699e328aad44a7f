#include "trisect/bigon.hpp"

#include "trisect/complex.hpp"
#include "trisect/editor.hpp"

#include <algorithm>
#include <optional>

namespace trisect {

namespace {

struct Run {
    CurveId curve;
    bool forward = true;           // traversal vs. the curve's orientation
    std::vector<int> event_indices; // events passed strictly inside, in walk order
    int start_chord_index = 0;      // chord of the curve at the starting corner
    int end_chord_index = 0;
};

struct Bigon {
    Run u_run; // on famA; this arc moves
    Run v_run; // on famB
    std::string key;
};

// Decode one run of circle darts (all on one curve between two corners).
Run decode_run(const CellComplex& cc, const std::vector<int>& darts) {
    const Arrangement& arr = cc.arrangement();
    Run run;
    if (darts.empty()) throw InternalError("bigon: empty run");
    int e0 = CellComplex::edge_of_dart(darts.front());
    run.curve = arr.chords()[cc.seg_chord(e0)].curve;
    run.forward = CellComplex::dart_forward(darts.front());
    run.start_chord_index = arr.chords()[cc.seg_chord(e0)].index;
    run.end_chord_index = arr.chords()[cc.seg_chord(CellComplex::edge_of_dart(darts.back()))].index;
    for (size_t i = 0; i < darts.size(); ++i) {
        int d = darts[i];
        int e = CellComplex::edge_of_dart(d);
        if (cc.edge_is_arc(e)) throw InternalError("bigon: boundary arc on a cut circle");
        if (!(arr.chords()[cc.seg_chord(e)].curve == run.curve))
            throw InternalError("bigon: run switches curve without a corner");
        if (CellComplex::dart_forward(d) != run.forward)
            throw InternalError("bigon: run switches direction");
        if (i + 1 < darts.size()) {
            int v = cc.dart_origin(darts[i + 1]);
            if (cc.vertex_is_slot(v)) {
                auto ref = cc.event_ref(cc.slot_event(v));
                if (!(ref.curve == run.curve))
                    throw InternalError("bigon: foreign event inside a run");
                run.event_indices.push_back(ref.index);
            }
        }
    }
    return run;
}

std::string run_key(const Arrangement& arr, const Run& r) {
    std::string s = arr.curve(r.curve).name + "/" + (r.forward ? "+" : "-") + "/" +
                    std::to_string(r.start_chord_index) + "-" +
                    std::to_string(r.end_chord_index) + ":";
    for (int e : r.event_indices) s += std::to_string(e) + ",";
    return s;
}

std::optional<Bigon> find_smallest_bigon(const Arrangement& arr, int fa, int fb) {
    if (arr.genus() == 0) return std::nullopt;
    CellComplex cc(arr);
    std::vector<char> in_cut(cc.flat_curve_count(), 0);
    for (int c = 0; c < (int)arr.families()[fa].curves.size(); ++c)
        in_cut[cc.flat_curve_id({fa, c})] = 1;
    for (int c = 0; c < (int)arr.families()[fb].curves.size(); ++c)
        in_cut[cc.flat_curve_id({fb, c})] = 1;
    auto cut = cc.cut_along(in_cut);

    std::optional<Bigon> best;
    for (size_t ci = 0; ci < cut.circle_darts.size(); ++ci) {
        if (cut.circle_corners[ci] != 2) continue;
        int comp = cut.circle_component[ci];
        if (cut.components[comp].euler != 1) continue;
        if (cut.components[comp].boundary_circles != 1) continue;

        const auto& darts = cut.circle_darts[ci];
        int m = (int)darts.size();
        std::vector<int> corner_pos; // i such that the junction after darts[i] is a corner
        for (int i = 0; i < m; ++i) {
            int v = cc.dart_origin(darts[(i + 1) % m]);
            if (!cc.vertex_is_crossing(v)) continue;
            const auto& x = arr.crossings()[cc.crossing_index(v)];
            bool ac = in_cut[cc.flat_curve_id(arr.chords()[x.chord_a].curve)];
            bool bc = in_cut[cc.flat_curve_id(arr.chords()[x.chord_b].curve)];
            if (ac && bc) corner_pos.push_back(i);
        }
        if (corner_pos.size() != 2) throw InternalError("bigon: corner count mismatch");
        int vx = cc.dart_origin(darts[(corner_pos[0] + 1) % m]);
        int vy = cc.dart_origin(darts[(corner_pos[1] + 1) % m]);
        if (vx == vy) continue; // degenerate two-turn region, not a reducible bigon

        auto slice = [&](int from, int to) {
            std::vector<int> out;
            for (int i = (from + 1) % m; ; i = (i + 1) % m) {
                out.push_back(darts[i]);
                if (i == to) break;
            }
            return out;
        };
        Run r1 = decode_run(cc, slice(corner_pos[0], corner_pos[1]));
        Run r2 = decode_run(cc, slice(corner_pos[1], corner_pos[0]));
        if (r1.curve.family == r2.curve.family) throw InternalError("bigon: runs in one family");

        Bigon b;
        if (r1.curve.family == fa) {
            b.u_run = r1;
            b.v_run = r2;
        } else {
            b.u_run = r2;
            b.v_run = r1;
        }
        b.key = run_key(arr, b.u_run) + "|" + run_key(arr, b.v_run);
        if (!best || b.key < best->key) best = b;
    }
    return best;
}

Arrangement reduce_one(const Arrangement& arr, const Bigon& b) {
    const Run& ur = b.u_run;
    const Run& vr = b.v_run;
    const Curve& ucrv = arr.curve(ur.curve);
    int m = (int)ucrv.events.size();

    // Forward-order window of u events replaced by the rerouted arc. The run
    // lists them in walk order; normalize to the curve's orientation.
    std::vector<int> window = ur.event_indices;
    if (!ur.forward) std::reverse(window.begin(), window.end());
    int s_chord = ur.forward ? ur.start_chord_index : ur.end_chord_index;
    int t_chord = ur.forward ? ur.end_chord_index : ur.start_chord_index;

    // Kept events: t_chord+1 .. s_chord cyclically (none when the arc covers
    // the whole curve; the parallel strand then carries it alone).
    std::vector<int> kept;
    if ((int)window.size() < m) {
        for (int i = (t_chord + 1) % m;; i = (i + 1) % m) {
            kept.push_back(i);
            if (i == s_chord) break;
        }
    }
    if ((int)kept.size() + (int)window.size() != m)
        throw InternalError("bigon: window/kept mismatch");
    if (kept.empty() && vr.event_indices.empty())
        throw ValidationError("bigon reduction erases curve '" + ucrv.name +
                              "' (curve is inessential)");

    ArrangementEditor ed(arr);
    std::vector<ArrangementEditor::NewEvent> events;
    for (int i : kept) events.push_back({ed.token_of(ur.curve, i), ucrv.events[i].seg});

    // Parallel copies of the v-arc on the side away from the bigon. Cut
    // components sit on the right of their boundary darts, so the bigon is on
    // v's right when the v-run is forward and the parallel goes left.
    const Curve& vcrv = arr.curve(vr.curve);
    std::vector<int> v_events = vr.event_indices;
    bool v_travel_forward = vr.forward;
    // u's forward arc direction must match; the circle walks u then v, so the
    // parallel follows the v-run reversed exactly when the u-run was forward.
    if (ur.forward) {
        std::reverse(v_events.begin(), v_events.end());
        v_travel_forward = !v_travel_forward;
    }
    bool parallel_on_v_left = vr.forward;
    for (int vi : v_events) {
        const auto& vev = vcrv.events[vi];
        bool after = ArrangementEditor::after_flag_for_side(vev.seg, parallel_on_v_left);
        int tok = ed.insert_adjacent(ed.token_of(vr.curve, vi), after);
        int seg = v_travel_forward ? vev.seg : SurfaceModel::partner(vev.seg);
        events.push_back({tok, seg});
    }

    for (int i : window) ed.erase(ed.token_of(ur.curve, i));
    return ed.finish_with_replacement(ur.curve, events);
}

} // namespace

int family_crossings(const Arrangement& arr, int fa, int fb) {
    int total = 0;
    for (int i = 0; i < (int)arr.families()[fa].curves.size(); ++i)
        for (int j = 0; j < (int)arr.families()[fb].curves.size(); ++j)
            total += arr.geometric_crossings({fa, i}, {fb, j});
    return total;
}

Arrangement reduce_bigons(const Arrangement& arr, std::string_view famA, std::string_view famB) {
    int fa = arr.family_index_checked(famA);
    int fb = arr.family_index_checked(famB);
    if (fa == fb) return arr;

    Arrangement cur = arr;
    while (true) {
        auto bigon = find_smallest_bigon(cur, fa, fb);
        if (!bigon) return cur;
        int before = family_crossings(cur, fa, fb);
        Arrangement next = reduce_one(cur, *bigon);
        int after = family_crossings(next, fa, fb);
        // The taut redraw of the rerouted arc may resolve further bigons in
        // the same stroke, but it must strictly reduce, in pairs.
        if (after >= before || (before - after) % 2 != 0)
            throw InternalError("bigon reduction changed crossings by " +
                                std::to_string(after - before));
        cur = std::move(next);
    }
}

} // namespace trisect
