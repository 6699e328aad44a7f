#include "trisect/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace trisect {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Intersection abscissa of two parabola chords, as an exact fraction. The
// chord through points (p, p^2) and (q, q^2) has the line y = (p+q)x - pq.
struct Frac {
    __int128 num;
    __int128 den; // kept positive
};

Frac chord_intersection_x(long long p1, long long q1, long long p2, long long q2) {
    __int128 num = (__int128)p2 * q2 - (__int128)p1 * q1;
    __int128 den = ((__int128)p2 + q2) - ((__int128)p1 + q1);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

int frac_cmp(const Frac& a, const Frac& b) {
    __int128 lhs = a.num * b.den;
    __int128 rhs = b.num * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

} // namespace

int CellComplex::flat_curve_id(CurveId c) const { return curve_flat_base_[c.family] + c.curve; }

int CellComplex::flat_event_id(CurveId c, int index) const {
    const auto& ev = arr_->curve(c).events[index];
    return event_flat_of_hit_pid_[arr_->point_id(ev.seg, ev.slot)];
}

int CellComplex::rank_on_chord(int crossing_idx, int chord) const {
    const auto& x = arr_->crossings()[crossing_idx];
    if (x.chord_a == chord) return cross_rank_[crossing_idx].first;
    if (x.chord_b == chord) return cross_rank_[crossing_idx].second;
    throw InternalError("crossing does not lie on chord");
}

CellComplex::CellComplex(const Arrangement& arr) : arr_(&arr) {
    if (arr.genus() == 0) throw InternalError("no cell complex on the genus-0 sphere");
    build_embedding();
    build_cells();
    build_rotation();
    trace_faces();

    int V = vertex_count_;
    int E = edge_count();
    int F = face_count_;
    if (V - E + F != 2 - 2 * arr.genus())
        throw InternalError("Euler relation violated: V-E+F=" + std::to_string(V - E + F) +
                            " expected " + std::to_string(2 - 2 * arr.genus()));
}

void CellComplex::build_embedding() {
    // Boundary points live on a convex arc; exact positions break ties in the
    // order of crossings along a chord. Retry with a new perturbation on any
    // exact concurrence.
    int P = arr_->point_count();
    const auto& chords = arr_->chords();
    const auto& crossings = arr_->crossings();

    chord_cross_.assign(chords.size(), {});
    cross_rank_.assign(crossings.size(), {0, 0});

    for (uint64_t attempt = 0;; ++attempt) {
        if (attempt > 64) throw InternalError("could not reach a generic chord embedding");
        pos_.resize(P);
        for (int p = 0; p < P; ++p) {
            long long r = attempt == 0 ? 0 : (long long)(splitmix64(attempt * 0x10001ull + p) & 63);
            pos_[p] = 64LL * p + r;
        }

        for (auto& v : chord_cross_) v.clear();
        for (const auto& x : crossings) {
            chord_cross_[x.chord_a].push_back(static_cast<int>(&x - crossings.data()));
            chord_cross_[x.chord_b].push_back(static_cast<int>(&x - crossings.data()));
        }

        bool degenerate = false;
        for (size_t ch = 0; ch < chords.size() && !degenerate; ++ch) {
            auto& list = chord_cross_[ch];
            if (list.size() < 2) continue;
            long long p1 = pos_[chords[ch].from_pid], q1 = pos_[chords[ch].to_pid];
            std::vector<Frac> key(list.size());
            for (size_t i = 0; i < list.size(); ++i) {
                const auto& x = crossings[list[i]];
                int other = (x.chord_a == (int)ch) ? x.chord_b : x.chord_a;
                key[i] = chord_intersection_x(p1, q1, pos_[chords[other].from_pid],
                                              pos_[chords[other].to_pid]);
            }
            std::vector<int> idx(list.size());
            std::iota(idx.begin(), idx.end(), 0);
            bool ascending = p1 < q1;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                int c = frac_cmp(key[a], key[b]);
                return ascending ? c < 0 : c > 0;
            });
            for (size_t i = 0; i + 1 < idx.size(); ++i)
                if (frac_cmp(key[idx[i]], key[idx[i + 1]]) == 0) degenerate = true;
            std::vector<int> sorted(list.size());
            for (size_t i = 0; i < idx.size(); ++i) sorted[i] = list[idx[i]];
            list = std::move(sorted);
        }
        if (degenerate) continue;

        for (size_t ch = 0; ch < chord_cross_.size(); ++ch)
            for (size_t r = 0; r < chord_cross_[ch].size(); ++r) {
                int xi = chord_cross_[ch][r];
                if (crossings[xi].chord_a == (int)ch)
                    cross_rank_[xi].first = static_cast<int>(r);
                else
                    cross_rank_[xi].second = static_cast<int>(r);
            }
        return;
    }
}

void CellComplex::build_cells() {
    const auto& fams = arr_->families();
    const auto& chords = arr_->chords();

    // Flat curve / event numbering.
    curve_flat_base_.assign(fams.size(), 0);
    for (size_t f = 1; f < fams.size(); ++f)
        curve_flat_base_[f] = curve_flat_base_[f - 1] + static_cast<int>(fams[f - 1].curves.size());
    flat_curve_count_ = fams.empty() ? 0
                                     : curve_flat_base_.back() +
                                           static_cast<int>(fams.back().curves.size());
    flat_curve_refs_.clear();
    event_refs_.clear();
    event_flat_of_hit_pid_.assign(arr_->point_count(), -1);
    for (int f = 0; f < (int)fams.size(); ++f)
        for (int c = 0; c < (int)fams[f].curves.size(); ++c) {
            flat_curve_refs_.push_back({f, c});
            const auto& ev = fams[f].curves[c].events;
            for (int k = 0; k < (int)ev.size(); ++k) {
                event_flat_of_hit_pid_[arr_->point_id(ev[k].seg, ev[k].slot)] =
                    static_cast<int>(event_refs_.size());
                event_refs_.push_back({{f, c}, k});
            }
        }
    event_count_ = static_cast<int>(event_refs_.size());
    vertex_count_ = 1 + event_count_ + static_cast<int>(arr_->crossings().size());

    // Vertex of the canonical position p on an edge letter: the slot vertex of
    // whichever event occupies it. The point is either the hit point of the
    // event recorded on the lowercase side, or the resume point of the event
    // recorded on the partner side; both name the same glued vertex.
    const auto& srf = arr_->surface();
    auto canon_vertex = [&](int letter, int p) {
        int lower = SurfaceModel::lower_segment_of_edge(letter);
        const auto& use = arr_->point_use(arr_->point_id(lower, p));
        int fe = use.is_hit ? event_flat_of_hit_pid_[arr_->point_id(lower, p)]
                            : flat_event_base_unsafe(use.curve, use.event);
        return 1 + fe;
    };
    (void)srf;

    edge_arc_letter_.clear();
    edge_arc_index_.clear();
    edge_chord_.clear();
    edge_chord_rank_.clear();
    edge_from_.clear();
    edge_to_.clear();

    auto add_edge = [&](int letter, int arc, int chord, int rank, int vfrom, int vto) {
        edge_arc_letter_.push_back(letter);
        edge_arc_index_.push_back(arc);
        edge_chord_.push_back(chord);
        edge_chord_rank_.push_back(rank);
        edge_from_.push_back(vfrom);
        edge_to_.push_back(vto);
        return static_cast<int>(edge_arc_letter_.size()) - 1;
    };

    // Boundary arcs, in canonical (lowercase segment) direction.
    arc_edge_base_.assign(srf.edge_count(), 0);
    for (int letter = 0; letter < srf.edge_count(); ++letter) {
        int n = arr_->edge_crossings(letter);
        arc_edge_base_[letter] = static_cast<int>(edge_arc_letter_.size());
        for (int j = 0; j <= n; ++j) {
            int vfrom = j == 0 ? 0 : canon_vertex(letter, j);
            int vto = j == n ? 0 : canon_vertex(letter, j + 1);
            add_edge(letter, j, -1, -1, vfrom, vto);
        }
    }

    // Chord segments, split at crossings ordered along each chord.
    chord_seg_edges_.assign(chords.size(), {});
    for (int ch = 0; ch < (int)chords.size(); ++ch) {
        const auto& chord = chords[ch];
        const Curve& crv = arr_->curve(chord.curve);
        int m = static_cast<int>(crv.events.size());
        int v_from = 1 + flat_event_base_unsafe(chord.curve, chord.index);
        int v_to = 1 + flat_event_base_unsafe(chord.curve, (chord.index + 1) % m);
        const auto& xs = chord_cross_[ch];
        int segs = static_cast<int>(xs.size()) + 1;
        chord_seg_edges_[ch].resize(segs);
        for (int t = 0; t < segs; ++t) {
            int a = t == 0 ? v_from : 1 + event_count_ + xs[t - 1];
            int b = t == segs - 1 ? v_to : 1 + event_count_ + xs[t];
            chord_seg_edges_[ch][t] = add_edge(-1, -1, ch, t, a, b);
        }
    }
}

int CellComplex::flat_event_base_unsafe(CurveId c, int index) const {
    const auto& ev = arr_->curve(c).events[index];
    return event_flat_of_hit_pid_[arr_->point_id(ev.seg, ev.slot)];
}

void CellComplex::build_rotation() {
    const auto& srf = arr_->surface();
    const auto& chords = arr_->chords();
    sigma_.assign(dart_count(), -1);

    auto fwd = [](int e) { return 2 * e; };
    auto bwd = [](int e) { return 2 * e + 1; };

    auto apply_fan = [&](const std::vector<int>& fan) {
        for (size_t i = 0; i < fan.size(); ++i) sigma_[fan[i]] = fan[(i + 1) % fan.size()];
    };

    // Corner: out-darts of the 4g sides, in the gluing cycle k -> partner(k-1).
    {
        std::vector<int> fan;
        int nseg = srf.segment_count();
        int k = 0;
        do {
            int letter = SurfaceModel::edge_of(k);
            int n = arr_->edge_crossings(letter);
            int dart = SurfaceModel::is_lowercase(k) ? fwd(arc_edge_base_[letter])
                                                     : bwd(arc_edge_base_[letter] + n);
            fan.push_back(dart);
            k = SurfaceModel::partner((k - 1 + nseg) % nseg);
        } while (k != 0);
        if ((int)fan.size() != nseg) throw InternalError("corner gluing cycle is broken");
        apply_fan(fan);
    }

    // Slot vertices: [ascending along the recorded segment, dart back along the
    // arriving chord, descending, dart out along the resuming chord].
    for (int fe = 0; fe < event_count_; ++fe) {
        const auto& ref = event_refs_[fe];
        const Curve& crv = arr_->curve(ref.curve);
        int m = static_cast<int>(crv.events.size());
        const auto& e = crv.events[ref.index];
        int letter = SurfaceModel::edge_of(e.seg);
        int p = arr_->canonical_pos(e);
        int n = arr_->edge_crossings(letter);
        bool lower = SurfaceModel::is_lowercase(e.seg);
        int asc = lower ? fwd(arc_edge_base_[letter] + p) : bwd(arc_edge_base_[letter] + p - 1);
        int desc = lower ? bwd(arc_edge_base_[letter] + p - 1) : fwd(arc_edge_base_[letter] + p);
        (void)n;
        int hit_chord = arr_->chord_id(ref.curve, (ref.index - 1 + m) % m);
        int resume_chord = arr_->chord_id(ref.curve, ref.index);
        int hit_dart = bwd(chord_seg_edges_[hit_chord].back());
        int resume_dart = fwd(chord_seg_edges_[resume_chord].front());
        apply_fan({asc, hit_dart, desc, resume_dart});
    }

    // Crossing vertices: the four chord-segment darts, interleaved; the ccw
    // order depends on the crossing sign.
    const auto& crossings = arr_->crossings();
    for (int xi = 0; xi < (int)crossings.size(); ++xi) {
        const auto& x = crossings[xi];
        int ra = cross_rank_[xi].first, rb = cross_rank_[xi].second;
        int a_start = bwd(chord_seg_edges_[x.chord_a][ra]);
        int a_end = fwd(chord_seg_edges_[x.chord_a][ra + 1]);
        int b_start = bwd(chord_seg_edges_[x.chord_b][rb]);
        int b_end = fwd(chord_seg_edges_[x.chord_b][rb + 1]);
        if (x.sign > 0)
            apply_fan({a_start, b_start, a_end, b_end});
        else
            apply_fan({a_start, b_end, a_end, b_start});
        (void)chords;
    }

    for (int d = 0; d < dart_count(); ++d)
        if (sigma_[d] < 0) throw InternalError("incomplete rotation system");
}

void CellComplex::trace_faces() {
    face_of_dart_.assign(dart_count(), -1);
    face_darts_.clear();
    for (int d0 = 0; d0 < dart_count(); ++d0) {
        if (face_of_dart_[d0] >= 0) continue;
        int id = static_cast<int>(face_darts_.size());
        face_darts_.emplace_back();
        int d = d0;
        do {
            face_of_dart_[d] = id;
            face_darts_.back().push_back(d);
            d = sigma_[twin(d)];
        } while (d != d0);
    }
    face_count_ = static_cast<int>(face_darts_.size());
}

std::vector<Face> CellComplex::faces() const {
    std::vector<Face> out(face_count_);
    for (int f = 0; f < face_count_; ++f) {
        for (int d : face_darts_[f]) {
            int e = edge_of_dart(d);
            WalkStep step;
            if (edge_is_arc(e)) {
                step.kind = WalkStep::BoundaryArc;
                step.edge_letter = edge_arc_letter_[e];
                step.arc_index = edge_arc_index_[e];
            } else {
                step.kind = WalkStep::ChordSegment;
                step.chord = edge_chord_[e];
                step.segment = edge_chord_rank_[e];
            }
            step.forward = dart_forward(d);
            out[f].walk.push_back(step);
        }
    }
    return out;
}

std::vector<ComplementComponent> cut_complement(const Arrangement& arr, std::string_view family) {
    int f = arr.family_index_checked(family);
    const auto& curves = arr.families()[f].curves;
    for (int a = 0; a < (int)curves.size(); ++a)
        for (int b = a + 1; b < (int)curves.size(); ++b)
            if (arr.geometric_crossings({f, a}, {f, b}) != 0)
                throw ValidationError("family curves cross: '" + curves[a].name + "' and '" +
                                      curves[b].name + "'");
    if (arr.genus() == 0) return {{2, 0}};

    CellComplex cc(arr);
    std::vector<char> in_cut(cc.flat_curve_count(), 0);
    for (int c = 0; c < (int)curves.size(); ++c) in_cut[cc.flat_curve_id({f, c})] = 1;
    auto cut = cc.cut_along(in_cut);
    std::vector<ComplementComponent> out;
    int total = 0;
    for (const auto& comp : cut.components) {
        out.push_back({comp.euler, comp.boundary_circles});
        total += comp.euler;
    }
    if (total != 2 - 2 * arr.genus())
        throw InternalError("cut complement Euler characteristics do not sum to 2-2g");
    return out;
}

CutResult CellComplex::cut_along(const std::vector<char>& in_cut) const {
    const auto& chords = arr_->chords();
    int E = edge_count();

    auto edge_in_cut = [&](int e) {
        if (edge_is_arc(e)) return false;
        return in_cut[flat_curve_id(chords[edge_chord_[e]].curve)] != 0;
    };

    // Union faces across every edge not on the cut.
    std::vector<int> parent(face_count_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < E; ++e) {
        if (edge_in_cut(e)) continue;
        int a = find(face_of_dart_[2 * e]), b = find(face_of_dart_[2 * e + 1]);
        if (a != b) parent[a] = b;
    }

    CutResult res;
    std::vector<int> comp_id(face_count_, -1);
    for (int f = 0; f < face_count_; ++f) {
        int r = find(f);
        if (comp_id[r] < 0) {
            comp_id[r] = res.component_count++;
        }
        comp_id[f] = comp_id[r];
    }
    res.comp_of_face.assign(face_count_, -1);
    for (int f = 0; f < face_count_; ++f) res.comp_of_face[f] = comp_id[find(f)];
    res.components.assign(res.component_count, CutComponent{});
    for (int f = 0; f < face_count_; ++f) res.components[res.comp_of_face[f]].faces++;

    // chi = interior vertices - interior edges + faces.
    std::vector<int> interior_edges(res.component_count, 0);
    for (int e = 0; e < E; ++e)
        if (!edge_in_cut(e)) interior_edges[res.comp_of_face[face_of_dart_[2 * e]]]++;

    std::vector<char> vertex_on_cut(vertex_count_, 0);
    for (int e = 0; e < E; ++e)
        if (edge_in_cut(e)) {
            vertex_on_cut[edge_from_[e]] = 1;
            vertex_on_cut[edge_to_[e]] = 1;
        }
    std::vector<int> interior_vertices(res.component_count, 0);
    std::vector<int> vertex_comp(vertex_count_, -1);
    for (int e = 0; e < E; ++e) {
        int c = res.comp_of_face[face_of_dart_[2 * e]];
        if (vertex_comp[edge_from_[e]] < 0) vertex_comp[edge_from_[e]] = c;
        if (vertex_comp[edge_to_[e]] < 0) vertex_comp[edge_to_[e]] = c;
    }
    for (int v = 0; v < vertex_count_; ++v)
        if (!vertex_on_cut[v]) {
            if (vertex_comp[v] < 0) throw InternalError("isolated vertex in complex");
            interior_vertices[vertex_comp[v]]++;
        }
    for (int c = 0; c < res.component_count; ++c)
        res.components[c].euler =
            interior_vertices[c] - interior_edges[c] + res.components[c].faces;

    // Boundary circles: orbits of cut darts under "rotate past the fan to the
    // next cut dart".
    auto next_boundary = [&](int d) {
        int e = sigma_[twin(d)];
        while (!edge_in_cut(edge_of_dart(e))) e = sigma_[e];
        return e;
    };
    std::vector<char> seen(dart_count(), 0);
    for (int d0 = 0; d0 < dart_count(); ++d0) {
        if (seen[d0] || !edge_in_cut(edge_of_dart(d0))) continue;
        std::vector<int> circle;
        int corners = 0;
        int d = d0;
        do {
            seen[d] = 1;
            circle.push_back(d);
            int nd = next_boundary(d);
            // Junction vertex between consecutive boundary darts: a corner of
            // the cut component exactly when it is a crossing of two cut curves.
            int v = dart_origin(nd);
            if (vertex_is_crossing(v)) {
                const auto& x = arr_->crossings()[crossing_index(v)];
                bool a_cut = in_cut[flat_curve_id(chords[x.chord_a].curve)];
                bool b_cut = in_cut[flat_curve_id(chords[x.chord_b].curve)];
                if (a_cut && b_cut) ++corners;
            }
            d = nd;
        } while (d != d0);
        int comp = res.comp_of_face[face_of_dart_[d0]];
        for (int cd : circle)
            if (res.comp_of_face[face_of_dart_[cd]] != comp)
                throw InternalError("boundary circle straddles components");
        res.circle_darts.push_back(std::move(circle));
        res.circle_component.push_back(comp);
        res.circle_corners.push_back(corners);
        res.components[comp].boundary_circles++;
    }
    return res;
}

} // namespace trisect
