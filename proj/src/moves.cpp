#include "trisect/moves.hpp"

#include "trisect/complex.hpp"
#include "trisect/editor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_set>
#include <set>
#include <sstream>

namespace trisect {

namespace {

int canonical_gap(const Arrangement& arr, int seg, int gap) {
    int letter = SurfaceModel::edge_of(seg);
    int n = arr.edge_crossings(letter);
    if (gap < 1 || gap > n + 1)
        throw ValidationError("band gap " + std::to_string(gap) + " out of range on segment " +
                              arr.surface().segment_name(seg));
    return SurfaceModel::is_lowercase(seg) ? gap - 1 : n + 1 - gap;
}

} // namespace

namespace {
std::optional<std::pair<CurveId, int>> find_backtrack(const Arrangement& arr) {
    for (int f = 0; f < (int)arr.families().size(); ++f)
        for (int c = 0; c < (int)arr.families()[f].curves.size(); ++c) {
            const auto& ev = arr.families()[f].curves[c].events;
            int m = static_cast<int>(ev.size());
            if (m < 3) continue; // a 2-event curve would be erased entirely
            for (int t = 0; t < m; ++t) {
                CrossingEvent resume = arr.partner_point(ev[t]);
                const CrossingEvent& hit = ev[(t + 1) % m];
                if (resume.seg != hit.seg) continue;
                if (std::abs(resume.slot - hit.slot) != 1) continue;
                return std::make_pair(CurveId{f, c}, t);
            }
        }
    return std::nullopt;
}
} // namespace

Arrangement remove_edge_backtracks(const Arrangement& arr) {
    Arrangement cur = arr;
    while (auto bt = find_backtrack(cur)) {
        auto [cid, t] = *bt;
        const auto& ev = cur.curve(cid).events;
        int m = static_cast<int>(ev.size());
        ArrangementEditor ed(cur);
        std::vector<ArrangementEditor::NewEvent> events;
        for (int k = 0; k < m; ++k) {
            if (k == t || k == (t + 1) % m) continue;
            events.push_back({ed.token_of(cid, k), ev[k].seg});
        }
        ed.erase(ed.token_of(cid, t));
        ed.erase(ed.token_of(cid, (t + 1) % m));
        cur = ed.finish_with_replacement(cid, events);
    }
    return cur;
}

namespace {

// Cheap rejection of a candidate surgery: checks that the replacement curve
// embeds, stays off its own family, and keeps the family a cut system, all
// from the editor's token layout. Survivors are rebuilt and revalidated in
// full, so this only has to agree with the real checks, never replace them.
bool fast_surgery_ok(const ArrangementEditor& ed, CurveId replaced,
                     const std::vector<ArrangementEditor::NewEvent>& events,
                     bool enforce_cut_system) {
    const Arrangement& base = ed.base();
    const auto& srf = base.surface();
    auto layout = ed.layout();
    int nseg = srf.segment_count();

    std::vector<int> off(nseg + 1, 0);
    for (int s = 0; s < nseg; ++s) off[s + 1] = off[s] + layout.edge_n[SurfaceModel::edge_of(s)];

    auto pid = [&](int token, int seg) {
        int edge = SurfaceModel::edge_of(seg);
        int p = layout.canon[token];
        int slot = SurfaceModel::is_lowercase(seg) ? p : layout.edge_n[edge] - p + 1;
        return off[seg] + slot - 1;
    };
    auto resume_pid = [&](int token, int seg) { return pid(token, SurfaceModel::partner(seg)); };

    // Chords of the replacement curve.
    int m = static_cast<int>(events.size());
    std::vector<std::pair<int, int>> mine(m);
    for (int k = 0; k < m; ++k)
        mine[k] = {resume_pid(events[k].token, events[k].seg),
                   pid(events[(k + 1) % m].token, events[(k + 1) % m].seg)};

    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (cyclic_interleave(mine[a].first, mine[a].second, mine[b].first, mine[b].second))
                return false;

    // Disjointness from the rest of the family.
    const auto& fam = base.families()[replaced.family];
    for (int c = 0; c < (int)fam.curves.size(); ++c) {
        if (c == replaced.curve) continue;
        const auto& ev = fam.curves[c].events;
        int mc = static_cast<int>(ev.size());
        for (int k = 0; k < mc; ++k) {
            int from = resume_pid(ed.token_of({replaced.family, c}, k), ev[k].seg);
            int to = pid(ed.token_of({replaced.family, c}, (k + 1) % mc), ev[(k + 1) % mc].seg);
            for (int a = 0; a < m; ++a)
                if (cyclic_interleave(mine[a].first, mine[a].second, from, to)) return false;
        }
    }

    if (enforce_cut_system) {
        int g = base.genus();
        if ((int)fam.curves.size() != g) return false;
        std::vector<uint64_t> rows(g, 0);
        for (int c = 0; c < g; ++c) {
            if (c == replaced.curve) {
                for (const auto& ne : events) rows[c] ^= (uint64_t)1 << SurfaceModel::edge_of(ne.seg);
            } else {
                for (const auto& e : fam.curves[c].events)
                    rows[c] ^= (uint64_t)1 << SurfaceModel::edge_of(e.seg);
            }
        }
        int rank = 0;
        for (int bit = 0; bit < srf.edge_count() && rank < g; ++bit) {
            int piv = -1;
            for (int r = rank; r < g; ++r)
                if (rows[r] >> bit & 1) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[rank], rows[piv]);
            for (int r = 0; r < g; ++r)
                if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
            ++rank;
        }
        if (rank != g) return false;
    }
    return true;
}

Arrangement apply_slide(const Arrangement& arr, int fam, int i, int j, const BandArc& band,
                        bool enforce_cut_system) {
    const Curve& ci = arr.curve({fam, i});
    const Curve& cj = arr.curve({fam, j});
    int mi = static_cast<int>(ci.events.size());
    int mj = static_cast<int>(cj.events.size());
    if (band.chord_i < 0 || band.chord_i >= mi || band.chord_j < 0 || band.chord_j >= mj)
        throw IllegalSlide("band anchor chord out of range");

    ArrangementEditor ed(arr);
    std::vector<ArrangementEditor::NewEvent> events;
    events.reserve(mi + mj + 2 * band.events.size());

    // Curve i, full cycle starting after the anchor chord.
    for (int t = 1; t <= mi; ++t) {
        int idx = (band.chord_i + t) % mi;
        events.push_back({ed.token_of({fam, i}, idx), ci.events[idx].seg});
    }

    // Outgoing strand.
    std::vector<int> strand_tokens;
    for (const auto& be : band.events) {
        int tok = ed.insert_at_gap(SurfaceModel::edge_of(be.seg), canonical_gap(arr, be.seg, be.slot));
        strand_tokens.push_back(tok);
        events.push_back({tok, be.seg});
    }

    // Pushoff of curve j, full cycle from the anchor chord, on the attach side.
    for (int t = 1; t <= mj; ++t) {
        int idx = band.push_forward ? (band.chord_j + t) % mj
                                    : (band.chord_j - t + 1 + mj) % mj;
        const auto& ev = cj.events[idx];
        bool after = ArrangementEditor::after_flag_for_side(ev.seg, band.attach_left);
        int tok = ed.insert_adjacent(ed.token_of({fam, j}, idx), after);
        events.push_back({tok, band.push_forward ? ev.seg : SurfaceModel::partner(ev.seg)});
    }

    // Return strand, adjacent to the outgoing one.
    for (int t = static_cast<int>(band.events.size()) - 1; t >= 0; --t) {
        int tok = ed.insert_adjacent(strand_tokens[t], band.return_after);
        events.push_back({tok, SurfaceModel::partner(band.events[t].seg)});
    }

    if (!fast_surgery_ok(ed, {fam, i}, events, enforce_cut_system))
        throw IllegalSlide("slide produces an invalid arrangement");

    Arrangement out = [&] {
        try {
            return ed.finish_with_replacement({fam, i}, events);
        } catch (const ValidationError& e) {
            throw IllegalSlide(std::string("slide produces an invalid arrangement: ") + e.what());
        }
    }();
    out = remove_edge_backtracks(out);

    if (enforce_cut_system && !is_cut_system_fast(out, fam))
        throw IllegalSlide("slide result is not a cut system (the new curve bounds or parallels "
                           "a family member)");
    return out;
}

} // namespace

std::string BandArc::to_spec() const {
    std::ostringstream out;
    out << "i=" << curve_i << "." << chord_i << ";j=" << curve_j << "." << chord_j
        << ";side=" << (attach_left ? "L" : "R") << ";dir=" << (push_forward ? "+" : "-")
        << ";ret=" << (return_after ? "+" : "-") << ";ev=";
    for (size_t k = 0; k < events.size(); ++k) {
        if (k) out << ",";
        out << "#" << events[k].seg << "@" << events[k].slot;
    }
    return out.str();
}

BandArc BandArc::from_spec(const std::string& spec, const SurfaceModel& s) {
    BandArc b;
    std::istringstream in(spec);
    std::string part;
    bool saw_ev = false;
    while (std::getline(in, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw ValidationError("bad band spec near '" + part + "'");
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "i" || key == "j") {
            auto dot = val.find('.');
            if (dot == std::string::npos) throw ValidationError("bad band anchor '" + val + "'");
            int curve = std::stoi(val.substr(0, dot));
            int chord = std::stoi(val.substr(dot + 1));
            (key == "i" ? b.curve_i : b.curve_j) = curve;
            (key == "i" ? b.chord_i : b.chord_j) = chord;
        } else if (key == "side") {
            b.attach_left = val == "L";
        } else if (key == "dir") {
            b.push_forward = val == "+";
        } else if (key == "ret") {
            b.return_after = val == "+";
        } else if (key == "ev") {
            saw_ev = true;
            std::istringstream evs(val);
            std::string tok;
            while (std::getline(evs, tok, ',')) {
                if (tok.empty()) continue;
                auto at = tok.find('@');
                if (at == std::string::npos) throw ValidationError("bad band event '" + tok + "'");
                std::string segname = tok.substr(0, at);
                int seg;
                if (!segname.empty() && segname[0] == '#')
                    seg = std::stoi(segname.substr(1));
                else {
                    auto parsed = s.parse_segment(segname);
                    if (!parsed) throw ValidationError("bad band segment '" + segname + "'");
                    seg = *parsed;
                }
                b.events.push_back({seg, std::stoi(tok.substr(at + 1))});
            }
        } else {
            throw ValidationError("unknown band field '" + key + "'");
        }
    }
    if (!saw_ev || b.curve_i < 0 || b.curve_j < 0)
        throw ValidationError("band spec must carry i=, j= and ev= fields");
    return b;
}

Arrangement slide(const Arrangement& arr, std::string_view family, int i, int j,
                  const BandArc& band) {
    int fam = arr.family_index_checked(family);
    int count = static_cast<int>(arr.families()[fam].curves.size());
    if (i == j) throw IllegalSlide("cannot slide a curve over itself");
    if (i < 0 || i >= count || j < 0 || j >= count)
        throw IllegalSlide("curve index out of range");
    if (band.curve_i != i || band.curve_j != j)
        throw IllegalSlide("band anchors do not match the requested slide");
    if (arr.geometric_crossings({fam, i}, {fam, j}) != 0)
        throw IllegalSlide("curves must be disjoint");
    bool was_cut_system = is_cut_system_fast(arr, fam);
    return apply_slide(arr, fam, i, j, band, was_cut_system);
}

bool rel_slide_check(const std::vector<std::pair<int, int>>& slides,
                     const std::vector<int>& rel_set) {
    for (const auto& [i, j] : slides) {
        (void)i;
        if (std::find(rel_set.begin(), rel_set.end(), j) == rel_set.end()) return false;
    }
    return true;
}

std::vector<SlideCandidate> enumerate_slides(const Arrangement& arr, std::string_view family,
                                             int i, int j, int max_events, int max_transitions) {
    std::vector<SlideCandidate> out;
    int fam = arr.family_index_checked(family);
    if (i == j) return out;
    if (arr.genus() == 0) return out;
    const auto& curves = arr.families()[fam].curves;
    if (i < 0 || i >= (int)curves.size() || j < 0 || j >= (int)curves.size()) return out;

    CellComplex cc(arr);
    const auto& chords = arr.chords();
    bool enforce = is_cut_system_fast(arr, fam);

    // Walls: chord segments of the sliding family.
    std::vector<char> is_wall(cc.edge_count(), 0);
    for (int e = 0; e < cc.edge_count(); ++e)
        if (!cc.edge_is_arc(e) && chords[cc.seg_chord(e)].curve.family == fam) is_wall[e] = 1;

    // Band targets: for each face, the curve-j chords it touches and the side.
    struct Attach {
        int chord_j;
        bool left;
    };
    std::vector<std::vector<Attach>> attach(cc.face_count());
    for (int e = 0; e < cc.edge_count(); ++e) {
        if (cc.edge_is_arc(e)) continue;
        const auto& ch = chords[cc.seg_chord(e)];
        if (!(ch.curve == CurveId{fam, j})) continue;
        // The face on the right of the forward dart sees j's right side.
        attach[cc.face_of_dart(2 * e)].push_back({ch.index, false});
        attach[cc.face_of_dart(2 * e + 1)].push_back({ch.index, true});
    }

    // BFS over (face, event list) per start chord of curve i.
    const Curve& ci = curves[i];
    std::set<std::string> seen_results;
    std::vector<std::vector<CrossingEvent>> lists;
    std::map<std::string, int> list_ids;
    auto list_key = [](const std::vector<CrossingEvent>& ev) {
        std::string s;
        for (const auto& e : ev) s += std::to_string(e.seg) + "@" + std::to_string(e.slot) + ";";
        return s;
    };
    auto intern = [&](const std::vector<CrossingEvent>& ev) {
        auto key = list_key(ev);
        auto it = list_ids.find(key);
        if (it != list_ids.end()) return it->second;
        int id = static_cast<int>(lists.size());
        lists.push_back(ev);
        list_ids.emplace(std::move(key), id);
        return id;
    };

    for (int chord_i = 0; chord_i < (int)ci.events.size(); ++chord_i) {
        int gchord = arr.chord_id({fam, i}, chord_i);
        std::vector<char> start_face(cc.face_count(), 0);
        for (int t = 0; t < cc.chord_segment_count(gchord); ++t) {
            int e = cc.chord_segment_edge(gchord, t);
            start_face[cc.face_of_dart(2 * e)] = 1;
            start_face[cc.face_of_dart(2 * e + 1)] = 1;
        }

        struct State {
            int face;
            int list;
            int depth;
        };
        std::vector<State> queue;
        std::unordered_set<uint64_t> visited;
        auto vkey = [](int face, int list) { return (uint64_t)face << 32 | (uint32_t)list; };
        std::vector<CrossingEvent> empty;
        int empty_id = intern(empty);
        for (int f = 0; f < cc.face_count(); ++f)
            if (start_face[f] && visited.insert(vkey(f, empty_id)).second)
                queue.push_back({f, empty_id, 0});

        std::set<std::tuple<int, std::string, int, bool>> emitted;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            State st = queue[qi];

            // Candidate attachments in this face.
            for (const auto& at : attach[st.face]) {
                auto key = std::make_tuple(chord_i, list_key(lists[st.list]), at.chord_j, at.left);
                if (!emitted.insert(key).second) continue;
                for (bool fwd : {true, false})
                    for (bool ret : {true, false}) {
                        if (!ret && lists[st.list].empty()) continue; // no return strand
                        BandArc band;
                        band.curve_i = i;
                        band.chord_i = chord_i;
                        band.curve_j = j;
                        band.chord_j = at.chord_j;
                        band.attach_left = at.left;
                        band.events = lists[st.list];
                        band.push_forward = fwd;
                        band.return_after = ret;
                        try {
                            Arrangement res = apply_slide(arr, fam, i, j, band, enforce);
                            std::string canon = res.canonical_form();
                            if (seen_results.insert(canon).second)
                                out.push_back({band, std::move(res), std::move(canon)});
                        } catch (const IllegalSlide&) {
                            // not realizable; skip
                        }
                    }
            }

            if (st.depth >= max_transitions) continue;
            // Expand through non-wall edges.
            for (int d : cc.face_darts(st.face)) {
                int e = CellComplex::edge_of_dart(d);
                if (is_wall[e]) continue;
                int other = cc.face_of_dart(CellComplex::twin(d));
                if (cc.edge_is_arc(e)) {
                    if ((int)lists[st.list].size() >= max_events) continue;
                    // Crossing from this side: the backward dart flanks the
                    // lowercase chart, the forward dart the uppercase one.
                    bool from_lower = !CellComplex::dart_forward(d);
                    int letter = cc.arc_letter(e);
                    int n = arr.edge_crossings(letter);
                    int seg = SurfaceModel::lower_segment_of_edge(letter);
                    int gap;
                    if (from_lower) {
                        gap = cc.arc_index(e) + 1;
                    } else {
                        seg = SurfaceModel::partner(seg);
                        gap = n + 1 - cc.arc_index(e);
                    }
                    auto ev = lists[st.list];
                    ev.push_back({seg, gap});
                    int id = intern(ev);
                    if (visited.insert(vkey(other, id)).second)
                        queue.push_back({other, id, st.depth + 1});
                } else {
                    if (visited.insert(vkey(other, st.list)).second)
                        queue.push_back({other, st.list, st.depth + 1});
                }
            }
        }
    }
    return out;
}

std::vector<BandArc> enumerate_bands(const Arrangement& arr, std::string_view family, int i,
                                     int j, int max_events, int max_transitions) {
    std::vector<BandArc> out;
    for (auto& cand : enumerate_slides(arr, family, i, j, max_events, max_transitions))
        out.push_back(cand.band);
    return out;
}

TrisectionDiagram connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b) {
    return diagram_connect_sum(a, b);
}

TrisectionDiagram stabilize(const TrisectionDiagram& d, int kind) {
    if (kind < 1 || kind > 3) throw ValidationError("stabilization kind must be 1, 2 or 3");
    static const char* names[] = {"S100", "S010", "S001"};
    return diagram_connect_sum(d, catalog(names[kind - 1]));
}

} // namespace trisect
