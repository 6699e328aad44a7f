#include "trisect/surface.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace trisect {

std::string SurfaceModel::segment_name(int seg) const {
    static const char* roles = "abAB";
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%c%d", roles[seg % 4], handle_of(seg) + 1);
    return buf;
}

std::optional<int> SurfaceModel::parse_segment(std::string_view name) const {
    if (name.size() < 2) return std::nullopt;
    int role;
    switch (name[0]) {
        case 'a': role = 0; break;
        case 'b': role = 1; break;
        case 'A': role = 2; break;
        case 'B': role = 3; break;
        default: return std::nullopt;
    }
    int handle = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        handle = handle * 10 + (name[i] - '0');
        if (handle > genus) return std::nullopt;
    }
    if (handle < 1 || handle > genus) return std::nullopt;
    return 4 * (handle - 1) + role;
}

bool ccw_between(int from, int x, int to) {
    if (from < to) return from < x && x < to;
    return x > from || x < to;
}

bool cyclic_interleave(int a1, int a2, int b1, int b2) {
    // Exactly one endpoint of {b1,b2} inside the ccw interval (a1, a2).
    return ccw_between(a1, b1, a2) != ccw_between(a1, b2, a2);
}

int Arrangement::family_index(std::string_view name) const {
    for (size_t i = 0; i < families_.size(); ++i)
        if (families_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Arrangement::family_index_checked(std::string_view name) const {
    int f = family_index(name);
    if (f < 0) throw ValidationError("unknown family: " + std::string(name));
    return f;
}

int Arrangement::curve_count() const {
    int n = 0;
    for (const auto& f : families_) n += static_cast<int>(f.curves.size());
    return n;
}

CrossingEvent Arrangement::point_of(int pid) const {
    int seg = 0;
    while (seg + 1 < surface_.segment_count() && seg_offsets_[seg + 1] <= pid) ++seg;
    return {seg, pid - seg_offsets_[seg] + 1};
}

CrossingEvent Arrangement::partner_point(const SurfaceModel& s, CrossingEvent p, int edge_n) {
    return {s.partner(p.seg), edge_n - p.slot + 1};
}

CrossingEvent Arrangement::partner_point(CrossingEvent p) const {
    return partner_point(surface_, p, edge_counts_[SurfaceModel::edge_of(p.seg)]);
}

int Arrangement::canonical_pos(CrossingEvent e) const {
    int n = edge_counts_[SurfaceModel::edge_of(e.seg)];
    return SurfaceModel::is_lowercase(e.seg) ? e.slot : n - e.slot + 1;
}

int Arrangement::chord_id(CurveId c, int index) const {
    return curve_chord_ids_[curve_flat_ids_[c.family] + c.curve][index];
}

const std::vector<int>& Arrangement::curve_chords(CurveId c) const {
    return curve_chord_ids_[curve_flat_ids_[c.family] + c.curve];
}

Arrangement Arrangement::create(SurfaceModel surface, std::vector<Family> families) {
    Arrangement a;
    a.surface_ = surface;
    a.families_ = std::move(families);
    a.build();
    return a;
}

void Arrangement::build() {
    if (surface_.genus < 0) throw ValidationError("negative genus");
    if (surface_.genus == 0) {
        for (const auto& f : families_)
            if (!f.curves.empty())
                throw ValidationError("genus 0 admits only the empty arrangement (family '" +
                                      f.name + "' has curves)");
    }

    // Family names must be distinct.
    for (size_t i = 0; i < families_.size(); ++i)
        for (size_t j = i + 1; j < families_.size(); ++j)
            if (families_[i].name == families_[j].name)
                throw ValidationError("duplicate family name: " + families_[i].name);

    // Count crossings per edge and check slot sanity per segment.
    edge_counts_.assign(surface_.edge_count(), 0);
    for (const auto& f : families_) {
        for (const auto& c : f.curves) {
            if (c.events.empty())
                throw ValidationError("curve '" + c.name + "' has no events (inessential)");
            for (const auto& e : c.events) {
                if (e.seg < 0 || e.seg >= surface_.segment_count())
                    throw ValidationError("curve '" + c.name + "': segment out of range");
                if (e.slot < 1)
                    throw ValidationError("curve '" + c.name + "': slot must be positive");
                ++edge_counts_[SurfaceModel::edge_of(e.seg)];
            }
        }
    }

    // Each edge's crossings must occupy canonical positions 1..N exactly once.
    // An event recorded at slot s of a lowercase segment sits at canonical
    // position s; on an uppercase segment at position N-s+1.
    std::vector<std::vector<int>> seen(surface_.edge_count());
    for (int e = 0; e < surface_.edge_count(); ++e) seen[e].assign(edge_counts_[e] + 1, 0);
    for (const auto& f : families_) {
        for (const auto& c : f.curves) {
            for (const auto& e : c.events) {
                int edge = SurfaceModel::edge_of(e.seg);
                int n = edge_counts_[edge];
                if (e.slot > n)
                    throw ValidationError("slot " + surface_.segment_name(e.seg) + "@" +
                                          std::to_string(e.slot) + " exceeds crossing count " +
                                          std::to_string(n) + " of its edge (slot table has gaps)");
                int pos = SurfaceModel::is_lowercase(e.seg) ? e.slot : n - e.slot + 1;
                if (seen[edge][pos]++)
                    throw ValidationError("double occupancy at " + surface_.segment_name(e.seg) +
                                          "@" + std::to_string(e.slot));
            }
        }
    }

    // Boundary point table.
    seg_offsets_.assign(surface_.segment_count() + 1, 0);
    for (int s = 0; s < surface_.segment_count(); ++s)
        seg_offsets_[s + 1] = seg_offsets_[s] + edge_counts_[SurfaceModel::edge_of(s)];
    total_points_ = seg_offsets_[surface_.segment_count()];
    seg_offsets_.pop_back();

    // Point uses and chords.
    point_uses_.assign(total_points_, PointUse{});
    chords_.clear();
    curve_chord_ids_.clear();
    curve_flat_ids_.assign(families_.size(), 0);
    for (size_t f = 1; f < families_.size(); ++f)
        curve_flat_ids_[f] = curve_flat_ids_[f - 1] + static_cast<int>(families_[f - 1].curves.size());
    curve_chord_ids_.resize(curve_count());

    for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        for (int c = 0; c < static_cast<int>(families_[f].curves.size()); ++c) {
            CurveId id{f, c};
            const auto& ev = families_[f].curves[c].events;
            int m = static_cast<int>(ev.size());
            auto& ids = curve_chord_ids_[curve_flat_ids_[f] + c];
            ids.resize(m);
            for (int k = 0; k < m; ++k) {
                CrossingEvent hit = ev[(k + 1) % m];
                CrossingEvent resume = partner_point(ev[k]);
                int from = point_id(resume.seg, resume.slot);
                int to = point_id(hit.seg, hit.slot);
                point_uses_[from] = PointUse{id, k, false};
                point_uses_[to] = PointUse{id, (k + 1) % m, true};
                ids[k] = static_cast<int>(chords_.size());
                chords_.push_back(Chord{id, k, from, to});
            }
        }
    }

    // All crossings, by chord endpoint interleaving.
    crossings_.clear();
    int nch = static_cast<int>(chords_.size());
    for (int i = 0; i < nch; ++i) {
        for (int j = i + 1; j < nch; ++j) {
            const Chord &a = chords_[i], &b = chords_[j];
            if (!cyclic_interleave(a.from_pid, a.to_pid, b.from_pid, b.to_pid)) continue;
            int sign = ccw_between(a.from_pid, b.from_pid, a.to_pid) ? +1 : -1;
            crossings_.push_back(Crossing{i, j, sign});
        }
    }

    // Embeddedness: chords of one curve never interleave; curves within a
    // family are pairwise disjoint.
    for (const auto& x : crossings_) {
        const Chord &a = chords_[x.chord_a], &b = chords_[x.chord_b];
        if (a.curve == b.curve)
            throw ValidationError("curve '" + curve(a.curve).name + "' crosses itself");
        if (a.curve.family == b.curve.family)
            throw ValidationError("family '" + families_[a.curve.family].name + "': curves '" +
                                  curve(a.curve).name + "' and '" + curve(b.curve).name +
                                  "' cross");
    }
}

std::vector<CrossingEvent> Arrangement::boundary_order() const {
    std::vector<CrossingEvent> out;
    out.reserve(total_points_);
    for (int pid = 0; pid < total_points_; ++pid) out.push_back(point_of(pid));
    return out;
}

std::vector<Arrangement::CrossingRecord> Arrangement::chord_crossings(CurveId u, CurveId v) const {
    std::vector<CrossingRecord> out;
    for (const auto& x : crossings_) {
        const Chord &a = chords_[x.chord_a], &b = chords_[x.chord_b];
        if (a.curve == u && b.curve == v)
            out.push_back({a.index, b.index, x.sign});
        else if (a.curve == v && b.curve == u)
            out.push_back({b.index, a.index, -x.sign});
    }
    return out;
}

int Arrangement::geometric_crossings(CurveId u, CurveId v) const {
    return static_cast<int>(chord_crossings(u, v).size());
}

int Arrangement::algebraic_crossings(CurveId u, CurveId v) const {
    int s = 0;
    for (const auto& r : chord_crossings(u, v)) s += r.sign;
    return s;
}

std::vector<CrossingEvent> Arrangement::reversed_events(const SurfaceModel& s,
                                                        const std::vector<CrossingEvent>& events,
                                                        const std::vector<int>& edge_counts) {
    std::vector<CrossingEvent> out;
    out.reserve(events.size());
    for (auto it = events.rbegin(); it != events.rend(); ++it)
        out.push_back(partner_point(s, *it, edge_counts[SurfaceModel::edge_of(it->seg)]));
    return out;
}

std::vector<CrossingEvent> Arrangement::reversed_events(const std::vector<CrossingEvent>& events) const {
    return reversed_events(surface_, events, edge_counts_);
}

namespace {

std::string encode_cycle(const std::vector<CrossingEvent>& ev) {
    // Least rotation under a compact big-endian byte code of the events.
    int m = static_cast<int>(ev.size());
    auto encode_from = [&](int start) {
        std::string s;
        s.reserve(4 * m);
        for (int k = 0; k < m; ++k) {
            const auto& e = ev[(start + k) % m];
            s.push_back(char(e.seg >> 8));
            s.push_back(char(e.seg & 0xff));
            s.push_back(char(e.slot >> 8));
            s.push_back(char(e.slot & 0xff));
        }
        return s;
    };
    std::string best = encode_from(0);
    for (int r = 1; r < m; ++r) {
        std::string cand = encode_from(r);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

} // namespace

std::string Arrangement::cycle_key(const SurfaceModel& s, const std::vector<CrossingEvent>& events,
                                   const std::vector<int>& edge_counts) {
    return std::min(encode_cycle(events), encode_cycle(reversed_events(s, events, edge_counts)));
}

std::string Arrangement::canonical_curve_key(const std::vector<CrossingEvent>& events) const {
    return cycle_key(surface_, events, edge_counts_);
}

std::string Arrangement::canonical_form() const {
    std::ostringstream out;
    out << "g" << surface_.genus;
    std::vector<int> order(families_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return families_[a].name < families_[b].name; });
    for (int f : order) {
        out << "|" << families_[f].name << ":";
        std::vector<std::string> keys;
        keys.reserve(families_[f].curves.size());
        for (const auto& c : families_[f].curves) keys.push_back(canonical_curve_key(c.events));
        std::sort(keys.begin(), keys.end());
        for (const auto& k : keys) out << "(" << k << ")";
    }
    return out.str();
}

} // namespace trisect
