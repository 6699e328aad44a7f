#include "trisect/diagram.hpp"

#include "trisect/bigon.hpp"
#include "trisect/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace trisect {

Arrangement restrict_to_families(const Arrangement& arr, const std::vector<std::string>& names) {
    const auto& srf = arr.surface();
    std::vector<Family> kept;
    for (const auto& name : names) {
        int f = arr.family_index_checked(name);
        kept.push_back(arr.families()[f]);
    }
    // Renumber slots: rank of each kept event among kept events per edge.
    std::vector<std::vector<int>> positions(srf.edge_count());
    for (const auto& fam : kept)
        for (const auto& crv : fam.curves)
            for (const auto& e : crv.events)
                positions[SurfaceModel::edge_of(e.seg)].push_back(arr.canonical_pos(e));
    for (auto& v : positions) std::sort(v.begin(), v.end());
    for (auto& fam : kept)
        for (auto& crv : fam.curves)
            for (auto& e : crv.events) {
                int letter = SurfaceModel::edge_of(e.seg);
                const auto& pos = positions[letter];
                int p = arr.canonical_pos(e);
                int rank =
                    1 + int(std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
                int n = static_cast<int>(pos.size());
                e.slot = SurfaceModel::is_lowercase(e.seg) ? rank : n - rank + 1;
            }
    return Arrangement::create(srf, kept);
}

HeegaardDiagram trisection_pair(const TrisectionDiagram& d, int pair) {
    static const int idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::string a = kTrisectionFamilies[idx[pair][0]];
    std::string b = kTrisectionFamilies[idx[pair][1]];
    return HeegaardDiagram{restrict_to_families(d.arrangement, {a, b}), a, b};
}

CutSystemReport validate_cut_system(const Arrangement& arr, std::string_view family) {
    int f = arr.family_index_checked(family);
    int g = arr.genus();
    int count = static_cast<int>(arr.families()[f].curves.size());
    if (count != g)
        return {false,
                "family '" + std::string(family) + "' has " + std::to_string(count) +
                    " curves, genus is " + std::to_string(g),
                0};
    if (g == 0) return {true, "", 1};

    CellComplex cc(arr);
    std::vector<char> in_cut(cc.flat_curve_count(), 0);
    for (int c = 0; c < count; ++c) in_cut[cc.flat_curve_id({f, c})] = 1;
    auto cut = cc.cut_along(in_cut);
    if (cut.component_count != 1)
        return {false,
                "complement of family '" + std::string(family) + "' has " +
                    std::to_string(cut.component_count) + " components (must be connected)",
                cut.component_count};
    // Forced once connected, asserted anyway.
    if (cut.components[0].euler != 2 - 2 * g)
        throw InternalError("cut system complement has wrong Euler characteristic");
    if (cut.components[0].boundary_circles != 2 * g)
        throw InternalError("cut system complement has wrong boundary count");
    return {true, "", 1};
}

bool is_cut_system_fast(const Arrangement& arr, int family_index) {
    int g = arr.genus();
    const auto& fam = arr.families()[family_index];
    if ((int)fam.curves.size() != g) return false;
    if (g == 0) return true;
    // Mod-2 crossing parities per edge; a separating subfamily would be a
    // mod-2 boundary, so independence over GF(2) is exactly connectivity.
    int edges = arr.surface().edge_count();
    std::vector<uint64_t> rows(g, 0);
    if (edges > 64) throw InternalError("GF(2) cut test limited to genus <= 32");
    for (int c = 0; c < g; ++c)
        for (const auto& e : fam.curves[c].events)
            rows[c] ^= (uint64_t)1 << SurfaceModel::edge_of(e.seg);
    int rank = 0;
    for (int bit = 0; bit < edges && rank < g; ++bit) {
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
    return rank == g;
}

std::string extracted_curve_key(const Arrangement& arr, CurveId c) {
    const auto& srf = arr.surface();
    const auto& events = arr.curve(c).events;
    std::vector<std::vector<int>> own(srf.edge_count());
    for (const auto& e : events) own[SurfaceModel::edge_of(e.seg)].push_back(arr.canonical_pos(e));
    for (auto& v : own) std::sort(v.begin(), v.end());
    std::vector<CrossingEvent> solo = events;
    std::vector<int> counts(srf.edge_count());
    for (int l = 0; l < srf.edge_count(); ++l) counts[l] = static_cast<int>(own[l].size());
    for (auto& e : solo) {
        int letter = SurfaceModel::edge_of(e.seg);
        int p = arr.canonical_pos(e);
        int rank = 1 + int(std::lower_bound(own[letter].begin(), own[letter].end(), p) -
                           own[letter].begin());
        e.slot = SurfaceModel::is_lowercase(e.seg) ? rank : counts[letter] - rank + 1;
    }
    return Arrangement::cycle_key(srf, solo, counts);
}

namespace {

// Reduce the two families and return the arrangement plus family indices.
struct ReducedPair {
    Arrangement arr;
    int fa, fb;
};

ReducedPair reduced_pair(const Arrangement& arr, std::string_view famA, std::string_view famB) {
    arr.family_index_checked(famA);
    arr.family_index_checked(famB);
    Arrangement red = famA == famB ? arr : reduce_bigons(arr, famA, famB);
    return {red, red.family_index_checked(famA), red.family_index_checked(famB)};
}

} // namespace

IntMatrix geometric_intersection_matrix(const Arrangement& arr, std::string_view famA,
                                        std::string_view famB) {
    auto rp = reduced_pair(arr, famA, famB);
    int na = static_cast<int>(rp.arr.families()[rp.fa].curves.size());
    int nb = static_cast<int>(rp.arr.families()[rp.fb].curves.size());
    IntMatrix m(na, nb);
    if (famA == famB) return m; // disjoint after pushoff
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            m.at(i, j) = rp.arr.geometric_crossings({rp.fa, i}, {rp.fb, j});
    return m;
}

IntMatrix algebraic_intersection_matrix(const Arrangement& arr, std::string_view famA,
                                        std::string_view famB) {
    auto rp = reduced_pair(arr, famA, famB);
    int na = static_cast<int>(rp.arr.families()[rp.fa].curves.size());
    int nb = static_cast<int>(rp.arr.families()[rp.fb].curves.size());
    IntMatrix m(na, nb);
    if (famA == famB) return m;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            m.at(i, j) = rp.arr.algebraic_crossings({rp.fb, j}, {rp.fa, i});
    return m;
}

bool is_gk_standard(const HeegaardDiagram& h, int k, const std::vector<int>& first_order,
                    const std::vector<int>& second_order) {
    const Arrangement& arr = h.arrangement;
    int g = arr.genus();
    if (k < 0 || k > g) return false;
    auto is_perm = [&](const std::vector<int>& p) {
        if ((int)p.size() != g) return false;
        std::vector<char> seen(g, 0);
        for (int x : p) {
            if (x < 0 || x >= g || seen[x]) return false;
            seen[x] = 1;
        }
        return true;
    };
    if (!is_perm(first_order) || !is_perm(second_order))
        throw ValidationError("indexing is not a permutation");

    auto rp = reduced_pair(arr, h.first, h.second);
    IntMatrix gm(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            gm.at(i, j) = rp.arr.geometric_crossings({rp.fa, i}, {rp.fb, j});

    for (int p = 0; p < g; ++p)
        for (int q = 0; q < g; ++q) {
            long long want = (p == q && p >= k) ? 1 : 0;
            if (gm.at(first_order[p], second_order[q]) != want) return false;
        }
    for (int p = 0; p < k; ++p) {
        if (extracted_curve_key(rp.arr, {rp.fa, first_order[p]}) !=
            extracted_curve_key(rp.arr, {rp.fb, second_order[p]}))
            return false;
    }
    return true;
}

std::optional<GkWitness> find_gk_standard(const HeegaardDiagram& h) {
    const Arrangement& arr = h.arrangement;
    int g = arr.genus();
    if (g == 0) return GkWitness{0, {}, {}};
    auto rp = reduced_pair(arr, h.first, h.second);

    IntMatrix gm(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            gm.at(i, j) = rp.arr.geometric_crossings({rp.fa, i}, {rp.fb, j});

    // Every row/column needs at most one crossing, and it must be single.
    std::vector<int> dual_of(g, -1), row_sum(g, 0), col_sum(g, 0);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (gm.at(i, j) == 0) continue;
            if (gm.at(i, j) != 1) return std::nullopt;
            row_sum[i]++;
            col_sum[j]++;
            dual_of[i] = j;
        }
    for (int i = 0; i < g; ++i)
        if (row_sum[i] > 1 || col_sum[i] > 1) return std::nullopt;

    // Zero rows must pair with zero columns carrying the same extracted curve;
    // keys are unique within a family, so the matching is a lookup.
    std::map<std::string, int> second_zero_keys;
    for (int j = 0; j < g; ++j)
        if (col_sum[j] == 0) second_zero_keys[extracted_curve_key(rp.arr, {rp.fb, j})] = j;

    GkWitness w;
    std::vector<std::pair<int, int>> duals;
    for (int i = 0; i < g; ++i) {
        if (row_sum[i] == 1) {
            duals.push_back({i, dual_of[i]});
            continue;
        }
        auto it = second_zero_keys.find(extracted_curve_key(rp.arr, {rp.fa, i}));
        if (it == second_zero_keys.end()) return std::nullopt;
        w.first_order.push_back(i);
        w.second_order.push_back(it->second);
        second_zero_keys.erase(it);
    }
    if (!second_zero_keys.empty()) return std::nullopt;
    w.k = static_cast<int>(w.first_order.size());
    for (auto& [i, j] : duals) {
        w.first_order.push_back(i);
        w.second_order.push_back(j);
    }
    return w;
}

std::optional<StandardTrisectionWitness> is_standard_trisection(const TrisectionDiagram& d) {
    for (auto name : kTrisectionFamilies)
        if (!validate_cut_system(d.arrangement, name).pass) return std::nullopt;
    StandardTrisectionWitness w;
    for (int p = 0; p < 3; ++p) {
        auto gk = find_gk_standard(trisection_pair(d, p));
        if (!gk) return std::nullopt;
        w.pairs[p] = *gk;
    }
    w.params = {d.genus(), w.pairs[0].k, w.pairs[1].k, w.pairs[2].k};
    return w;
}

bool is_dualized(const Arrangement& arr, std::string_view family, std::string_view dual_family) {
    auto rp = reduced_pair(arr, dual_family, family);
    int nd = static_cast<int>(rp.arr.families()[rp.fa].curves.size());
    int nf = static_cast<int>(rp.arr.families()[rp.fb].curves.size());
    if (nd != nf) return false;
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nf; ++j)
            if (rp.arr.geometric_crossings({rp.fa, i}, {rp.fb, j}) != (i == j ? 1 : 0))
                return false;
    return true;
}

StructureReport validate_trisection_structure(const TrisectionDiagram& d) {
    for (auto name : kTrisectionFamilies) {
        if (d.arrangement.family_index(name) < 0)
            return {false, std::string("missing family '") + name + "'"};
        auto rep = validate_cut_system(d.arrangement, name);
        if (!rep.pass) return {false, rep.message};
    }
    if (d.claimed) {
        if (d.claimed->g != d.genus())
            return {false, "claimed genus does not match the arrangement"};
        if (d.claimed->k1 < 0 || d.claimed->k2 < 0 || d.claimed->k3 < 0)
            return {false, "claimed parameters must be non-negative"};
    }
    return {true, ""};
}

namespace {

TrisectionDiagram genus1(const std::vector<CrossingEvent>& alpha,
                         const std::vector<CrossingEvent>& beta,
                         const std::vector<CrossingEvent>& gamma, TrisectionParams params,
                         const char* an, const char* bn, const char* cn) {
    SurfaceModel s{1};
    auto arr = Arrangement::create(s, {Family{"alpha", {Curve{an, alpha}}},
                                       Family{"beta", {Curve{bn, beta}}},
                                       Family{"gamma", {Curve{cn, gamma}}}});
    return TrisectionDiagram{std::move(arr), params};
}

constexpr int kSegA1 = 0, kSegB1 = 1, kSegUB1 = 3;

} // namespace

TrisectionDiagram catalog(const std::string& name) {
    if (name == "S0") {
        auto arr = Arrangement::create(SurfaceModel{0}, {Family{"alpha", {}}, Family{"beta", {}},
                                                         Family{"gamma", {}}});
        return TrisectionDiagram{std::move(arr), TrisectionParams{0, 0, 0, 0}};
    }
    if (name == "S100")
        return genus1({{kSegA1, 1}}, {{kSegA1, 2}}, {{kSegB1, 1}}, {1, 1, 0, 0}, "m", "m2", "l");
    if (name == "S010")
        return genus1({{kSegA1, 1}}, {{kSegB1, 1}}, {{kSegA1, 2}}, {1, 0, 1, 0}, "m", "l", "m2");
    if (name == "S001")
        return genus1({{kSegA1, 1}}, {{kSegB1, 1}}, {{kSegB1, 2}}, {1, 0, 0, 1}, "m", "l", "l2");
    if (name == "CP2+")
        return genus1({{kSegA1, 1}}, {{kSegB1, 1}}, {{kSegA1, 2}, {kSegB1, 2}}, {1, 0, 0, 0}, "m",
                      "l", "t");
    if (name == "CP2-")
        return genus1({{kSegA1, 1}}, {{kSegB1, 1}}, {{kSegA1, 2}, {kSegUB1, 1}}, {1, 0, 0, 0},
                      "m", "l", "t");
    if (name == "S1xS3")
        return genus1({{kSegA1, 1}}, {{kSegA1, 2}}, {{kSegA1, 3}}, {1, 1, 1, 1}, "m", "m2", "m3");
    if (name.rfind("Sk(", 0) == 0 && name.back() == ')') {
        int k1, k2, k3;
        if (std::sscanf(name.c_str(), "Sk(%d,%d,%d)", &k1, &k2, &k3) == 3)
            return catalog_sk(k1, k2, k3);
    }
    throw ValidationError("unknown catalog diagram: " + name);
}

TrisectionDiagram catalog_sk(int k1, int k2, int k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0) throw ValidationError("stabilization counts must be >= 0");
    TrisectionDiagram d = catalog("S0");
    for (int i = 0; i < k1; ++i) d = diagram_connect_sum(d, catalog("S100"));
    for (int i = 0; i < k2; ++i) d = diagram_connect_sum(d, catalog("S010"));
    for (int i = 0; i < k3; ++i) d = diagram_connect_sum(d, catalog("S001"));
    return d;
}

TrisectionDiagram diagram_connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b) {
    int g1 = a.genus();
    SurfaceModel s{g1 + b.genus()};

    std::vector<Family> fams;
    for (auto name : kTrisectionFamilies) {
        Family fam;
        fam.name = name;
        std::set<std::string> used;
        int fa = a.arrangement.family_index_checked(name);
        for (const auto& crv : a.arrangement.families()[fa].curves) {
            fam.curves.push_back(crv);
            used.insert(crv.name);
        }
        int fb = b.arrangement.family_index_checked(name);
        for (const auto& crv : b.arrangement.families()[fb].curves) {
            Curve shifted = crv;
            for (auto& e : shifted.events) e.seg += 4 * g1;
            while (used.count(shifted.name)) shifted.name += "'";
            used.insert(shifted.name);
            fam.curves.push_back(std::move(shifted));
        }
        fams.push_back(std::move(fam));
    }

    std::optional<TrisectionParams> params;
    if (a.claimed && b.claimed)
        params = TrisectionParams{a.claimed->g + b.claimed->g, a.claimed->k1 + b.claimed->k1,
                                  a.claimed->k2 + b.claimed->k2, a.claimed->k3 + b.claimed->k3};
    return TrisectionDiagram{Arrangement::create(s, fams), params};
}

} // namespace trisect
