#include "trisect/invariants.hpp"

#include "trisect/bigon.hpp"

namespace trisect {

H1Pair h1_pair(const HeegaardDiagram& h) {
    IntMatrix m = algebraic_intersection_matrix(h.arrangement, h.first, h.second);
    H1Pair out;
    out.snf = smith_normal_form(m);
    out.k_alg = out.snf.zero_count();
    for (long long d : out.snf.diagonal)
        if (d != 0 && d != 1) out.incompatible = true;
    return out;
}

Pi1Result pi1_trisection(const TrisectionDiagram& d) {
    // Reduce beta and gamma to minimal position against alpha (alpha is the
    // second argument, so it stays put).
    Arrangement arr = reduce_bigons(d.arrangement, "beta", "alpha");
    arr = reduce_bigons(arr, "gamma", "alpha");

    Pi1Result out;
    out.raw.generators = d.genus();
    for (const char* fam : {"beta", "gamma"}) {
        int f = arr.family_index_checked(fam);
        for (int c = 0; c < (int)arr.families()[f].curves.size(); ++c)
            out.raw.relators.push_back(curve_word(arr, "alpha", {f, c}));
    }
    out.simplified = tietze_simplify(out.raw);
    return out;
}

SNFResult h1_four_manifold(const TrisectionDiagram& d) {
    IntMatrix mb = algebraic_intersection_matrix(d.arrangement, "alpha", "beta");
    IntMatrix mg = algebraic_intersection_matrix(d.arrangement, "alpha", "gamma");
    int g = d.genus();
    IntMatrix m(g, 2 * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            m.at(i, j) = mb.at(i, j);
            m.at(i, g + j) = mg.at(i, j);
        }
    return smith_normal_form(m);
}

std::string tier_name(PairTier t) {
    switch (t) {
        case PairTier::Certified: return "CERTIFIED";
        case PairTier::Algebraic: return "ALGEBRAIC";
        case PairTier::Incompatible: return "INCOMPATIBLE";
        case PairTier::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

PairClassification classify_pair(const HeegaardDiagram& h, const SearchBudget& budget) {
    PairClassification out;
    out.homology = h1_pair(h);
    out.k = out.homology.k_alg;
    if (out.homology.incompatible) {
        out.tier = PairTier::Incompatible;
        return out;
    }

    Goal goal = [&](const Arrangement& arr) {
        return find_gk_standard(HeegaardDiagram{arr, h.first, h.second}).has_value();
    };
    auto sr = slide_bfs(h.arrangement, {h.first, h.second}, {}, goal, budget);
    out.search_status = sr.status;
    if (sr.status == SearchStatus::Found) {
        out.tier = PairTier::Certified;
        out.witness = find_gk_standard(HeegaardDiagram{*sr.found, h.first, h.second});
        out.slides = sr.witness;
        if (out.witness && out.witness->k != out.k)
            throw InternalError("certified k disagrees with the algebraic k");
    } else {
        out.tier = PairTier::Algebraic;
    }
    return out;
}

TrisectionReport validate_trisection(const TrisectionDiagram& d, const SearchBudget& budget) {
    TrisectionReport rep;
    auto structure = validate_trisection_structure(d);
    if (!structure.pass) {
        rep.message = structure.message;
        return rep;
    }
    for (int p = 0; p < 3; ++p) rep.pairs[p] = classify_pair(trisection_pair(d, p), budget);
    for (const auto& pc : rep.pairs)
        if (pc.tier == PairTier::Incompatible) {
            rep.message = "a Heegaard pair has incompatible homology";
            return rep;
        }
    rep.computed = TrisectionParams{d.genus(), rep.pairs[0].k, rep.pairs[1].k, rep.pairs[2].k};
    if (d.claimed && !(*d.claimed == rep.computed)) {
        rep.message = "claimed parameters disagree with the computed k values";
        return rep;
    }
    rep.pass = true;
    return rep;
}

} // namespace trisect
