// Acceptance suite: one checked criterion per function, one PASS/FAIL line
// each, nonzero exit when anything fails. Run via ctest or directly:
//   acceptance --fixtures tests/fixtures [--only N]

#include "support/genrand.hpp"
#include "support/oracle.hpp"
#include "trisect/bigon.hpp"
#include "trisect/complex.hpp"
#include "trisect/invariants.hpp"
#include "trisect/moves.hpp"
#include "trisect/search.hpp"
#include "trisect/trid.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace trisect;
using trisect::testing::DetRng;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

std::string g_fixtures = "tests/fixtures";

// 1. Catalog soundness: validation passes, parameters and chi are exact.
bool criterion1(Check& c) {
    auto t0 = std::chrono::steady_clock::now();
    struct Expect {
        const char* name;
        TrisectionParams params;
        int chi;
    };
    const Expect expected[] = {
        {"S0", {0, 0, 0, 0}, 2},        {"S100", {1, 1, 0, 0}, 2},
        {"S010", {1, 0, 1, 0}, 2},      {"S001", {1, 0, 0, 1}, 2},
        {"CP2+", {1, 0, 0, 0}, 3},      {"CP2-", {1, 0, 0, 0}, 3},
        {"S1xS3", {1, 1, 1, 1}, 0},     {"Sk(1,1,0)", {2, 1, 1, 0}, 2},
        {"Sk(2,1,3)", {6, 2, 1, 3}, 2},
    };
    for (const auto& e : expected) {
        auto d = catalog(e.name);
        c.require(d.claimed.has_value() && *d.claimed == e.params,
                  std::string(e.name) + ": claimed parameters wrong");
        auto rep = validate_trisection(d);
        c.require(rep.pass, std::string(e.name) + ": validation failed (" + rep.message + ")");
        c.require(rep.computed == e.params, std::string(e.name) + ": computed k mismatch");
        c.require(euler_characteristic(rep.computed) == e.chi,
                  std::string(e.name) + ": chi mismatch");
        for (const auto& pc : rep.pairs)
            c.require(pc.tier == PairTier::Certified, std::string(e.name) + ": pair not certified");
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(dt < 1.0, "took " + std::to_string(dt) + "s (limit 1s)");
    c.detail << "9 catalog diagrams, " << dt << "s";
    return c.ok;
}

// 2. Desk check at g = 2, 3: scrambled standard diagrams recover their
// parameters and summand decompositions within default budgets.
bool criterion2(Check& c) {
    struct Case {
        std::string label;
        TrisectionDiagram diagram;
        int scrambles;
        uint64_t seed;
        TrisectionParams params;
        std::vector<std::string> summands;
    };
    auto cp2_s100 = connect_sum(catalog("CP2+"), catalog("S100"));
    auto cp2_s100_s100 = connect_sum(cp2_s100, catalog("S100"));
    std::vector<Case> cases = {
        {"CP2#S100 (g=2)", cp2_s100, 5, 1, {2, 1, 0, 0}, {"CP2", "S100"}},
        {"Sk(1,1,0) (g=2)", catalog_sk(1, 1, 0), 5, 14, {2, 1, 1, 0}, {"S010", "S100"}},
        {"CP2#S100#S100 (g=3)", cp2_s100_s100, 3, 5, {3, 2, 0, 0}, {"CP2", "S100", "S100"}},
        {"Sk(2,1,0) (g=3)", catalog_sk(2, 1, 0), 3, 9, {3, 2, 1, 0}, {"S010", "S100", "S100"}},
    };
    for (auto& cs : cases) {
        auto t0 = std::chrono::steady_clock::now();
        auto scrambled = scramble(cs.diagram, cs.scrambles, cs.seed);
        auto out = standardize(scrambled.diagram, {});
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(out.search.status == SearchStatus::Found, cs.label + ": not FOUND");
        if (out.search.status == SearchStatus::Found) {
            c.require(out.standard->params == cs.params, cs.label + ": wrong parameters");
            auto summands = detect_standard_summands(*out.diagram);
            c.require(summands == cs.summands, cs.label + ": wrong summands");
        }
        c.require(dt < 300.0, cs.label + ": took " + std::to_string(dt) + "s (limit 300)");
        c.detail << cs.label << " " << (int)(dt * 1000) << "ms; ";
    }
    return c.ok;
}

// 3. Diagrams with alpha = beta standardize with the two k values of the
// non-equal pairs agreeing.
bool criterion3(Check& c) {
    int count = 0;
    for (uint64_t seed = 1; count < 50; ++seed) {
        DetRng rng(seed * 977);
        int g = 1 + (int)rng.below(3);
        int k = (int)rng.below(g + 1);
        // alpha = beta pattern: k copies of S1xS3, g-k copies of S100
        TrisectionDiagram d = k > 0 ? catalog("S1xS3") : catalog("S100");
        for (int i = 1; i < k; ++i) d = diagram_connect_sum(d, catalog("S1xS3"));
        for (int i = k > 0 ? k : 1; i < g; ++i) d = diagram_connect_sum(d, catalog("S100"));
        int n = g <= 2 ? 1 + (int)rng.below(2) : 1;
        auto scrambled = scramble(d, n, rng.next());
        auto out = standardize(scrambled.diagram, {});
        c.require(out.search.status == SearchStatus::Found,
                  "seed " + std::to_string(seed) + ": not FOUND");
        if (out.search.status == SearchStatus::Found) {
            c.require(out.standard->params.k1 == g,
                      "seed " + std::to_string(seed) + ": equal pair k != g");
            c.require(out.standard->params.k2 == out.standard->params.k3,
                      "seed " + std::to_string(seed) + ": k2 != k3");
        }
        ++count;
        if (!c.ok) break;
    }
    c.detail << count << " diagrams";
    return c.ok;
}

// 4. Random slide sequences preserve validity, genus, pair homology, the
// four-manifold homology, and chi.
bool criterion4(Check& c) {
    static const char* names[] = {"Sk(1,1,0)", "Sk(1,0,1)", "Sk(0,1,1)", "Sk(2,0,0)"};
    int count = 0;
    for (uint64_t seed = 1; count < 100; ++seed, ++count) {
        auto d = catalog(names[seed % 4]);
        auto base_params = *d.claimed;
        std::array<std::vector<long long>, 3> base_pairs;
        for (int p = 0; p < 3; ++p) base_pairs[p] = h1_pair(trisection_pair(d, p)).snf.diagonal;
        auto base_h1x = h1_four_manifold(d).diagonal;

        int len = 1 + (int)(seed % 10);
        auto scrambled = scramble(d, len, seed * 31 + 7);
        const auto& arr = scrambled.diagram.arrangement;
        c.require(arr.genus() == base_params.g, "genus changed");
        for (auto fam : kTrisectionFamilies)
            c.require(validate_cut_system(arr, fam).pass,
                      "seed " + std::to_string(seed) + ": cut system broke");
        for (int p = 0; p < 3; ++p)
            c.require(h1_pair(trisection_pair(scrambled.diagram, p)).snf.diagonal == base_pairs[p],
                      "seed " + std::to_string(seed) + ": pair homology changed");
        c.require(h1_four_manifold(scrambled.diagram).diagonal == base_h1x,
                  "seed " + std::to_string(seed) + ": H1(X) changed");
        if (!c.ok) break;
    }
    c.detail << count << " slide sequences";
    return c.ok;
}

// 5. Rotation-trace face counts agree with the flood-fill oracle; the Euler
// relation holds.
bool criterion5(Check& c) {
    int count = 0;
    for (uint64_t seed = 1; count < 200; ++seed) {
        DetRng rng(seed * 131071);
        auto arr = trisect::testing::random_arrangement(rng, 3, 20);
        if (!arr) continue;
        CellComplex cc(*arr);
        trisect::testing::FloodOracle oracle(*arr);
        c.require(cc.face_count() == oracle.region_count(),
                  "seed " + std::to_string(seed) + ": face count disagrees");
        c.require((int)arr->crossings().size() == oracle.crossing_count(),
                  "seed " + std::to_string(seed) + ": crossing count disagrees");
        c.require(cc.vertex_count() - cc.edge_count() + cc.face_count() == 2 - 2 * arr->genus(),
                  "seed " + std::to_string(seed) + ": Euler relation fails");
        ++count;
        if (!c.ok) break;
    }
    c.detail << count << " arrangements";
    return c.ok;
}

// 6. Standard diagrams have delta-pattern crossing matrices; finger-inflated
// diagrams reduce back to them.
bool criterion6(Check& c) {
    for (const char* name : {"Sk(1,1,0)", "Sk(2,1,0)", "Sk(1,1,1)"}) {
        auto d = catalog(name);
        auto w = is_standard_trisection(d);
        c.require(w.has_value(), std::string(name) + ": not standard");
    }

    int count = 0;
    static const char* bases[] = {"Sk(1,1,0)", "Sk(0,2,0)", "Sk(1,0,1)"};
    for (uint64_t seed = 1; count < 50; ++seed) {
        auto d = catalog(bases[seed % 3]);
        std::array<IntMatrix, 3> base;
        static const char* fams[3][2] = {{"alpha", "beta"}, {"alpha", "gamma"}, {"beta", "gamma"}};
        for (int p = 0; p < 3; ++p)
            base[p] = geometric_intersection_matrix(d.arrangement, fams[p][0], fams[p][1]);

        DetRng rng(seed * 2654435761);
        auto inflated = trisect::testing::finger_move(d.arrangement, rng);
        if (!inflated) continue;
        if (auto second = trisect::testing::finger_move(*inflated, rng)) inflated = second;
        bool grew = false;
        for (int p = 0; p < 3; ++p) {
            IntMatrix raw(base[p].rows(), base[p].cols());
            int fa = inflated->family_index_checked(fams[p][0]);
            int fb = inflated->family_index_checked(fams[p][1]);
            if (family_crossings(*inflated, fa, fb) >
                family_crossings(d.arrangement, d.arrangement.family_index_checked(fams[p][0]),
                                 d.arrangement.family_index_checked(fams[p][1])))
                grew = true;
            (void)raw;
        }
        c.require(grew, "seed " + std::to_string(seed) + ": finger did not inflate");
        for (int p = 0; p < 3; ++p) {
            auto reduced = geometric_intersection_matrix(*inflated, fams[p][0], fams[p][1]);
            c.require(reduced == base[p],
                      "seed " + std::to_string(seed) + ": reduction failed to restore matrix");
        }
        ++count;
        if (!c.ok) break;
    }
    c.detail << count << " inflated diagrams";
    return c.ok;
}

// 7. Smith normal form verification and the gcd-of-minors oracle.
bool criterion7(Check& c) {
    DetRng rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + (int)rng.below(6), cols = 1 + (int)rng.below(6);
        auto m = trisect::testing::random_matrix(rng, rows, cols, 20);
        auto snf = smith_normal_form(m); // throws if U*M*V != D or not unimodular
        c.require(triple_product_equals(snf.U, m, snf.V, snf.D),
                  "trial " + std::to_string(trial) + ": U*M*V != D");
        c.require(snf.U.is_unimodular() && snf.V.is_unimodular(),
                  "trial " + std::to_string(trial) + ": transforms not unimodular");
        for (size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
            long long a = snf.diagonal[k], b = snf.diagonal[k + 1];
            c.require(a >= 0 && b >= 0 && (a == 0 ? b == 0 : b % a == 0),
                      "trial " + std::to_string(trial) + ": divisibility chain broken");
        }
        if (rows <= 4 && cols <= 4) {
            auto oracle = trisect::testing::minors_invariant_factors(m);
            c.require(oracle == snf.diagonal,
                      "trial " + std::to_string(trial) + ": minors oracle disagrees");
        }
        if (!c.ok) break;
    }
    c.detail << "500 matrices";
    return c.ok;
}

// 8. The abelianized trisection group agrees with the four-manifold homology.
bool criterion8(Check& c) {
    auto check_one = [&](const TrisectionDiagram& d, const std::string& label) {
        auto pi = pi1_trisection(d);
        int g = d.genus();
        IntMatrix ab(g, (int)pi.raw.relators.size());
        for (size_t r = 0; r < pi.raw.relators.size(); ++r)
            for (int letter : pi.raw.relators[r]) {
                int gen = std::abs(letter) - 1;
                ab.at(gen, (int)r) = ab.at(gen, (int)r) + (letter > 0 ? 1 : -1);
            }
        auto left = smith_normal_form(ab).diagonal;
        auto right = h1_four_manifold(d).diagonal;
        c.require(left == right, label + ": abelianization disagrees with H1(X)");
    };
    for (const char* name : {"S0", "S100", "S010", "S001", "CP2+", "CP2-", "S1xS3", "Sk(1,1,0)"})
        check_one(catalog(name), name);
    static const char* bases[] = {"Sk(1,1,0)", "Sk(1,0,1)", "Sk(2,0,0)", "Sk(0,1,1)"};
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        auto d = catalog(bases[seed % 4]);
        auto scrambled = scramble(d, 1 + (int)(seed % 4), seed * 13).diagram;
        check_one(scrambled, "scramble seed " + std::to_string(seed));
        if (!c.ok) break;
    }
    c.detail << "8 catalog + 50 scrambles";
    return c.ok;
}

// 9. Witness replay integrity and budget monotonicity.
bool criterion9(Check& c) {
    int found_cases = 0;
    for (uint64_t seed = 1; found_cases < 3; ++seed) {
        auto d = catalog_sk(1, 1, 0);
        auto scrambled = scramble(d, 1, seed * 101);
        auto out = standardize(scrambled.diagram, {});
        c.require(out.search.status == SearchStatus::Found,
                  "seed " + std::to_string(seed) + ": not FOUND");
        if (out.search.status != SearchStatus::Found) break;
        auto replayed = replay(scrambled.diagram.arrangement, out.search.witness);
        c.require(replayed.canonical_form() == out.diagram->arrangement.canonical_form(),
                  "seed " + std::to_string(seed) + ": witness replay mismatch");

        SearchBudget dbl = SearchBudget{}.doubled();
        auto out2 = standardize(scrambled.diagram, dbl);
        c.require(out2.search.status == SearchStatus::Found,
                  "seed " + std::to_string(seed) + ": doubled budget lost the result");
        if (out2.standard && out.standard)
            c.require(out2.standard->params == out.standard->params,
                      "seed " + std::to_string(seed) + ": doubled budget changed parameters");
        ++found_cases;
        if (!c.ok) break;
    }
    c.detail << found_cases << " found cases";
    return c.ok;
}

// 10. Byte-exact serialization round trips.
bool criterion10(Check& c) {
    // golden fixture
    {
        std::ifstream in(g_fixtures + "/s100.trid", std::ios::binary);
        c.require(in.good(), "missing fixture s100.trid");
        if (in.good()) {
            std::ostringstream ss;
            ss << in.rdbuf();
            c.require(serialize(catalog("S100")) == ss.str(), "S100 golden bytes changed");
        }
    }
    for (const char* name : {"S0", "S100", "S010", "S001", "CP2+", "CP2-", "S1xS3", "Sk(1,1,0)"}) {
        auto text = serialize(catalog(name));
        auto re = parse_trisection(text);
        c.require(serialize(re) == text, std::string(name) + ": reserialization differs");
        c.require(re.arrangement.canonical_form() == catalog(name).arrangement.canonical_form(),
                  std::string(name) + ": canonical form changed");
    }
    static const char* bases[] = {"Sk(1,1,0)", "Sk(1,0,1)", "Sk(2,0,0)", "Sk(0,0,2)"};
    int count = 0;
    for (uint64_t seed = 1; count < 100; ++seed, ++count) {
        auto d = catalog(bases[seed % 4]);
        auto scrambled = scramble(d, 1 + (int)(seed % 3), seed * 7).diagram;
        auto text = serialize(scrambled);
        auto re = parse_trisection(text);
        c.require(serialize(re) == text, "seed " + std::to_string(seed) + ": bytes unstable");
        c.require(re.arrangement.canonical_form() == scrambled.arrangement.canonical_form(),
                  "seed " + std::to_string(seed) + ": canonical form changed");
        if (!c.ok) break;
    }
    c.detail << "fixtures + " << count << " scrambles";
    return c.ok;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--fixtures") && i + 1 < argc) g_fixtures = argv[++i];
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    struct Criterion {
        int number;
        const char* title;
        bool (*run)(Check&);
    };
    const Criterion criteria[] = {
        {1, "catalog soundness", criterion1},
        {2, "scrambled standard diagrams recover (g=2,3)", criterion2},
        {3, "equal alpha/beta forces matching k values", criterion3},
        {4, "slide invariance of homology and parameters", criterion4},
        {5, "face tracer agrees with flood-fill oracle", criterion5},
        {6, "bigon reduction restores minimal matrices", criterion6},
        {7, "Smith normal form verification and oracle", criterion7},
        {8, "pi1 abelianization matches H1", criterion8},
        {9, "witness replay and budget monotonicity", criterion9},
        {10, "serialization round trips byte-exactly", criterion10},
    };

    bool all_ok = true;
    for (const auto& cr : criteria) {
        if (only && cr.number != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        bool ok = false;
        std::string exception;
        try {
            ok = cr.run(c);
        } catch (const std::exception& e) {
            exception = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.title
                  << " [" << c.detail.str();
        if (!exception.empty()) std::cout << "exception: " << exception;
        std::cout << "] (" << (int)(dt * 1000) << " ms)" << std::endl;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
