#include "trisect/search.hpp"

#include "trisect/bigon.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace trisect {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t x = (state += 0x9e3779b97f4a7c15ull);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t uniform_below(uint64_t& state, uint64_t n) {
    // rejection sampling keeps the stream platform-independent
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = splitmix64(state);
    } while (v >= limit);
    return v % n;
}

// Compact, exact state encoding (indices, names, events).
std::string encode_state(const Arrangement& arr) {
    std::ostringstream out;
    out << arr.genus() << "\n";
    for (const auto& fam : arr.families()) {
        out << fam.name << "\n" << fam.curves.size() << "\n";
        for (const auto& crv : fam.curves) {
            out << crv.name << "\n" << crv.events.size();
            for (const auto& e : crv.events) out << " " << e.seg << " " << e.slot;
            out << "\n";
        }
    }
    return out.str();
}

Arrangement decode_state(const std::string& s) {
    std::istringstream in(s);
    int genus;
    in >> genus;
    in.ignore();
    std::vector<Family> fams;
    std::string name;
    while (std::getline(in, name)) {
        if (name.empty()) continue;
        Family fam;
        fam.name = name;
        size_t ncurves;
        in >> ncurves;
        in.ignore();
        for (size_t c = 0; c < ncurves; ++c) {
            Curve crv;
            std::getline(in, crv.name);
            size_t nev;
            in >> nev;
            for (size_t k = 0; k < nev; ++k) {
                CrossingEvent e;
                in >> e.seg >> e.slot;
                crv.events.push_back(e);
            }
            in.ignore();
            fam.curves.push_back(std::move(crv));
        }
        fams.push_back(std::move(fam));
    }
    return Arrangement::create(SurfaceModel{genus}, fams);
}

struct MoveList {
    std::vector<std::pair<std::string, std::pair<int, int>>> pairs; // (family, (i, j))
};

MoveList allowed_pairs(const Arrangement& arr, const std::vector<std::string>& families,
                       const std::map<std::string, std::vector<int>>& rel_sets) {
    MoveList ml;
    for (const auto& fname : families) {
        int f = arr.family_index_checked(fname);
        int n = static_cast<int>(arr.families()[f].curves.size());
        const std::vector<int>* rel = nullptr;
        auto it = rel_sets.find(fname);
        if (it != rel_sets.end()) rel = &it->second;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (rel && std::find(rel->begin(), rel->end(), j) == rel->end()) continue;
                ml.pairs.push_back({fname, {i, j}});
            }
    }
    return ml;
}

} // namespace

Arrangement replay(const Arrangement& start, const std::vector<Move>& moves) {
    Arrangement cur = start;
    for (const auto& mv : moves) cur = slide(cur, mv.family, mv.i, mv.j, mv.band);
    return cur;
}

SearchOutcome slide_bfs(const Arrangement& start, const std::vector<std::string>& families,
                        const std::map<std::string, std::vector<int>>& rel_sets, const Goal& goal,
                        const SearchBudget& budget, const Progress& progress) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out;

    if (goal(start)) {
        out.status = SearchStatus::Found;
        out.found = start;
        return out;
    }

    struct Node {
        std::string state; // compact encoding
        int parent = -1;
        Move move;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::string> visited;

    nodes.push_back({encode_state(start), -1, {}});
    visited.insert(start.canonical_form());

    auto witness_of = [&](int node_id, const Move& last) {
        std::vector<Move> ws;
        ws.push_back(last);
        for (int cur = node_id; cur > 0; cur = nodes[cur].parent) ws.push_back(nodes[cur].move);
        std::reverse(ws.begin(), ws.end());
        return ws;
    };

    // Layered expansion in fixed-size chunks: a chunk's nodes may be expanded
    // in parallel, then children merge in node order, so results do not
    // depend on the thread count.
    std::vector<int> frontier = {0};
    int depth = 0;
    bool capped = false;
    const int chunk_size = std::max(1, 8 * std::max(1, budget.threads));

    while (!frontier.empty() && depth < budget.max_depth && !capped) {
        std::vector<int> next;
        for (size_t base = 0; base < frontier.size() && !capped; base += chunk_size) {
            size_t end = std::min(frontier.size(), base + chunk_size);

            if (budget.wall_clock_seconds > 0) {
                double dt =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (dt > budget.wall_clock_seconds) {
                    capped = true;
                    break;
                }
            }

            struct Expanded {
                std::vector<std::pair<Move, SlideCandidate>> children;
            };
            std::vector<Expanded> results(end - base);
            auto expand_one = [&](size_t offset) {
                int node_id = frontier[base + offset];
                Arrangement cur = decode_state(nodes[node_id].state);
                auto pairs = allowed_pairs(cur, families, rel_sets);
                for (const auto& [fname, ij] : pairs.pairs) {
                    auto candidates = enumerate_slides(cur, fname, ij.first, ij.second,
                                                       budget.band_events, budget.face_transitions);
                    for (auto& cand : candidates)
                        results[offset].children.push_back(
                            {Move{fname, ij.first, ij.second, cand.band}, std::move(cand)});
                }
            };
            if (budget.threads > 1) {
                std::vector<std::thread> pool;
                std::atomic<size_t> cursor{0};
                int nthreads = std::min<int>(budget.threads, (int)(end - base));
                for (int t = 0; t < nthreads; ++t)
                    pool.emplace_back([&] {
                        for (size_t k = cursor.fetch_add(1); k < end - base;
                             k = cursor.fetch_add(1))
                            expand_one(k);
                    });
                for (auto& th : pool) th.join();
            } else {
                for (size_t k = 0; k < end - base; ++k) expand_one(k);
            }

            // Sequential merge in node order.
            for (size_t k = 0; k < end - base && !capped; ++k) {
                int node_id = frontier[base + k];
                out.stats.states_visited++;
                for (auto& [mv, cand] : results[k].children) {
                    out.stats.states_generated++;
                    if (!visited.insert(cand.canonical).second) continue;
                    if (goal(cand.result)) {
                        auto ws = witness_of(node_id, mv);
                        Arrangement replayed = replay(start, ws);
                        if (replayed.canonical_form() != cand.canonical)
                            throw InternalError("witness replay does not reproduce the goal state");
                        out.stats.depth_reached = depth + 1;
                        out.status = SearchStatus::Found;
                        out.witness = std::move(ws);
                        out.found = std::move(cand.result);
                        return out;
                    }
                    if ((long long)visited.size() >= budget.max_states) {
                        capped = true;
                        break;
                    }
                    next.push_back((int)nodes.size());
                    nodes.push_back({encode_state(cand.result), node_id, mv});
                }
            }
            if (progress) progress(out.stats);
        }
        ++depth;
        out.stats.depth_reached = std::max(out.stats.depth_reached, depth);
        frontier = std::move(next);
    }

    out.status = capped ? SearchStatus::Capped : SearchStatus::Exhausted;
    return out;
}

StandardizeOutcome standardize(const TrisectionDiagram& d, const SearchBudget& budget,
                               const Progress& progress) {
    StandardizeOutcome out;
    Goal goal = [](const Arrangement& arr) {
        return is_standard_trisection(TrisectionDiagram{arr, std::nullopt}).has_value();
    };
    out.search = slide_bfs(d.arrangement,
                           {kTrisectionFamilies[0], kTrisectionFamilies[1], kTrisectionFamilies[2]},
                           {}, goal, budget, progress);
    if (out.search.status == SearchStatus::Found) {
        TrisectionDiagram found{*out.search.found, std::nullopt};
        out.standard = is_standard_trisection(found);
        found.claimed = out.standard->params;
        out.diagram = std::move(found);
    }
    return out;
}

ScrambleResult scramble(const TrisectionDiagram& d, int n, uint64_t seed,
                        const SearchBudget& budget) {
    if (n < 0) throw ValidationError("scramble count must be >= 0");
    uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull;
    ScrambleResult res{d, {}};
    std::vector<std::string> fams = {kTrisectionFamilies[0], kTrisectionFamilies[1],
                                     kTrisectionFamilies[2]};
    for (int step = 0; step < n; ++step) {
        std::vector<std::pair<Move, Arrangement>> all;
        auto pairs = allowed_pairs(res.diagram.arrangement, fams, {});
        for (const auto& [fname, ij] : pairs.pairs) {
            auto candidates = enumerate_slides(res.diagram.arrangement, fname, ij.first, ij.second,
                                               budget.band_events, budget.face_transitions);
            for (auto& cand : candidates)
                all.push_back({Move{fname, ij.first, ij.second, cand.band},
                               std::move(cand.result)});
        }
        if (all.empty()) break; // no legal slides at this state (e.g. genus 1)
        size_t pick = static_cast<size_t>(uniform_below(state, all.size()));
        res.log.push_back(all[pick].first);
        res.diagram.arrangement = std::move(all[pick].second);
        // Slides must preserve the cut systems; anything else is a bug.
        for (int f = 0; f < (int)res.diagram.arrangement.families().size(); ++f)
            if (!is_cut_system_fast(res.diagram.arrangement, f))
                throw InternalError("scramble step broke a cut system");
    }
    return res;
}

std::vector<std::string> detect_standard_summands(const TrisectionDiagram& d) {
    auto witness = is_standard_trisection(d);
    if (!witness) throw ValidationError("diagram is not in standard form");
    int g = d.genus();
    if (g == 0) return {};

    // Pairwise relations between curves of the three families: 'd' dual (one
    // crossing), 'p' parallel (equal extracted curves), or none.
    auto relations = [&](int pair) {
        auto h = trisection_pair(d, pair);
        Arrangement red = reduce_bigons(h.arrangement, h.first, h.second);
        int fa = red.family_index_checked(h.first);
        int fb = red.family_index_checked(h.second);
        std::vector<std::vector<char>> rel(g, std::vector<char>(g, 0));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                int x = red.geometric_crossings({fa, i}, {fb, j});
                if (x == 1)
                    rel[i][j] = 'd';
                else if (x == 0 && extracted_curve_key(red, {fa, i}) ==
                                       extracted_curve_key(red, {fb, j}))
                    rel[i][j] = 'p';
            }
        return rel;
    };
    auto ab = relations(0), ag = relations(1), bg = relations(2);

    auto label_of = [](char r1, char r2, char r3) -> const char* {
        if (r1 == 'p' && r2 == 'p' && r3 == 'p') return "S1xS3";
        if (r1 == 'p' && r2 == 'd' && r3 == 'd') return "S100";
        if (r1 == 'd' && r2 == 'p' && r3 == 'd') return "S010";
        if (r1 == 'd' && r2 == 'd' && r3 == 'p') return "S001";
        if (r1 == 'd' && r2 == 'd' && r3 == 'd') return "CP2";
        return nullptr;
    };

    // Backtracking tri-partite matching into valid genus-1 triples.
    std::vector<int> beta_of(g, -1), gamma_of(g, -1);
    std::vector<char> beta_used(g, 0), gamma_used(g, 0);
    std::function<bool(int)> match = [&](int a) {
        if (a == g) return true;
        for (int b = 0; b < g; ++b) {
            if (beta_used[b] || !ab[a][b]) continue;
            for (int c = 0; c < g; ++c) {
                if (gamma_used[c] || !ag[a][c] || !bg[b][c]) continue;
                if (!label_of(ab[a][b], ag[a][c], bg[b][c])) continue;
                beta_used[b] = gamma_used[c] = 1;
                beta_of[a] = b;
                gamma_of[a] = c;
                if (match(a + 1)) return true;
                beta_used[b] = gamma_used[c] = 0;
            }
        }
        return false;
    };
    if (!match(0))
        throw InternalError("standard diagram does not decompose into genus-1 summands");

    std::vector<std::string> labels;
    int k1 = 0, k2 = 0, k3 = 0;
    for (int a = 0; a < g; ++a) {
        const char* l = label_of(ab[a][beta_of[a]], ag[a][gamma_of[a]], bg[beta_of[a]][gamma_of[a]]);
        labels.push_back(l);
        if (std::string(l) == "S1xS3") {
            k1++;
            k2++;
            k3++;
        } else if (std::string(l) == "S100")
            k1++;
        else if (std::string(l) == "S010")
            k2++;
        else if (std::string(l) == "S001")
            k3++;
    }
    if (k1 != witness->params.k1 || k2 != witness->params.k2 || k3 != witness->params.k3)
        throw InternalError("summand decomposition disagrees with the standardness witness");
    std::sort(labels.begin(), labels.end());
    return labels;
}

} // namespace trisect
