#ifndef TRISECT_SEARCH_HPP
#define TRISECT_SEARCH_HPP

#include "trisect/diagram.hpp"
#include "trisect/moves.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

struct SearchBudget {
    int band_events = 2;      // per-band boundary crossings
    int face_transitions = 6; // per-band face transitions
    int max_depth = 6;
    long long max_states = 1'000'000;
    double wall_clock_seconds = 0; // 0 = unlimited
    int threads = 1;

    SearchBudget doubled() const {
        return {band_events * 2, face_transitions * 2, max_depth * 2, max_states * 2,
                wall_clock_seconds, threads};
    }
};

enum class SearchStatus {
    Found,     // goal reached; witness replay-verified
    Exhausted, // the whole bounded slide graph was searched, no goal state
    Capped     // a resource cap interrupted the search
};

struct Move {
    std::string family;
    int i = 0;
    int j = 0;
    BandArc band;
};

struct SearchStats {
    long long states_visited = 0;
    long long states_generated = 0;
    int depth_reached = 0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::vector<Move> witness;
    SearchStats stats;
    std::optional<Arrangement> found; // the goal state, for Found
};

using Goal = std::function<bool(const Arrangement&)>;
using Progress = std::function<void(const SearchStats&)>;

/// Breadth-first search over single handle slides in the allowed families,
/// deduplicated by canonical form. A family listed in rel_sets only allows
/// slides over the given curve indices. Witnesses are replay-verified before
/// Found is returned.
SearchOutcome slide_bfs(const Arrangement& start, const std::vector<std::string>& families,
                        const std::map<std::string, std::vector<int>>& rel_sets, const Goal& goal,
                        const SearchBudget& budget, const Progress& progress = nullptr);

/// Replays a move sequence from an arrangement.
Arrangement replay(const Arrangement& start, const std::vector<Move>& moves);

struct StandardizeOutcome {
    SearchOutcome search;
    std::optional<StandardTrisectionWitness> standard; // set when Found
    std::optional<TrisectionDiagram> diagram;          // the standard form
};

/// Searches all three families for a simultaneously standard diagram.
StandardizeOutcome standardize(const TrisectionDiagram& d, const SearchBudget& budget,
                               const Progress& progress = nullptr);

/// Applies n uniformly chosen legal slides with a deterministic seeded stream;
/// returns the diagram and a replayable move log.
struct ScrambleResult {
    TrisectionDiagram diagram;
    std::vector<Move> log;
};
ScrambleResult scramble(const TrisectionDiagram& d, int n, uint64_t seed,
                        const SearchBudget& budget = {});

/// Decomposes a standard trisection diagram into genus-1 summand labels.
/// Requires is_standard_trisection to succeed.
std::vector<std::string> detect_standard_summands(const TrisectionDiagram& d);

} // namespace trisect

#endif
