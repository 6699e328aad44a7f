#ifndef TRISECT_PRESENTATION_HPP
#define TRISECT_PRESENTATION_HPP

#include "trisect/surface.hpp"

#include <string>
#include <vector>

namespace trisect {

/// Group presentation on generators x1..xg; letters are +-(i+1) for xi and
/// its inverse. Relators are kept freely and cyclically reduced.
struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;

    std::string to_string() const;
};

std::vector<int> free_reduce(std::vector<int> word);
std::vector<int> cyclic_reduce(std::vector<int> word);

/// Word of curve c read against the cut-system family: each crossing with
/// curve i of the family contributes x_{i+1}^{sign}, in order along c starting
/// from its first event. Curves should be in minimal position first.
std::vector<int> curve_word(const Arrangement& arr, std::string_view cutsys_family, CurveId c);

struct SimplifiedPresentation {
    Presentation presentation;
    bool visibly_trivial = false;
    int moves_used = 0;
};

/// Free/cyclic reduction plus removal of length-1 relators by substitution,
/// bounded by the move budget. Never reports a negative certificate: anything
/// not visibly trivial is just "unknown".
SimplifiedPresentation tietze_simplify(Presentation p, int move_budget = 200);

} // namespace trisect

#endif
