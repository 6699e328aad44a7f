#include "trisect/presentation.hpp"

#include "trisect/complex.hpp"

#include <algorithm>
#include <sstream>

namespace trisect {

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int letter : word) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

std::vector<int> cyclic_reduce(std::vector<int> word) {
    word = free_reduce(std::move(word));
    while (word.size() >= 2 && word.front() == -word.back()) {
        word.erase(word.begin());
        word.pop_back();
        word = free_reduce(std::move(word));
    }
    return word;
}

std::vector<int> curve_word(const Arrangement& arr, std::string_view cutsys_family, CurveId c) {
    int fam = arr.family_index_checked(cutsys_family);
    if (arr.genus() == 0) return {};
    CellComplex cc(arr);
    const auto& chords = arr.chords();
    const auto& crossings = arr.crossings();

    std::vector<int> word;
    const auto& curve_chord_ids = arr.curve_chords(c);
    for (int gchord : curve_chord_ids) {
        for (int xi : cc.chord_crossing_list(gchord)) {
            const auto& x = crossings[xi];
            int other = x.chord_a == gchord ? x.chord_b : x.chord_a;
            const auto& oc = chords[other].curve;
            if (oc.family != fam) continue;
            int sign = x.chord_a == gchord ? x.sign : -x.sign;
            word.push_back(sign * (oc.curve + 1));
        }
    }
    return cyclic_reduce(std::move(word));
}

std::string Presentation::to_string() const {
    std::ostringstream out;
    out << "<";
    for (int i = 0; i < generators; ++i) out << (i ? " " : "") << "x" << (i + 1);
    out << " |";
    for (size_t r = 0; r < relators.size(); ++r) {
        out << (r ? ", " : " ");
        if (relators[r].empty()) out << "1";
        for (size_t k = 0; k < relators[r].size(); ++k) {
            int l = relators[r][k];
            out << "x" << std::abs(l);
            if (l < 0) out << "^-1";
            if (k + 1 < relators[r].size()) out << " ";
        }
    }
    out << " >";
    return out.str();
}

SimplifiedPresentation tietze_simplify(Presentation p, int move_budget) {
    for (auto& r : p.relators) r = cyclic_reduce(std::move(r));

    int moves = 0;
    std::vector<char> alive(p.generators, 1);
    bool progress = true;
    while (progress && moves < move_budget) {
        progress = false;
        for (size_t r = 0; r < p.relators.size() && moves < move_budget; ++r) {
            if (p.relators[r].size() != 1) continue;
            int gen = std::abs(p.relators[r][0]) - 1;
            if (!alive[gen]) continue;
            // xi = 1: erase the generator everywhere.
            alive[gen] = 0;
            ++moves;
            progress = true;
            for (auto& rel : p.relators) {
                rel.erase(std::remove_if(rel.begin(), rel.end(),
                                         [&](int l) { return std::abs(l) - 1 == gen; }),
                          rel.end());
                rel = cyclic_reduce(std::move(rel));
            }
        }
    }

    // Reindex the surviving generators and drop empty relators.
    std::vector<int> remap(p.generators, 0);
    int next = 0;
    for (int i = 0; i < p.generators; ++i)
        if (alive[i]) remap[i] = ++next;
    Presentation out;
    out.generators = next;
    for (auto& rel : p.relators) {
        if (rel.empty()) continue;
        std::vector<int> w;
        for (int l : rel) w.push_back(l > 0 ? remap[l - 1] : -remap[-l - 1]);
        out.relators.push_back(cyclic_reduce(std::move(w)));
    }

    SimplifiedPresentation res;
    res.visibly_trivial = out.generators == 0 && out.relators.empty();
    res.presentation = std::move(out);
    res.moves_used = moves;
    return res;
}

} // namespace trisect
