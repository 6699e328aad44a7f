#ifndef TRISECT_INVARIANTS_HPP
#define TRISECT_INVARIANTS_HPP

#include "trisect/diagram.hpp"
#include "trisect/matrix.hpp"
#include "trisect/presentation.hpp"
#include "trisect/search.hpp"

#include <optional>
#include <string>

namespace trisect {

/// chi of a closed 4-manifold with a (g, k1, k2, k3)-trisection.
inline int euler_characteristic(int g, int k1, int k2, int k3) {
    return 2 + g - k1 - k2 - k3;
}
inline int euler_characteristic(const TrisectionParams& p) {
    return euler_characteristic(p.g, p.k1, p.k2, p.k3);
}

struct H1Pair {
    SNFResult snf;
    int k_alg = 0;            // zero invariant factors
    bool incompatible = false; // some factor outside {0, 1}
};

/// First homology of the pair: presentation matrix of signed crossings of the
/// second family against the first. A splitting of #^k S1xS2 must give factors
/// (1,...,1, 0^k).
H1Pair h1_pair(const HeegaardDiagram& h);

/// Fundamental group of the trisected manifold: generators dual to alpha,
/// relators the beta and gamma words (after reduction to minimal position).
struct Pi1Result {
    Presentation raw;
    SimplifiedPresentation simplified;
};
Pi1Result pi1_trisection(const TrisectionDiagram& d);

/// Cokernel of the g x 2g matrix [M_beta | M_gamma] against alpha.
SNFResult h1_four_manifold(const TrisectionDiagram& d);

enum class PairTier { Certified, Algebraic, Incompatible, Unknown };

std::string tier_name(PairTier t);

struct PairClassification {
    PairTier tier = PairTier::Unknown;
    int k = -1; // determined k (k_alg; for Certified also the witnessed k)
    H1Pair homology;
    std::optional<GkWitness> witness; // Certified: the standardness data
    std::vector<Move> slides;         // Certified: slides reaching it
    SearchStatus search_status = SearchStatus::Exhausted;
};

/// Tiered classification: Incompatible on torsion or bad zero count, else
/// Certified when a slide search reaches a g,k-standard form within budget,
/// else Algebraic.
PairClassification classify_pair(const HeegaardDiagram& h, const SearchBudget& budget = {});

struct TrisectionReport {
    bool pass = false;
    std::string message;
    TrisectionParams computed; // k's from the algebraic tier
    std::array<PairClassification, 3> pairs;
};

/// Full validation: cut systems, parameter sanity, and per-pair tiers. PASS
/// never claims more than the tier of each pair certifies.
TrisectionReport validate_trisection(const TrisectionDiagram& d, const SearchBudget& budget = {});

} // namespace trisect

#endif
