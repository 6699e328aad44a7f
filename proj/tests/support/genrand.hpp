#ifndef TRISECT_TESTS_GENRAND_HPP
#define TRISECT_TESTS_GENRAND_HPP

#include "trisect/diagram.hpp"
#include "trisect/matrix.hpp"

#include <cstdint>
#include <optional>

namespace trisect::testing {

// Deterministic stream, platform independent.
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed * 0x9e3779b97f4a7c15ull + 0x1234567) {}
    uint64_t next();
    uint64_t below(uint64_t n); // uniform in [0, n)
};

/// Seeded random trisection diagram: a catalog connect sum of total genus
/// 1..max_genus, scrambled by a few slides.
TrisectionDiagram random_diagram(DetRng& rng, int max_genus, int max_scrambles);

/// Deliberate finger move: pushes an arc of one curve across a transverse
/// curve's edge point, inflating the pair with a removable bigon. Returns
/// nothing if no valid finger exists for the sampled choices.
std::optional<Arrangement> finger_move(const Arrangement& arr, DetRng& rng);

/// Seeded random arrangement for face/Euler tests: a random diagram plus a
/// few finger moves, capped at the crossing budget.
std::optional<Arrangement> random_arrangement(DetRng& rng, int max_genus, int max_crossings);

/// Invariant-factor oracle: d_k = gcd of all k x k minors divided by the gcd
/// of all (k-1) x (k-1) minors. Exponential; sizes <= 4 only.
std::vector<long long> minors_invariant_factors(const IntMatrix& m);

/// Pseudo-random integer matrix with entries in [-bound, bound].
IntMatrix random_matrix(DetRng& rng, int rows, int cols, int bound);

} // namespace trisect::testing

#endif
