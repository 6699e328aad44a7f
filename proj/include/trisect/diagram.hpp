#ifndef TRISECT_DIAGRAM_HPP
#define TRISECT_DIAGRAM_HPP

#include "trisect/matrix.hpp"
#include "trisect/surface.hpp"

#include <array>
#include <optional>
#include <string>

namespace trisect {

inline constexpr std::array<const char*, 3> kTrisectionFamilies = {"alpha", "beta", "gamma"};
inline constexpr std::array<const char*, 2> kHeegaardFamilies = {"first", "second"};

/// A Heegaard diagram: two cut systems on one surface. The arrangement holds
/// exactly the two named families.
struct HeegaardDiagram {
    Arrangement arrangement;
    std::string first;
    std::string second;
};

struct TrisectionParams {
    int g = 0, k1 = 0, k2 = 0, k3 = 0;

    bool operator==(const TrisectionParams&) const = default;
};

/// A trisection diagram: families alpha, beta, gamma on one surface, with
/// the k-convention k1 <-> (alpha,beta), k2 <-> (alpha,gamma), k3 <-> (beta,gamma).
struct TrisectionDiagram {
    Arrangement arrangement;
    std::optional<TrisectionParams> claimed;

    int genus() const { return arrangement.genus(); }
};

/// New arrangement containing only the named families, slots renumbered.
Arrangement restrict_to_families(const Arrangement& arr, const std::vector<std::string>& names);

/// Pair view of a trisection: 0 = (alpha,beta), 1 = (alpha,gamma), 2 = (beta,gamma).
HeegaardDiagram trisection_pair(const TrisectionDiagram& d, int pair);

struct CutSystemReport {
    bool pass = false;
    std::string message;
    int components = 0;
};

/// A family is a cut system when it has exactly genus-many pairwise disjoint
/// curves whose complement is connected (a 2g-holed sphere).
CutSystemReport validate_cut_system(const Arrangement& arr, std::string_view family);

/// Fast equivalent of the cut-system test: g pairwise disjoint curves have a
/// connected complement exactly when a nonempty subfamily never bounds, i.e.
/// their mod-2 edge-crossing vectors are linearly independent. Cross-checked
/// against validate_cut_system in the test suite.
bool is_cut_system_fast(const Arrangement& arr, int family_index);

/// Event cycle of one curve re-slotted as if alone on the surface. Two curves
/// are "equal as arrangement curves" when these keys coincide; this is finer
/// than isotopy (a wiggly isotopic copy gets a different key).
std::string extracted_curve_key(const Arrangement& arr, CurveId c);

/// Pairwise crossing counts after bigon reduction; famA == famB gives the zero
/// matrix (a family is disjoint from a pushoff of itself).
IntMatrix geometric_intersection_matrix(const Arrangement& arr, std::string_view famA,
                                        std::string_view famB);
/// Signed version; entry (i,j) is the signed crossing sum of famB's curve j
/// against famA's curve i, orientations from event order.
IntMatrix algebraic_intersection_matrix(const Arrangement& arr, std::string_view famA,
                                        std::string_view famB);

struct GkWitness {
    int k = 0;
    // Curves of the two families paired position by position: positions < k are
    // equal pairs, positions >= k are dual (single-crossing) pairs.
    std::vector<int> first_order;
    std::vector<int> second_order;
};

/// Standardness under explicit indexings: the first k pairs are equal curves,
/// the rest meet the identity crossing pattern, nothing else intersects.
bool is_gk_standard(const HeegaardDiagram& h, int k, const std::vector<int>& first_order,
                    const std::vector<int>& second_order);

/// Searches for a standardness witness (the pairing is forced by the reduced
/// crossing matrix, so no factorial search is needed).
std::optional<GkWitness> find_gk_standard(const HeegaardDiagram& h);

struct StandardTrisectionWitness {
    TrisectionParams params;
    std::array<GkWitness, 3> pairs;
};

/// Simultaneous standardness of all three Heegaard pairs, each with its own
/// indexing. Requires valid cut systems.
std::optional<StandardTrisectionWitness> is_standard_trisection(const TrisectionDiagram& d);

/// delta_ij crossing pattern of duals against a family, after bigon reduction.
bool is_dualized(const Arrangement& arr, std::string_view family, std::string_view dual_family);

/// Structural validation: three cut systems plus parameter sanity. Tier
/// classification of the pairs lives in the invariants layer.
struct StructureReport {
    bool pass = false;
    std::string message;
};
StructureReport validate_trisection_structure(const TrisectionDiagram& d);

/// Built-in diagrams: S0, S100, S010, S001, CP2+, CP2-, S1xS3, Sk(k1,k2,k3).
TrisectionDiagram catalog(const std::string& name);
TrisectionDiagram catalog_sk(int k1, int k2, int k3);

/// Connect sum at the corner face: polygon words concatenate, the second
/// summand's handles shift up, parameters add.
TrisectionDiagram diagram_connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);

} // namespace trisect

#endif
