#ifndef TRISECT_BIGON_HPP
#define TRISECT_BIGON_HPP

#include "trisect/surface.hpp"

#include <string_view>

namespace trisect {

/// Removes every bigon between the two families: while some complementary
/// region of famA u famB is a disk bounded by one arc of each family, the
/// famA-side arc is isotoped across it, deleting two crossings. The result
/// realizes the geometric intersection number between the families. Curves of
/// other families are not moved. Deterministic: the lexicographically smallest
/// bigon (by boundary walk) is reduced first.
Arrangement reduce_bigons(const Arrangement& arr, std::string_view famA, std::string_view famB);

/// Total crossing count between two families.
int family_crossings(const Arrangement& arr, int fa, int fb);

} // namespace trisect

#endif
