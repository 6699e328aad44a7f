#ifndef TRISECT_SVG_HPP
#define TRISECT_SVG_HPP

#include "trisect/surface.hpp"

#include <string>

namespace trisect {

/// Deterministic SVG picture: the 4g-gon at unit circumradius, labeled
/// segments, slotted crossing points, and straight chords colored per family.
std::string render_svg(const Arrangement& arr);

} // namespace trisect

#endif
