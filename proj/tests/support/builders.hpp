#ifndef TRISECT_TESTS_BUILDERS_HPP
#define TRISECT_TESTS_BUILDERS_HPP

#include "trisect/surface.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace trisect::testing {

inline Curve make_curve(const SurfaceModel& s, std::string name,
                        std::initializer_list<std::pair<const char*, int>> evs) {
    Curve c;
    c.name = std::move(name);
    for (const auto& [seg, slot] : evs) {
        auto si = s.parse_segment(seg);
        if (!si) throw std::runtime_error(std::string("bad segment in test: ") + seg);
        c.events.push_back({*si, slot});
    }
    return c;
}

// Genus-1 arrangement with mu = (a1@1), lambda = (b1@1) in families u / v.
inline Arrangement torus_mu_lambda() {
    SurfaceModel s{1};
    Family fu{"u", {make_curve(s, "mu", {{"a1", 1}})}};
    Family fv{"v", {make_curve(s, "lambda", {{"b1", 1}})}};
    return Arrangement::create(s, {fu, fv});
}

} // namespace trisect::testing

#endif
