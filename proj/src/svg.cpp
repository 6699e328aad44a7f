#include "trisect/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace trisect {

namespace {

const char* family_color(const std::string& name) {
    if (name == "alpha" || name == "first") return "#e41a1c";
    if (name == "beta" || name == "second") return "#377eb8";
    if (name == "gamma") return "#4daf4a";
    return "#666666";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string render_svg(const Arrangement& arr) {
    const double size = 640.0, r = 280.0, cx = size / 2, cy = size / 2;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)size << "\" height=\""
        << (int)size << "\" viewBox=\"0 0 " << (int)size << " " << (int)size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    int g = arr.genus();
    if (g == 0) {
        out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r)
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        out << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy)
            << "\" text-anchor=\"middle\">genus 0</text>\n";
        out << "</svg>\n";
        return out.str();
    }

    int nseg = arr.surface().segment_count();
    auto corner = [&](int k) {
        double t = 2.0 * M_PI * k / nseg - M_PI / 2;
        return std::pair<double, double>{cx + r * std::cos(t), cy + r * std::sin(t)};
    };
    // Point of (seg, slot): evenly spaced along the side.
    auto point = [&](int seg, int slot) {
        auto [x1, y1] = corner(seg);
        auto [x2, y2] = corner((seg + 1) % nseg);
        int n = arr.segment_points(seg);
        double t = double(slot) / (n + 1);
        return std::pair<double, double>{x1 + (x2 - x1) * t, y1 + (y2 - y1) * t};
    };

    // Polygon sides with labels.
    for (int seg = 0; seg < nseg; ++seg) {
        auto [x1, y1] = corner(seg);
        auto [x2, y2] = corner((seg + 1) % nseg);
        out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
            << "\" y2=\"" << fmt(y2) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        double ox = (mx - cx) * 0.085, oy = (my - cy) * 0.085;
        out << "<text x=\"" << fmt(mx + ox) << "\" y=\"" << fmt(my + oy)
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"18\">"
            << arr.surface().segment_name(seg) << "</text>\n";
    }

    // Chords per family.
    for (const auto& fam : arr.families()) {
        const char* color = family_color(fam.name);
        for (const auto& crv : fam.curves) {
            int m = static_cast<int>(crv.events.size());
            for (int k = 0; k < m; ++k) {
                auto from = arr.partner_point(crv.events[k]);
                auto to = crv.events[(k + 1) % m];
                auto [x1, y1] = point(from.seg, from.slot);
                auto [x2, y2] = point(to.seg, to.slot);
                out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
                    << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color
                    << "\" stroke-width=\"1.2\"/>\n";
            }
            for (const auto& e : crv.events) {
                auto [x, y] = point(e.seg, e.slot);
                out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                    << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
                auto p = arr.partner_point(e);
                auto [px, py] = point(p.seg, p.slot);
                out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
                    << "\" r=\"2.5\" fill=\"" << color << "\" fill-opacity=\"0.5\"/>\n";
            }
        }
    }

    // Legend.
    double ly = 20;
    for (const auto& fam : arr.families()) {
        out << "<text x=\"12\" y=\"" << fmt(ly) << "\" fill=\"" << family_color(fam.name)
            << "\" font-size=\"14\">" << fam.name << " (" << fam.curves.size()
            << " curves)</text>\n";
        ly += 18;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace trisect
