#include "trisect/trid.hpp"

#include <algorithm>
#include <sstream>

namespace trisect {

namespace {

struct Token {
    std::string text;
    int line, column;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::vector<Token> toks;
        size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace((unsigned char)raw[pos])) ++pos;
            if (pos >= raw.size()) break;
            size_t start = pos;
            while (pos < raw.size() && !std::isspace((unsigned char)raw[pos])) ++pos;
            toks.push_back({raw.substr(start, pos - start), lineno, (int)start + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int parse_int(const Token& t, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    }
}

CrossingEvent parse_event(const Token& t, const SurfaceModel& s) {
    auto at = t.text.find('@');
    if (at == std::string::npos)
        throw ParseError(t.line, t.column, "expected <seg>@<slot>, got '" + t.text + "'");
    auto seg = s.parse_segment(t.text.substr(0, at));
    if (!seg)
        throw ParseError(t.line, t.column,
                         "unknown segment '" + t.text.substr(0, at) + "' for genus " +
                             std::to_string(s.genus));
    int slot = 0;
    try {
        size_t used = 0;
        slot = std::stoi(t.text.substr(at + 1), &used);
        if (used != t.text.size() - at - 1) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError(t.line, (int)(t.column + at + 1), "bad slot in '" + t.text + "'");
    }
    if (slot < 1) throw ParseError(t.line, t.column, "slots are positive");
    return {*seg, slot};
}

} // namespace

ParsedDiagram parse_trid(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty document");
    size_t li = 0;

    auto& header = lines[li++];
    if (header.size() != 2 || header[0].text != "trid" || header[1].text != "1")
        throw ParseError(header[0].line, header[0].column, "expected header 'trid 1'");
    if (li >= lines.size()) throw ParseError(header[0].line + 1, 1, "expected 'genus <g>'");
    auto& gline = lines[li++];
    if (gline.size() != 2 || gline[0].text != "genus")
        throw ParseError(gline[0].line, gline[0].column, "expected 'genus <g>'");
    int genus = parse_int(gline[1], "genus");
    if (genus < 0) throw ParseError(gline[1].line, gline[1].column, "genus must be >= 0");
    SurfaceModel surface{genus};

    std::vector<Family> families;
    while (li < lines.size()) {
        auto& fline = lines[li];
        if (fline[0].text != "family")
            throw ParseError(fline[0].line, fline[0].column,
                             "expected 'family <name>' or 'curve <name>: ...'");
        if (fline.size() != 2)
            throw ParseError(fline[0].line, fline[0].column, "expected 'family <name>'");
        Family fam;
        fam.name = fline[1].text;
        ++li;
        while (li < lines.size() && lines[li][0].text == "curve") {
            auto& cline = lines[li];
            if (cline.size() < 2 || cline[1].text.back() != ':')
                throw ParseError(cline[0].line, cline[0].column,
                                 "expected 'curve <name>: <events>'");
            Curve crv;
            crv.name = cline[1].text.substr(0, cline[1].text.size() - 1);
            if (crv.name.empty())
                throw ParseError(cline[1].line, cline[1].column, "curve name is empty");
            for (size_t t = 2; t < cline.size(); ++t)
                crv.events.push_back(parse_event(cline[t], surface));
            fam.curves.push_back(std::move(crv));
            ++li;
        }
        families.push_back(std::move(fam));
    }

    auto names = [&] {
        std::vector<std::string> v;
        for (const auto& f : families) v.push_back(f.name);
        std::sort(v.begin(), v.end());
        return v;
    }();

    if (names == std::vector<std::string>{"alpha", "beta", "gamma"}) {
        // fixed order
        std::vector<Family> ordered(3);
        for (auto& f : families)
            ordered[f.name == "alpha" ? 0 : (f.name == "beta" ? 1 : 2)] = std::move(f);
        auto arr = Arrangement::create(surface, ordered);
        return TrisectionDiagram{std::move(arr), std::nullopt};
    }
    if (names == std::vector<std::string>{"first", "second"}) {
        std::vector<Family> ordered(2);
        for (auto& f : families) ordered[f.name == "first" ? 0 : 1] = std::move(f);
        auto arr = Arrangement::create(surface, ordered);
        return HeegaardDiagram{std::move(arr), "first", "second"};
    }
    throw ParseError(lines.back()[0].line, 1,
                     "families must be alpha/beta/gamma (trisection) or first/second (Heegaard)");
}

TrisectionDiagram parse_trisection(const std::string& text) {
    auto parsed = parse_trid(text);
    if (auto* t = std::get_if<TrisectionDiagram>(&parsed)) return std::move(*t);
    throw ValidationError("expected a trisection diagram (families alpha, beta, gamma)");
}

namespace {

// The event rotation realizing the canonical cycle key, so serialization is
// stable under re-parsing.
std::vector<CrossingEvent> canonical_rotation(const Arrangement& arr,
                                              const std::vector<CrossingEvent>& events) {
    auto encode = [&](const std::vector<CrossingEvent>& ev, int start) {
        std::string s;
        int m = (int)ev.size();
        for (int k = 0; k < m; ++k) {
            const auto& e = ev[(start + k) % m];
            s += std::to_string(e.seg) + "@" + std::to_string(e.slot) + ";";
        }
        return s;
    };
    const auto reversed = arr.reversed_events(events);
    std::vector<CrossingEvent> best;
    std::string best_key;
    for (const auto* seq : {&events, static_cast<const std::vector<CrossingEvent>*>(&reversed)}) {
        for (int r = 0; r < (int)seq->size(); ++r) {
            std::string key = encode(*seq, r);
            if (best_key.empty() || key < best_key) {
                best_key = key;
                best.clear();
                for (int k = 0; k < (int)seq->size(); ++k)
                    best.push_back((*seq)[(r + k) % seq->size()]);
            }
        }
    }
    return best;
}

} // namespace

std::string serialize(const Arrangement& arr) {
    std::ostringstream out;
    out << "trid 1\n";
    out << "genus " << arr.genus() << "\n";
    for (const auto& fam : arr.families()) {
        out << "family " << fam.name << "\n";
        for (const auto& crv : fam.curves) {
            out << "curve " << crv.name << ":";
            for (const auto& e : canonical_rotation(arr, crv.events))
                out << " " << arr.surface().segment_name(e.seg) << "@" << e.slot;
            out << "\n";
        }
    }
    return out.str();
}

std::string serialize(const TrisectionDiagram& d) { return serialize(d.arrangement); }
std::string serialize(const HeegaardDiagram& h) { return serialize(h.arrangement); }

} // namespace trisect
