#ifndef TRISECT_TRID_HPP
#define TRISECT_TRID_HPP

#include "trisect/diagram.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace trisect {

// TRID is the plain-text diagram format:
//   trid 1
//   genus <g>
//   family <alpha|beta|gamma|first|second>
//   curve <name>: <seg>@<slot> <seg>@<slot> ...
// '#' starts a comment, blank lines are ignored. Two families make a Heegaard
// diagram (named first/second), three a trisection (alpha/beta/gamma). Slot
// numbers are absolute; gaps are rejected rather than renumbered.

class ParseError : public ValidationError {
public:
    ParseError(int line, int column, const std::string& msg)
        : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + msg),
          line(line),
          column(column) {}
    int line, column;
};

using ParsedDiagram = std::variant<TrisectionDiagram, HeegaardDiagram>;

ParsedDiagram parse_trid(const std::string& text);
TrisectionDiagram parse_trisection(const std::string& text);

/// Canonical serialization: families in conventional order, curves by index,
/// events from the canonical rotation of each cycle. Byte-stable.
std::string serialize(const Arrangement& arr);
std::string serialize(const TrisectionDiagram& d);
std::string serialize(const HeegaardDiagram& h);

} // namespace trisect

#endif
