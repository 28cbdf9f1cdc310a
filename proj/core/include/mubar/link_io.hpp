#pragma once

#include "mubar/link.hpp"

#include <string>

namespace mubar {

// Link files are JSON, one of two shapes:
//
//   {"type": "braid", "strands": 3, "word": "s2 s1^-1 s2 s1^-1 s2 s1^-1"}
//   {"type": "pd",
//    "crossings": [[a, b, c, d, sign], ...],
//    "components": [[arc, ...], ...]}
//
// PD crossings list the four arc slots in the stored order (counterclockwise
// from the incoming under-arc), plus the explicit sign.  Everything is
// validated on load; malformed JSON or fields raise ParseError, inconsistent
// diagrams raise ValidationError.

Link parse_link(const std::string& text);
Link load_link(const std::string& path);

std::string serialize_link(const Link& link);
void save_link(const Link& link, const std::string& path);

} // namespace mubar
