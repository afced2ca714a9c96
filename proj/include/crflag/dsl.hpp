#pragma once

// Text input for crossed diagrams.
//
//   spec    := form [ "cross" set ]
//   form    := NAME "(" args ")"
//            | "custom" TYPE RANK [ "black" set ] [ "arrows" pairset ]
//   set     := "{" INT { "," INT } "}" | "{}"
//   pairset := "{" pair { "," pair } "}"    pair := "(" INT "," INT ")"
//
// NAME is one of the catalog families (see catalog.hpp). TYPE is a single
// letter combined with RANK ("A 3"), or a full sum such as "A1+A1" whose total
// rank must equal RANK. Node numbers are 1-based.
//
// A spec that starts with "{" is read as the json object produced by
// render_json instead.

#include <string_view>

#include "crflag/parabolic.hpp"

namespace crflag {

/// Throws ParseError on malformed text, and the satake/parabolic errors when
/// the text parses but the diagram is invalid.
CrossedDiagram parse_spec(std::string_view text);

/// A node set in the `set` syntax above, e.g. "{1,2}".
NodeSet parse_node_set(std::string_view text);

}  // namespace crflag
