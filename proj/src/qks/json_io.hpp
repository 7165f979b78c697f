#pragma once

#include <string>
#include <vector>

#include "qks/hl.hpp"
#include "qks/quiver.hpp"

namespace qks {

// Parses and validates the quiver + current-sequence JSON:
//   {"vertices":["0","1"],
//    "arrows":[{"id":"t_00","tail":"0","head":"0"}],
//    "steps":[{"vertex":"0","a":2,"mu":[4,2]}]}
// Throws SchemaError carrying a JSON pointer to the offending field.
CurrentSequence parse_spec(const std::string& text);

// Lambda tuple given as a JSON array of arrays, e.g. [[6,3,3,1,1],[]].
PartitionTuple parse_lambda(const std::string& text, int nvertices);

std::string spec_to_json(const CurrentSequence& cs);

}  // namespace qks
