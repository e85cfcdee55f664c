#pragma once

#include <string>

#include "json.hpp"

#include "ideallab/dfa.hpp"

namespace ideallab {

/// Interchange format, keys in this order:
///   {"states": n, "alphabet": [...], "transitions": {letter: [img...]},
///    "initial": q, "finals": [...]}
/// States are 1-based, finals sorted ascending, transitions keyed by letter
/// with one image per state.  Serialization is deterministic: equal automata
/// produce byte-identical documents.
nlohmann::ordered_json dfa_to_json(const Dfa& dfa);

/// Validates shape, types and ranges; throws std::invalid_argument with a
/// description of the first problem found.
Dfa dfa_from_json(const nlohmann::ordered_json& doc);

/// Two-space indented rendering with a trailing newline.
std::string dfa_to_json_string(const Dfa& dfa);

/// Parses and validates; parse errors surface as nlohmann exceptions.
Dfa dfa_from_json_string(const std::string& text);

}  // namespace ideallab
