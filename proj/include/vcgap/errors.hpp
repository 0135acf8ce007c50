#pragma once

#include <stdexcept>

namespace vcgap {

// Malformed input text: DIMACS files, cost files, family specs, certificate JSON.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's domain: an edgeless graph
// where a gap is requested, an instance above a configured solver limit,
// a negative cost entry.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal contract violation. Raised when a computed object fails an
// invariant that is guaranteed by theory (half-integrality, strong duality,
// cut/cover agreement); indicates a solver bug, not bad input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace vcgap
