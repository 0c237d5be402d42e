#pragma once

#include <iosfwd>

namespace qaff {

/// The built-in acceptance suite: nine end-to-end checks covering the hand
/// oracle, the construction sweep, verification, equivariance, round trips,
/// pieces, sl2 decomposition, q-integers and the CLI golden path.  Prints
/// one PASS/FAIL line per check; returns true iff all pass.
bool selfcheck(std::ostream& out);

}  // namespace qaff
