#pragma once

#include "qaff/classify.hpp"
#include "qaff/relations.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qaff {

/// File formats are JSON with objects and arrays only; every scalar is a
/// rational in the text form `-?[0-9]+(/[1-9][0-9]*)?`.  Matrices are
///   {"rows": r, "cols": c, "entries": [.. row-major ..]}
/// Systems are {"q", "d", "dim", "U": [basis matrices], "R", "L"};
/// modules are {"q", "dim", "e0p", "e0m", "e1p", "e1m", "K0", "K1"}.
/// Inverses are never stored.  Serialization is deterministic (sorted keys,
/// two-space indent, trailing newline), so equal values give equal bytes.

/// A structurally well-formed system file: shapes are consistent, every
/// entry parsed.  Whether the data satisfies the six clauses is a separate
/// question, answered by validate() / admit().
struct ParsedSystem {
    Rational q;
    std::size_t dim = 0;
    std::vector<Subspace> u;
    Matrix r, l;

    VerificationReport validate() const;

    /// Throws ValidationError (with the full report) on any failed clause.
    RLSystem admit() const;
};

/// Throws ParseError on malformed input.
ParsedSystem parse_system(const std::string& text);

std::string serialize(const RLSystem& sys);

/// Structural parse of a module file.  A q of 0, 1 or -1 is rejected as a
/// ValidationError so the relation checks can assume a sane parameter;
/// everything else (including relation violations) is left to the checkers.
HatModule parse_module(const std::string& text);

std::string serialize(const HatModule& m);
std::string serialize(const ConstructionTrace& t);
std::string serialize(const VerificationReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qaff
