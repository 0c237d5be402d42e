#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaff {

/// One CLI invocation; args excludes the program name.
///
/// Subcommands: validate, construct, verify, classify, extract, pieces,
/// twist, generate eval, decompose-sl2, selfcheck.
///
/// Exit codes: 0 success / all checks pass; 1 validation, verification or
/// classification failure; 2 unknown subcommand or bad usage; 3 I/O or
/// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qaff
