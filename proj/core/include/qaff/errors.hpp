#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qaff {

/// Malformed input text: rational literals outside the grammar, broken or
/// incomplete JSON, shape fields that contradict the payload.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain: q in {0,1,-1},
/// mismatched shapes, singular matrix where an inverse is required,
/// precondition violations of the classification routines.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal self-check of the construction pipeline failed.  `lemma`
/// names the structural fact that was violated.  For systems that passed
/// validation these are unreachable; they exist so a failure localizes
/// instead of surfacing as a wrong matrix three stages later.
struct LemmaError : std::runtime_error {
    LemmaError(std::string lemma_name, const std::string& detail)
        : std::runtime_error(lemma_name + ": " + detail), lemma(std::move(lemma_name)) {}

    std::string lemma;
};

}  // namespace qaff
