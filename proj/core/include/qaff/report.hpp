#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qaff {

/// One named exact check.  `residual_bits` is the bit length of the largest
/// |numerator| among the nonzero entries of the residual, and 0 when the
/// check passed or when the check is structural (dimension counts rather
/// than a residual matrix).
struct Check {
    std::string name;
    bool ok = false;
    std::size_t residual_bits = 0;
};

/// Ordered list of checks.  Validators append in a fixed order and never
/// short-circuit, so a failing report still shows every clause.
class VerificationReport {
public:
    void add(Check check) { checks_.push_back(std::move(check)); }

    bool passed() const;

    /// nullptr when no check with that name exists.
    const Check* find(std::string_view name) const;

    /// Name of the first failed check; empty when passed.
    std::string first_failure() const;

    const std::vector<Check>& checks() const noexcept { return checks_; }

private:
    std::vector<Check> checks_;
};

/// Stable text rendering, one line per check:
///   "ok    <name>" or "FAIL  <name> (residual bits: N)".
std::string render(const VerificationReport& report);

/// Input data rejected by a validator; carries the full clause report.
struct ValidationError : std::runtime_error {
    explicit ValidationError(VerificationReport rep)
        : std::runtime_error("validation failed: " + rep.first_failure()),
          report(std::move(rep)) {}

    VerificationReport report;
};

}  // namespace qaff
