#include "qaff/report.hpp"

namespace qaff {

bool VerificationReport::passed() const {
    for (const auto& c : checks_)
        if (!c.ok) return false;
    return true;
}

const Check* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerificationReport::first_failure() const {
    for (const auto& c : checks_)
        if (!c.ok) return c.name;
    return {};
}

std::string render(const VerificationReport& report) {
    std::string out;
    for (const auto& c : report.checks()) {
        out += c.ok ? "ok    " : "FAIL  ";
        out += c.name;
        if (!c.ok && c.residual_bits > 0)
            out += " (residual bits: " + std::to_string(c.residual_bits) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace qaff
