#pragma once

#include <string>
#include <vector>

namespace lerch {

/// One failed convergence constraint. `tag` is a stable machine-readable id
/// ("m-region", "k-halfplane", "b-halfplane", "boundary-im-m-2pi", ...).
struct Violation {
    std::string tag;
    std::string message;
};

/// Outcome of checking a request against the convergence region of the
/// formula that would evaluate it. valid <=> violations.empty().
struct DomainStatus {
    bool valid = true;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;

    void reject(std::string tag, std::string message) {
        violations.push_back({std::move(tag), std::move(message)});
        valid = false;
    }
    void warn(std::string tag) { warnings.push_back(std::move(tag)); }

    bool has_violation(const std::string& tag) const {
        for (const auto& v : violations)
            if (v.tag == tag) return true;
        return false;
    }
    bool has_warning(const std::string& tag) const {
        for (const auto& w : warnings)
            if (w == tag) return true;
        return false;
    }
};

}  // namespace lerch
