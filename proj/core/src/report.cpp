#include "centrum/report.hpp"

#include <sstream>

#include "centrum/errors.hpp"

namespace centrum {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations) violations.push_back({prefix + v.law, v.indices, v.detail});
}

void ValidationReport::require() const {
    if (!clean()) throw ValidationError(summary());
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << (subject.empty() ? "object" : subject);
    if (clean()) {
        os << ": clean";
        return os.str();
    }
    os << ": " << violations.size() << " violation(s)";
    std::size_t shown = 0;
    for (const auto& v : violations) {
        if (shown++ == 8) {
            os << "; ...";
            break;
        }
        os << "; " << v.law << "(";
        for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
        os << ")";
        if (!v.detail.empty()) os << " " << v.detail;
    }
    return os.str();
}

bool all_pass(const std::vector<CoherenceReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace centrum
