#pragma once

#include <string>
#include <vector>

#include "centrum/matrix.hpp"

namespace centrum {

// One failed identity: which law, at which basis indices.
struct Violation {
    std::string law;
    std::vector<std::size_t> indices;
    std::string detail;
};

struct ValidationReport {
    std::string subject;
    std::vector<Violation> violations;

    bool clean() const { return violations.empty(); }
    void add(std::string law, std::vector<std::size_t> indices, std::string detail = {}) {
        violations.push_back({std::move(law), std::move(indices), std::move(detail)});
    }
    void merge(const ValidationReport& other, const std::string& prefix = {});
    // Throws ValidationError listing the violations unless clean.
    void require() const;
    std::string summary() const;
};

// Outcome of evaluating both sides of a coherence law on one instance.
struct CoherenceReport {
    std::string law;
    std::string instance;
    Matrix lhs;
    Matrix rhs;
    bool pass = false;

    static CoherenceReport compare(std::string law, std::string instance, Matrix lhs, Matrix rhs) {
        bool ok = lhs == rhs;
        return {std::move(law), std::move(instance), std::move(lhs), std::move(rhs), ok};
    }
};

bool all_pass(const std::vector<CoherenceReport>& reports);

}  // namespace centrum
