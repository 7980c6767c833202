#pragma once

// The end-to-end acceptance checks, one result per criterion, in a fixed order.

#include "hfmap/polygon_lab.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfmap {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct AcceptanceInputs {
    // Replace the embedded 20-gon pairing or the 12-vertex circuit.
    std::optional<PairingTable> pairing;
    std::optional<Circuit> circuit;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceInputs& inputs = {});

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return !results.empty();
}

// "[PASS]  1  title  (detail)" per line.
std::string format_results(const std::vector<CriterionResult>& results);
nlohmann::ordered_json results_json(const std::vector<CriterionResult>& results);

} // namespace hfmap
