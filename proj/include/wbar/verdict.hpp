#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace wbar {

/// Outcome of an exhaustive machine check.
struct Verdict {
    std::string map;
    int max_degree = 0;
    std::vector<std::pair<std::string, int>> caps;
    std::size_t checked = 0;
    bool passed = true;
    std::optional<std::string> counterexample;

    void fail(std::string witness) {
        if (passed) {
            passed = false;
            counterexample = std::move(witness);
        }
    }

    /// Folds another verdict into this one; the first failure wins.
    void absorb(const Verdict& other) {
        checked += other.checked;
        if (!other.passed && passed) {
            passed = false;
            counterexample = other.map + ": " + other.counterexample.value_or("");
        }
    }
};

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json caps = nlohmann::json::object();
    for (const auto& [name, value] : v.caps) caps[name] = value;
    nlohmann::json j{{"map", v.map},
                     {"degrees_checked", v.max_degree},
                     {"caps", caps},
                     {"checked", v.checked},
                     {"status", v.passed ? "pass" : "fail"}};
    if (v.counterexample) j["counterexample"] = *v.counterexample;
    return j;
}

}  // namespace wbar
