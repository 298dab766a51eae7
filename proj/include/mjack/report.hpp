#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mjack {

/// Outcome of one named invariant check over many cases.
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures; // first few diagnostics only

    bool passed() const noexcept { return failure_count == 0; }
    void fail(std::string what) {
        if (failures.size() < kMaxStored)
            failures.push_back(std::move(what));
        ++failure_count;
    }
    void merge(const CheckResult& o) {
        cases += o.cases;
        failure_count += o.failure_count;
        for (const auto& f : o.failures)
            if (failures.size() < kMaxStored)
                failures.push_back(f);
    }

    static constexpr std::size_t kMaxStored = 20;
};

} // namespace mjack
