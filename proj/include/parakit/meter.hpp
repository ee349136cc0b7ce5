#pragma once

#include <cstdint>
#include <functional>

namespace parakit {

// Abstract cost accounting. One unit per basic operation (adjacency query,
// set insertion, symbol read). A Meter is confined to a single evaluation
// context; it is never shared between runs.
struct Meter {
    std::uint64_t steps = 0;

    void tick(std::uint64_t n = 1) { steps += n; }
    void reset() { steps = 0; }
};

// Resource rule r(f(k), |x|) together with a multiplicative calibration
// constant. rule must be monotone in both arguments.
struct StepBudget {
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> rule;
    std::uint64_t slack = 1;

    std::uint64_t allowed(std::uint64_t f_value, std::uint64_t input_len) const {
        return slack * rule(f_value, input_len);
    }
};

} // namespace parakit
