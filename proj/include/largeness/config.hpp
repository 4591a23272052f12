#pragma once

#include <stdexcept>

namespace largeness {

/// Run-wide numeric policy: working precision, escalation cap, enumeration budget.
struct RunConfig {
    long precision_bits = 192;
    long precision_cap = 4096;
    long long budget = 10'000'000;  // max candidates per enumeration

    void validate() const {
        if (precision_bits < 8)
            throw std::invalid_argument("precision_bits must be >= 8");
        if (precision_bits > precision_cap)
            throw std::invalid_argument("precision_bits exceeds precision_cap");
        if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    }
};

}  // namespace largeness
