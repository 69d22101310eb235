#ifndef QPS_VERIFY_HPP
#define QPS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qps/field.hpp"

namespace qps {

struct PropertyResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
};

struct VerifyReport {
    std::vector<PropertyResult> results;

    bool all_passed() const;
    /// Fixed-width pass/fail table; identical bytes for identical inputs.
    std::string table() const;
};

/// Runs every invariant suite at one dimension over seeded random states.
VerifyReport run_verification(Dimension dim, int trials, std::uint64_t seed,
                              double tol);

}  // namespace qps

#endif
