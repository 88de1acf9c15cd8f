#pragma once

#include <string>
#include <vector>

#include "nichols/conditions.hpp"

namespace nichols {

struct VerifyItem {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string note; // first failure description
};

struct VerifyResult {
    std::vector<VerifyItem> items;
    long total_checked() const;
    long total_failed() const;
    bool ok() const { return total_failed() == 0; }
};

/// The cross-module invariant suite: field axioms, q-identities, bicharacter laws,
/// Leibniz, oracle symmetries, closed forms against the oracle, the equivalence
/// corollaries, the A7 reduction, and classifier agreement on a small sweep.
/// Deterministic for a fixed config and seed.
VerifyResult run_verify_suite(const Limits& cfg);

} // namespace nichols
