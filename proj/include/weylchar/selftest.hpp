#pragma once

#include <string>
#include <vector>

namespace weylchar {

struct SelftestCheck {
    std::string name;
    bool passed = false;
};

// Runs the invariant suite for one subcommand group ("datum", "weyl", "char",
// "roots", "ord", "bh", "ext" or "all").  Deterministic, no I/O.
std::vector<SelftestCheck> run_selftest(const std::string& group);

} // namespace weylchar
