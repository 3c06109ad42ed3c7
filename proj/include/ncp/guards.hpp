#pragma once

#include <cstdint>

namespace ncp {

// Safety bounds for the enumerative operations.  All are configurable;
// exceeding one raises DegreeOverflow (OrderOverflow for series orders).
struct Guards {
    int enumerate_legs = 14;                 // full enumeration of partitions of [n]
    int ideal_blocks = 20;                   // ideal enumeration per partition
    int equivalence_blocks = 10;             // contractible-equivalence enumeration
    std::int64_t coloration_budget = 10'000'000; // brute-force coloration maps
    int series_order = 10;                   // default series truncation order
    int extension_blocks = 20;               // linear-extension counting
};

Guards& guards();   // mutable process-wide defaults

} // namespace ncp
