#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ditcalc/partition.hpp"
#include "ditcalc/rational.hpp"

namespace ditcalc {

/// Universes up to this size also count dits on the dense pair matrix.
inline constexpr std::size_t kDenseDemoLimit = 1024;

struct DemoStep {
    std::size_t digit = 0;               // 1-based, most significant first
    std::uint64_t new_dits = 0;          // ordered dits added by this digit
    std::uint64_t expected_new_dits = 0; // (radix − 1)·radix^{2n−k}
    std::uint64_t total_dits = 0;
    std::optional<std::uint64_t> dense_new_dits;
};

/// Joining the n digit partitions of a radix^n universe one digit at a time.
struct DemoTrace {
    unsigned radix = 2;
    unsigned digits = 0;
    std::size_t universe_size = 0;
    std::vector<DemoStep> steps;
    std::uint64_t total_dits = 0;
    std::uint64_t expected_total_dits = 0;  // radix^n (radix^n − 1)
    Rational logical;                       // h of the final join
    double shannon = 0;                     // H_radix of the final join
    double block_count = 0;
    bool join_is_discrete = false;
};

/// Elements are labelled by their `digits`-long base-`radix` strings; the
/// k-th digit partition groups elements sharing digit k.
DemoTrace digit_partition_demo(unsigned radix, unsigned digits);

/// radix 2, 1 <= n <= 16. Throws RangeError otherwise.
DemoTrace binary_demo(unsigned n);
/// radix 3, 1 <= n <= 10. Throws RangeError otherwise.
DemoTrace coin_demo(unsigned n);

/// Universe of radix^digits elements labelled by their digit strings.
UniversePtr digit_universe(unsigned radix, unsigned digits);
/// Partition by the k-th digit (1-based, most significant first).
Partition digit_partition(const UniversePtr& u, unsigned radix, unsigned digits, unsigned k);

}  // namespace ditcalc
