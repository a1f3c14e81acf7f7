#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ditcalc/partition.hpp"

namespace ditcalc {

/// Outcome of one named check at one parameter setting.
struct VerificationReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    std::uint64_t cases = 0;
    /// Counterexamples, at most kMaxRecordedFailures of them.
    std::vector<std::string> failures;
    std::uint64_t failure_count = 0;

    static constexpr std::size_t kMaxRecordedFailures = 20;

    bool passed() const { return failure_count == 0; }

    /// Counts one case; records `describe()` when `ok` is false.
    void check(bool ok, const std::function<std::string()>& describe);

    bool operator==(const VerificationReport&) const = default;
};

bool all_passed(const std::vector<VerificationReport>& reports);

/// The lattice operations under test. Replaceable for mutation testing.
struct LatticeOps {
    std::function<Partition(const Partition&, const Partition&)> join = ditcalc::join;
    std::function<Partition(const Partition&, const Partition&)> meet = ditcalc::meet;
};

inline constexpr std::size_t kMaxExhaustiveSize = 6;

/// Every lattice, closure-space and partition-entropy law over all
/// partitions (and ordered pairs, and triples where needed) of universes of
/// size 1..max_n. Sizes run concurrently; reports are sorted by name, then
/// size. Throws RangeError for max_n < 2, TooLargeError above 6.
std::vector<VerificationReport> run_exhaustive(std::size_t max_n, const LatticeOps& ops = {});

/// Independence identities for the row and column partitions of a×b grids,
/// plus a rows-vs-rows negative control. Needs a, b >= 2 and a·b <= 64.
std::vector<VerificationReport> run_independence(const std::vector<std::pair<std::size_t, std::size_t>>& dims);

/// Seeded random sweep over distribution pairs of length 1..n_max.
///
/// Random numbers come from std::mt19937_64 seeded with `seed`. A uniform
/// draw on (0, 1] is ((x >> 11) + 1) · 2^-53 for a raw output x; lengths
/// are 1 + x mod n_max; a distribution is n uniform draws divided by
/// their sum. Both the engine and these transforms are fully specified,
/// so reports reproduce across platforms.
std::vector<VerificationReport> run_distribution_trials(std::size_t n_max, std::size_t trials, std::uint64_t seed);

}  // namespace ditcalc
