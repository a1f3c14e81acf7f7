#include "ditcalc/demo.hpp"

#include "ditcalc/entropy.hpp"
#include "ditcalc/errors.hpp"
#include "ditcalc/pair_set.hpp"

namespace ditcalc {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

UniversePtr digit_universe(unsigned radix, unsigned digits) {
    const auto n = ipow(radix, digits);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        std::string s(digits, '0');
        auto v = x;
        for (unsigned d = digits; d-- > 0;) {
            s[d] = static_cast<char>('0' + v % radix);
            v /= radix;
        }
        labels.push_back(std::move(s));
    }
    return Universe::with_labels(std::move(labels));
}

Partition digit_partition(const UniversePtr& u, unsigned radix, unsigned digits, unsigned k) {
    const auto place = ipow(radix, digits - k);
    std::vector<std::size_t> labels(u->size());
    for (std::size_t x = 0; x < labels.size(); ++x) labels[x] = (x / place) % radix;
    return Partition::from_block_labels(u, labels);
}

DemoTrace digit_partition_demo(unsigned radix, unsigned digits) {
    if (radix < 2 || digits < 1) throw RangeError("demo needs radix >= 2 and at least one digit");
    const auto u = digit_universe(radix, digits);
    const auto n = u->size();
    const bool dense = n <= kDenseDemoLimit;

    DemoTrace trace;
    trace.radix = radix;
    trace.digits = digits;
    trace.universe_size = n;
    const auto n64 = static_cast<std::uint64_t>(n);
    trace.expected_total_dits = n64 * (n64 - 1);

    auto joined = blob(u);
    std::optional<PairSet> joined_dits;
    if (dense) joined_dits = dit_set(joined);
    std::uint64_t total = 0;
    for (unsigned k = 1; k <= digits; ++k) {
        const auto digit = digit_partition(u, radix, digits, k);
        joined = join(joined, digit);
        const auto now = dit_count(joined);

        DemoStep step;
        step.digit = k;
        step.new_dits = now - total;
        step.expected_new_dits = (radix - 1) * ipow(radix, 2 * digits - k);
        step.total_dits = now;
        if (dense) {
            // Dits of the join are the union of the dits of its parts.
            auto next = *joined_dits | dit_set(digit);
            step.dense_new_dits = next.count() - joined_dits->count();
            joined_dits = std::move(next);
        }
        trace.steps.push_back(step);
        total = now;
    }

    trace.total_dits = total;
    trace.logical = logical_entropy(joined);
    trace.shannon = shannon_entropy(joined, static_cast<double>(radix));
    trace.block_count = block_count_entropy(joined);
    trace.join_is_discrete = joined.is_discrete();
    return trace;
}

DemoTrace binary_demo(unsigned n) {
    if (n < 1 || n > 16) throw RangeError("binary demo needs 1 <= n <= 16");
    return digit_partition_demo(2, n);
}

DemoTrace coin_demo(unsigned n) {
    if (n < 1 || n > 10) throw RangeError("coin demo needs 1 <= n <= 10");
    return digit_partition_demo(3, n);
}

}  // namespace ditcalc
