#include "ditcalc/entropy.hpp"

#include <cmath>
#include <map>

#include "ditcalc/errors.hpp"
#include "ditcalc/pair_set.hpp"

namespace ditcalc {

namespace {

Rational over_square(std::uint64_t count, std::size_t n) {
    const auto n64 = static_cast<std::int64_t>(n);
    return Rational(static_cast<std::int64_t>(count), n64 * n64);
}

// Σ p ln(1/p) over blocks, one term per distinct block size so that many
// equal blocks do not accumulate rounding error.
double nat_entropy(const Partition& pi) {
    std::map<std::size_t, std::size_t> blocks_of_size;
    for (const auto& b : pi.blocks()) ++blocks_of_size[b.size()];
    const auto n = static_cast<double>(pi.size());
    double sum = 0;
    for (const auto [size, count] : blocks_of_size) {
        const double mass = static_cast<double>(size * count) / n;
        sum += mass * std::log(n / static_cast<double>(size));
    }
    return sum;
}

}  // namespace

void require_valid_base(double base) {
    if (!(base > 1.0) || !std::isfinite(base)) throw BadBase("log base must be a finite number > 1");
}

std::uint64_t dit_count(const Partition& pi) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < pi.size(); ++i) total += pi.size() - pi.block(pi.block_of(i)).size();
    return total;
}

Rational logical_entropy(const Partition& pi) { return over_square(dit_count(pi), pi.size()); }

double shannon_entropy(const Partition& pi, double base) {
    require_valid_base(base);
    return nat_entropy(pi) / std::log(base);
}

double block_count_entropy(const Partition& pi) { return std::exp(nat_entropy(pi)); }

double h_from_H(double shannon_block_entropy, double base) {
    require_valid_base(base);
    if (!(shannon_block_entropy >= 0.0) || !std::isfinite(shannon_block_entropy)) {
        throw DomainError("Shannon block entropy must be finite and >= 0");
    }
    return -std::expm1(-shannon_block_entropy * std::log(base));
}

double H_from_h(double logical_block_entropy, double base) {
    require_valid_base(base);
    if (!(logical_block_entropy >= 0.0 && logical_block_entropy < 1.0)) {
        throw DomainError("logical block entropy must lie in [0, 1)");
    }
    return -std::log1p(-logical_block_entropy) / std::log(base);
}

namespace {

void require_valid_base(const WideFloat& base) {
    if (!(base > 1) || !boost::multiprecision::isfinite(base)) throw BadBase("log base must be a finite number > 1");
}

}  // namespace

WideFloat h_from_H(const WideFloat& shannon_block_entropy, const WideFloat& base) {
    require_valid_base(base);
    if (!(shannon_block_entropy >= 0) || !boost::multiprecision::isfinite(shannon_block_entropy)) {
        throw DomainError("Shannon block entropy must be finite and >= 0");
    }
    return 1 - boost::multiprecision::exp(-shannon_block_entropy * boost::multiprecision::log(base));
}

WideFloat H_from_h(const WideFloat& logical_block_entropy, const WideFloat& base) {
    require_valid_base(base);
    if (!(logical_block_entropy >= 0 && logical_block_entropy < 1)) {
        throw DomainError("logical block entropy must lie in [0, 1)");
    }
    return -boost::multiprecision::log(1 - logical_block_entropy) / boost::multiprecision::log(base);
}

Rational logical_mutual_info(const Partition& pi, const Partition& sigma) {
    const auto mut = mutual_information_set(pi, sigma);
    return over_square(mut.count(), pi.size());
}

namespace {

// |B∩C| keyed by (block of pi, block of sigma).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> intersection_sizes(const Partition& pi,
                                                                             const Partition& sigma) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> sizes;
    for (std::size_t i = 0; i < pi.size(); ++i) ++sizes[{pi.block_of(i), sigma.block_of(i)}];
    return sizes;
}

}  // namespace

double shannon_mutual_info(const Partition& pi, const Partition& sigma, double base) {
    require_same_universe(pi, sigma);
    require_valid_base(base);
    const auto n = static_cast<double>(pi.size());
    double sum = 0;
    for (const auto& [key, both] : intersection_sizes(pi, sigma)) {
        const auto pb = static_cast<double>(pi.block(key.first).size());
        const auto pc = static_cast<double>(sigma.block(key.second).size());
        const auto pbc = static_cast<double>(both);
        sum += (pbc / n) * std::log(pbc * n / (pb * pc));
    }
    return sum / std::log(base);
}

bool are_independent(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    const auto sizes = intersection_sizes(pi, sigma);
    const auto n = static_cast<std::uint64_t>(pi.size());
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        for (std::size_t c = 0; c < sigma.block_count(); ++c) {
            auto it = sizes.find({b, c});
            const std::uint64_t both = it == sizes.end() ? 0 : it->second;
            if (both * n != pi.block(b).size() * sigma.block(c).size()) return false;
        }
    }
    return true;
}

EntropyReport entropy_report(const Partition& pi, double base) {
    require_valid_base(base);
    EntropyReport r;
    r.base = base;
    r.logical = logical_entropy(pi);
    r.logical_value = to_double(r.logical);
    r.shannon = shannon_entropy(pi, base);
    r.block_count = block_count_entropy(pi);
    const auto n = static_cast<std::int64_t>(pi.size());
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        const auto size = static_cast<std::int64_t>(pi.block(b).size());
        BlockEntropy e;
        e.block = b;
        e.probability = Rational(size, n);
        e.logical = Rational(1) - e.probability;
        e.shannon = std::log(static_cast<double>(n) / static_cast<double>(size)) / std::log(base);
        e.block_count = static_cast<double>(n) / static_cast<double>(size);
        r.per_block.push_back(e);
    }
    return r;
}

}  // namespace ditcalc
