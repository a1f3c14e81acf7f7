#include "ditcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ditcalc/errors.hpp"
#include "ditcalc/union_find.hpp"

namespace ditcalc {

std::shared_ptr<const Universe> Universe::of_size(std::size_t n) {
    if (n == 0) throw InvalidUniverse("universe must have at least one element");
    return std::shared_ptr<const Universe>(new Universe(n, {}));
}

std::shared_ptr<const Universe> Universe::with_labels(std::vector<std::string> labels) {
    if (labels.empty()) throw InvalidUniverse("universe must have at least one element");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw InvalidUniverse("duplicate universe label '" + l + "'");
    }
    auto n = labels.size();
    return std::shared_ptr<const Universe>(new Universe(n, std::move(labels)));
}

std::string Universe::label(std::size_t i) const {
    return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::optional<std::size_t> Universe::index_of(const std::string& label) const {
    if (labels_.empty()) {
        std::size_t pos = 0;
        std::size_t value = 0;
        try {
            value = std::stoul(label, &pos);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (pos != label.size() || value >= size_) return std::nullopt;
        return value;
    }
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || *a == *b;
}

void require_same_universe(const Partition& a, const Partition& b) {
    if (!same_universe(a.universe_ptr(), b.universe_ptr())) {
        throw UniverseMismatch("partitions are over different universes (sizes " + std::to_string(a.size()) +
                               " and " + std::to_string(b.size()) + ")");
    }
}

Partition Partition::from_block_labels(UniversePtr universe, std::span<const std::size_t> labels) {
    if (labels.size() != universe->size()) {
        throw CoverError("expected " + std::to_string(universe->size()) + " block labels, got " +
                         std::to_string(labels.size()));
    }
    Partition p;
    p.universe_ = std::move(universe);
    p.block_of_.resize(labels.size());
    // Numbering blocks by first appearance while scanning elements in order
    // yields canonical order directly.
    std::unordered_map<std::size_t, std::size_t> renumber;
    renumber.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = renumber.try_emplace(labels[i], p.blocks_.size());
        if (inserted) p.blocks_.emplace_back();
        p.block_of_[i] = it->second;
        p.blocks_[it->second].push_back(i);
    }
    return p;
}

bool Partition::operator==(const Partition& other) const {
    return block_of_ == other.block_of_ && same_universe(universe_, other.universe_);
}

Partition blob(const UniversePtr& u) {
    std::vector<std::size_t> labels(u->size(), 0);
    return Partition::from_block_labels(u, labels);
}

Partition discrete(const UniversePtr& u) {
    std::vector<std::size_t> labels(u->size());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    return Partition::from_block_labels(u, labels);
}

Partition partition_from_blocks(const UniversePtr& u, const std::vector<Block>& raw_blocks) {
    const auto n = u->size();
    constexpr auto unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(n, unassigned);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
        if (raw_blocks[b].empty()) throw EmptyBlockError("block " + std::to_string(b) + " is empty");
        for (auto e : raw_blocks[b]) {
            if (e >= n) {
                throw CoverError("element " + std::to_string(e) + " is outside a universe of size " +
                                 std::to_string(n));
            }
            if (labels[e] != unassigned) {
                throw OverlapError("element " + u->label(e) + " appears in blocks " + std::to_string(labels[e]) +
                                   " and " + std::to_string(b));
            }
            labels[e] = b;
        }
    }
    for (std::size_t e = 0; e < n; ++e) {
        if (labels[e] == unassigned) throw CoverError("element " + u->label(e) + " is not covered by any block");
    }
    return Partition::from_block_labels(u, labels);
}

bool is_refinement(const Partition& sigma, const Partition& pi) {
    require_same_universe(sigma, pi);
    for (const auto& block : pi.blocks()) {
        const auto target = sigma.block_of(block.front());
        for (auto e : block) {
            if (sigma.block_of(e) != target) return false;
        }
    }
    return true;
}

Partition join(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    const auto n = pi.size();
    const auto stride = sigma.block_count();
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = pi.block_of(i) * stride + sigma.block_of(i);
    return Partition::from_block_labels(pi.universe_ptr(), labels);
}

Partition meet(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    DisjointSets sets(pi.size());
    for (const auto* p : {&pi, &sigma}) {
        for (const auto& block : p->blocks()) {
            for (auto e : block) sets.unite(block.front(), e);
        }
    }
    auto labels = sets.labels();
    return Partition::from_block_labels(pi.universe_ptr(), labels);
}

std::vector<std::size_t> block_sizes(const Partition& pi) {
    std::vector<std::size_t> sizes;
    sizes.reserve(pi.block_count());
    for (const auto& b : pi.blocks()) sizes.push_back(b.size());
    return sizes;
}

ProbDist block_probabilities(const Partition& pi) {
    std::vector<Rational> probs;
    probs.reserve(pi.block_count());
    const auto n = static_cast<std::int64_t>(pi.size());
    for (const auto& b : pi.blocks()) probs.emplace_back(static_cast<std::int64_t>(b.size()), n);
    return ProbDist::from_rationals(std::move(probs));
}

PartitionEnumerator::PartitionEnumerator(UniversePtr u) : universe_(std::move(u)) {
    const auto n = universe_->size();
    if (n > kMaxEnumerationSize) {
        throw TooLargeError("partition enumeration is limited to universes of at most " +
                            std::to_string(kMaxEnumerationSize) + " elements (got " + std::to_string(n) + ")");
    }
    growth_.assign(n, 0);
    prefix_max_.assign(n, 0);
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    auto current = Partition::from_block_labels(universe_, growth_);

    // Advance to the lexicographic successor: bump the rightmost position
    // that may still grow, zero everything after it.
    const auto n = growth_.size();
    std::size_t i = n;
    while (i > 1) {
        --i;
        if (growth_[i] <= prefix_max_[i - 1]) break;
        if (i == 1) {
            i = 0;
            break;
        }
    }
    if (i == 0 || n <= 1) {
        done_ = true;
    } else {
        ++growth_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            growth_[j] = 0;
            prefix_max_[j] = prefix_max_[i];
        }
    }
    return current;
}

std::vector<Partition> enumerate_partitions(const UniversePtr& u) {
    PartitionEnumerator it(u);
    std::vector<Partition> out;
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

std::uint64_t bell_number(std::size_t n) {
    if (n > 25) throw TooLargeError("bell_number overflows 64 bits above n = 25");
    if (n == 0) return 1;
    // Bell triangle; row r ends with B(r+1).
    std::vector<std::uint64_t> row{1};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

}  // namespace ditcalc
