#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ditcalc/prob_dist.hpp"
#include "ditcalc/rational.hpp"

namespace ditcalc {

/// A finite set of `size()` elements indexed 0..size-1, with optional
/// distinct display labels.
class Universe {
public:
    static std::shared_ptr<const Universe> of_size(std::size_t n);
    static std::shared_ptr<const Universe> with_labels(std::vector<std::string> labels);

    std::size_t size() const { return size_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Display label of element i; the decimal index when unlabeled.
    std::string label(std::size_t i) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool operator==(const Universe& other) const = default;

private:
    Universe(std::size_t n, std::vector<std::string> labels) : size_(n), labels_(std::move(labels)) {}

    std::size_t size_ = 0;
    std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const Universe>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

using Block = std::vector<std::size_t>;

/// A set partition of a Universe in canonical form: blocks ordered by their
/// smallest element, elements ascending within each block.
class Partition {
public:
    /// Partition whose blocks are the classes of equal `labels[i]`.
    /// labels.size() must equal the universe size.
    static Partition from_block_labels(UniversePtr universe, std::span<const std::size_t> labels);

    const Universe& universe() const { return *universe_; }
    const UniversePtr& universe_ptr() const { return universe_; }

    std::size_t size() const { return block_of_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(std::size_t b) const { return blocks_[b]; }

    /// Canonical index of the block containing `element`.
    std::size_t block_of(std::size_t element) const { return block_of_[element]; }
    std::span<const std::size_t> block_labels() const { return block_of_; }

    bool is_blob() const { return blocks_.size() == 1; }
    bool is_discrete() const { return blocks_.size() == block_of_.size(); }

    /// Equal universes and equal blocks.
    bool operator==(const Partition& other) const;

private:
    Partition() = default;

    UniversePtr universe_;
    std::vector<Block> blocks_;
    std::vector<std::size_t> block_of_;
};

/// The single-block partition {U}; bottom of the refinement order.
Partition blob(const UniversePtr& u);
/// All singletons; top of the refinement order.
Partition discrete(const UniversePtr& u);

/// Validates and canonicalizes raw blocks.
/// Throws EmptyBlockError, OverlapError, CoverError.
Partition partition_from_blocks(const UniversePtr& u, const std::vector<Block>& raw_blocks);

/// True iff sigma ⪯ pi, i.e. every block of pi lies inside a block of sigma.
bool is_refinement(const Partition& sigma, const Partition& pi);

/// Blocks are the nonempty pairwise intersections B∩C.
Partition join(const Partition& pi, const Partition& sigma);

/// Blocks are the connected components of the union of both indit relations.
Partition meet(const Partition& pi, const Partition& sigma);

/// p_B = |B|/|U| per block in canonical order, exact values retained.
ProbDist block_probabilities(const Partition& pi);

/// Sizes |B| in canonical block order.
std::vector<std::size_t> block_sizes(const Partition& pi);

inline constexpr std::size_t kMaxEnumerationSize = 12;

/// Streams every partition of a universe once, in lexicographic order of
/// restricted-growth strings. Throws TooLargeError above kMaxEnumerationSize.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(UniversePtr u);

    std::optional<Partition> next();

private:
    UniversePtr universe_;
    std::vector<std::size_t> growth_;
    std::vector<std::size_t> prefix_max_;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(const UniversePtr& u);

/// Bell number B(n), n <= 25.
std::uint64_t bell_number(std::size_t n);

void require_same_universe(const Partition& a, const Partition& b);

}  // namespace ditcalc
