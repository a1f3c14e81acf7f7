#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ditcalc/partition.hpp"

namespace ditcalc {

using Pair = std::pair<std::size_t, std::size_t>;

/// A subset of U×U for a universe of `size()` elements, stored as a dense
/// n×n bit matrix (row = first coordinate). Operations on pair sets of
/// different sizes throw SizeMismatch.
class PairSet {
public:
    explicit PairSet(std::size_t n);

    static PairSet empty(std::size_t n) { return PairSet(n); }
    static PairSet full(std::size_t n);
    static PairSet diagonal(std::size_t n);
    static PairSet from_pairs(std::size_t n, std::span<const Pair> pairs);

    std::size_t size() const { return n_; }

    bool contains(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void insert(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    void erase(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }

    /// Number of pairs in the set.
    std::size_t count() const;
    bool is_empty() const { return count() == 0; }

    PairSet complement() const;
    PairSet transpose() const;
    PairSet& operator|=(const PairSet& other);
    PairSet& operator&=(const PairSet& other);
    PairSet& operator-=(const PairSet& other);
    bool is_subset_of(const PairSet& other) const;

    bool is_reflexive() const;
    bool is_irreflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;

    /// Pairs in row-major order.
    std::vector<Pair> pairs() const;

    bool operator==(const PairSet& other) const = default;

    /// Word view of row i; bits past column n-1 are always zero.
    std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

private:
    void require_same_size(const PairSet& other) const;
    void clear_padding();

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

PairSet operator|(PairSet a, const PairSet& b);
PairSet operator&(PairSet a, const PairSet& b);
PairSet operator-(PairSet a, const PairSet& b);

/// Pairs (i,j) with i and j in different blocks.
PairSet dit_set(const Partition& pi);
/// Pairs (i,j) with i and j in the same block.
PairSet indit_set(const Partition& pi);

/// Smallest equivalence relation containing s, via union-find.
PairSet closure(const PairSet& s);
/// Same result as closure(), computed by Warshall's algorithm on bit rows.
PairSet closure_warshall(const PairSet& s);

/// Complement of the closure of the complement.
PairSet interior(const PairSet& s);

bool is_closed(const PairSet& s);
bool is_open(const PairSet& s);

/// The unique partition whose dit set is s. Throws NotOpenError unless
/// is_open(s).
Partition partition_from_open_set(const UniversePtr& u, const PairSet& s);

/// dit(pi) ∩ dit(sigma).
PairSet mutual_information_set(const Partition& pi, const Partition& sigma);

/// The union over block pairs (B, C) of (B − B∩C) × (C − B∩C).
PairSet mutual_information_set_structural(const Partition& pi, const Partition& sigma);

}  // namespace ditcalc
