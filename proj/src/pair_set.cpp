#include "ditcalc/pair_set.hpp"

#include <algorithm>
#include <bit>

#include "ditcalc/errors.hpp"
#include "ditcalc/union_find.hpp"

namespace ditcalc {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

PairSet::PairSet(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

PairSet PairSet::full(std::size_t n) {
    PairSet s(n);
    std::fill(s.bits_.begin(), s.bits_.end(), ~std::uint64_t{0});
    s.clear_padding();
    return s;
}

PairSet PairSet::diagonal(std::size_t n) {
    PairSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(i, i);
    return s;
}

PairSet PairSet::from_pairs(std::size_t n, std::span<const Pair> pairs) {
    PairSet s(n);
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n) {
            throw SizeMismatch("pair (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is outside a universe of size " + std::to_string(n));
        }
        s.insert(i, j);
    }
    return s;
}

void PairSet::clear_padding() {
    if (n_ % 64 == 0) return;
    const auto mask = (std::uint64_t{1} << (n_ % 64)) - 1;
    for (std::size_t i = 0; i < n_; ++i) bits_[i * words_ + words_ - 1] &= mask;
}

void PairSet::require_same_size(const PairSet& other) const {
    if (n_ != other.n_) {
        throw SizeMismatch("pair sets over universes of size " + std::to_string(n_) + " and " +
                           std::to_string(other.n_));
    }
}

std::size_t PairSet::count() const {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

PairSet PairSet::complement() const {
    PairSet out(*this);
    for (auto& w : out.bits_) w = ~w;
    out.clear_padding();
    return out;
}

PairSet PairSet::transpose() const {
    PairSet out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (contains(i, j)) out.insert(j, i);
        }
    }
    return out;
}

PairSet& PairSet::operator|=(const PairSet& other) {
    require_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= other.bits_[k];
    return *this;
}

PairSet& PairSet::operator&=(const PairSet& other) {
    require_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= other.bits_[k];
    return *this;
}

PairSet& PairSet::operator-=(const PairSet& other) {
    require_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= ~other.bits_[k];
    return *this;
}

PairSet operator|(PairSet a, const PairSet& b) { return a |= b; }
PairSet operator&(PairSet a, const PairSet& b) { return a &= b; }
PairSet operator-(PairSet a, const PairSet& b) { return a -= b; }

bool PairSet::is_subset_of(const PairSet& other) const {
    require_same_size(other);
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (bits_[k] & ~other.bits_[k]) return false;
    }
    return true;
}

bool PairSet::is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!contains(i, i)) return false;
    }
    return true;
}

bool PairSet::is_irreflexive() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (contains(i, i)) return false;
    }
    return true;
}

bool PairSet::is_symmetric() const { return *this == transpose(); }

bool PairSet::is_transitive() const {
    // (i,j) and (j,k) imply (i,k): row j must be inside row i whenever (i,j).
    for (std::size_t i = 0; i < n_; ++i) {
        auto ri = row(i);
        for (std::size_t j = 0; j < n_; ++j) {
            if (!contains(i, j)) continue;
            auto rj = row(j);
            for (std::size_t w = 0; w < words_; ++w) {
                if (rj[w] & ~ri[w]) return false;
            }
        }
    }
    return true;
}

std::vector<Pair> PairSet::pairs() const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (contains(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

// Sets row i to the indicator of the block containing i.
PairSet same_label_relation(std::span<const std::size_t> labels, std::size_t label_count) {
    const auto n = labels.size();
    PairSet s(n);
    std::vector<std::vector<std::uint64_t>> masks(label_count, std::vector<std::uint64_t>(words_for(n), 0));
    for (std::size_t i = 0; i < n; ++i) masks[labels[i]][i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t i = 0; i < n; ++i) std::ranges::copy(masks[labels[i]], s.row(i).begin());
    return s;
}

}  // namespace

PairSet indit_set(const Partition& pi) { return same_label_relation(pi.block_labels(), pi.block_count()); }

PairSet dit_set(const Partition& pi) { return indit_set(pi).complement(); }

PairSet closure(const PairSet& s) {
    const auto n = s.size();
    DisjointSets sets(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (s.contains(i, j)) sets.unite(i, j);
        }
    }
    auto labels = sets.labels();
    const auto count = labels.empty() ? 0 : *std::ranges::max_element(labels) + 1;
    return same_label_relation(labels, count);
}

PairSet closure_warshall(const PairSet& s) {
    const auto n = s.size();
    PairSet r = s | s.transpose() | PairSet::diagonal(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto rk = std::vector<std::uint64_t>(r.row(k).begin(), r.row(k).end());
        for (std::size_t i = 0; i < n; ++i) {
            if (!r.contains(i, k)) continue;
            auto ri = r.row(i);
            for (std::size_t w = 0; w < rk.size(); ++w) ri[w] |= rk[w];
        }
    }
    return r;
}

PairSet interior(const PairSet& s) { return closure(s.complement()).complement(); }

bool is_closed(const PairSet& s) { return s == closure(s); }

bool is_open(const PairSet& s) { return is_closed(s.complement()); }

Partition partition_from_open_set(const UniversePtr& u, const PairSet& s) {
    if (s.size() != u->size()) {
        throw SizeMismatch("pair set of size " + std::to_string(s.size()) + " for a universe of size " +
                           std::to_string(u->size()));
    }
    if (!is_open(s)) throw NotOpenError("pair set is not the dit set of any partition");
    // The complement is an equivalence relation; label each element by the
    // smallest member of its class.
    const auto n = s.size();
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        while (s.contains(i, j)) ++j;
        labels[i] = j;
    }
    return Partition::from_block_labels(u, labels);
}

PairSet mutual_information_set(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    return dit_set(pi) & dit_set(sigma);
}

PairSet mutual_information_set_structural(const Partition& pi, const Partition& sigma) {
    require_same_universe(pi, sigma);
    PairSet out(pi.size());
    for (std::size_t b = 0; b < pi.block_count(); ++b) {
        for (std::size_t c = 0; c < sigma.block_count(); ++c) {
            // B − (B∩C) and C − (B∩C)
            std::vector<std::size_t> b_only;
            std::vector<std::size_t> c_only;
            for (auto u : pi.block(b)) {
                if (sigma.block_of(u) != c) b_only.push_back(u);
            }
            for (auto v : sigma.block(c)) {
                if (pi.block_of(v) != b) c_only.push_back(v);
            }
            for (auto u : b_only) {
                for (auto v : c_only) out.insert(u, v);
            }
        }
    }
    return out;
}

}  // namespace ditcalc
