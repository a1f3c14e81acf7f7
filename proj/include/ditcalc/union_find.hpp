#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace ditcalc {

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

    /// Component id per element, numbered 0,1,.. in order of each
    /// component's smallest element.
    std::vector<std::size_t> labels() {
        std::vector<std::size_t> root_label(parent_.size(), npos);
        std::vector<std::size_t> out(parent_.size());
        std::size_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            auto r = find(i);
            if (root_label[r] == npos) root_label[r] = next++;
            out[i] = root_label[r];
        }
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace ditcalc
