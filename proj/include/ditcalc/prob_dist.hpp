#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ditcalc/rational.hpp"

namespace ditcalc {

/// Tolerance on sum(p) - 1 accepted when constructing from probabilities.
inline constexpr double kNormalizationTolerance = 1e-9;

/// A finite probability vector. Entries are nonnegative and sum to one.
/// Distributions built from counts or exact rationals also keep the exact
/// values.
class ProbDist {
public:
    static ProbDist from_probs(std::vector<double> probs);
    static ProbDist from_counts(std::span<const std::int64_t> counts);
    static ProbDist from_rationals(std::vector<Rational> probs);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::span<const double> probs() const { return probs_; }
    const std::optional<std::vector<Rational>>& exact() const { return exact_; }

    bool operator==(const ProbDist& other) const { return probs_ == other.probs_; }

private:
    ProbDist() = default;

    std::vector<double> probs_;
    std::optional<std::vector<Rational>> exact_;
};

inline ProbDist dist_from_probs(std::vector<double> probs) { return ProbDist::from_probs(std::move(probs)); }
inline ProbDist dist_from_counts(std::span<const std::int64_t> counts) { return ProbDist::from_counts(counts); }

/// Uniform distribution on n outcomes, exact.
ProbDist uniform_dist(std::size_t n);

}  // namespace ditcalc
