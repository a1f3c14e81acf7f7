#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ditcalc/entropy.hpp"
#include "ditcalc/prob_dist.hpp"

namespace ditcalc {

/// Symmetric, zero-diagonal, nonnegative matrix of pairwise distances.
class DistanceMatrix {
public:
    /// Throws InvalidDistanceMatrix on a ragged, asymmetric, negative or
    /// nonzero-diagonal matrix.
    explicit DistanceMatrix(std::vector<std::vector<double>> rows);

    /// d_ij = 1 for i != j, d_ii = 0.
    static DistanceMatrix unit(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

private:
    std::vector<std::vector<double>> rows_;
};

/// 1 − Σ p_i².
double logical_entropy_d(const ProbDist& p);

/// Σ p_i²; also the Simpson / Herfindahl index.
double repeat_rate(const ProbDist& p);
/// 1 / repeat_rate(p).
double numbers_equivalent(const ProbDist& p);

/// Σ p_i log_base(1/p_i) with 0·log(1/0) = 0.
double shannon_entropy_d(const ProbDist& p, double base = kDefaultBase);
/// exp(Σ p_i ln(1/p_i)).
double block_count_entropy_d(const ProbDist& p);

/// h(p‖q) = 1 − Σ p_i q_i.
double logical_cross_entropy(const ProbDist& p, const ProbDist& q);

/// H(p‖q) = Σ p_i log_base(1/q_i). Throws SupportError if some q_i = 0 < p_i.
double shannon_cross_entropy(const ProbDist& p, const ProbDist& q, double base = kDefaultBase);
/// D(p‖q) = Σ p_i log_base(p_i/q_i). Throws SupportError if some q_i = 0 < p_i.
double kl_divergence(const ProbDist& p, const ProbDist& q, double base = kDefaultBase);

/// d(p‖q) = Σ (p_i − q_i)².
double logical_divergence(const ProbDist& p, const ProbDist& q);

/// h(p‖q) − ½[h(p) + h(q)].
double jensen_difference(const ProbDist& p, const ProbDist& q);

/// weight·p + (1 − weight)·q. Throws BadWeight outside [0, 1].
ProbDist mix(const ProbDist& p, const ProbDist& q, double weight);

enum class EntropyFamily { DegreeAlpha, HavrdaCharvat, PatilTaillie, Tsallis };

/// Parses "degree-alpha", "havrda-charvat", "patil-taillie", "tsallis".
EntropyFamily parse_entropy_family(std::string_view name);
std::string_view to_string(EntropyFamily family);

/// The closed-form parametric entropies:
///   degree-alpha    (Σ p^α − 1) / (2^{1−α} − 1)          α > 0, α ≠ 1
///   havrda-charvat  2^{α−1} / (2^{α−1} − 1) · (1 − Σ p^α)  α > 0, α ≠ 1
///   patil-taillie   (1 − Σ p^{β+1}) / β                    β ≠ 0
///   tsallis         (1 − Σ p^q) / (q − 1)                  q ≠ 1
/// Sums run over the support of p. Excluded parameters throw BadParam.
double parametric_entropy(const ProbDist& p, EntropyFamily family, double param);

/// Q = Σ_{i≠j} d_ij p_i p_j.
double quadratic_entropy(const ProbDist& p, const DistanceMatrix& d);

}  // namespace ditcalc
