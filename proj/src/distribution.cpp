#include "ditcalc/distribution.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ditcalc/errors.hpp"

namespace ditcalc {

ProbDist ProbDist::from_probs(std::vector<double> probs) {
    if (probs.empty()) throw NotNormalizedError("distribution has no entries");
    double sum = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!std::isfinite(probs[i])) throw NotNormalizedError("entry " + std::to_string(i) + " is not finite");
        if (probs[i] < 0) throw NegativeError("entry " + std::to_string(i) + " is negative");
        sum += probs[i];
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw NotNormalizedError("probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    ProbDist d;
    d.probs_ = std::move(probs);
    return d;
}

ProbDist ProbDist::from_counts(std::span<const std::int64_t> counts) {
    if (counts.empty()) throw AllZeroError("no counts given");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw NegativeError("count " + std::to_string(i) + " is negative");
        total += counts[i];
    }
    if (total == 0) throw AllZeroError("all counts are zero");
    std::vector<Rational> exact;
    exact.reserve(counts.size());
    for (auto c : counts) exact.emplace_back(c, total);
    return from_rationals(std::move(exact));
}

ProbDist ProbDist::from_rationals(std::vector<Rational> probs) {
    if (probs.empty()) throw NotNormalizedError("distribution has no entries");
    Rational sum(0);
    for (const auto& r : probs) {
        if (r < Rational(0)) throw NegativeError("negative probability " + to_string(r));
        sum += r;
    }
    if (sum != Rational(1)) throw NotNormalizedError("probabilities sum to " + to_string(sum) + ", not 1");
    ProbDist d;
    d.probs_.reserve(probs.size());
    for (const auto& r : probs) d.probs_.push_back(to_double(r));
    d.exact_ = std::move(probs);
    return d;
}

ProbDist uniform_dist(std::size_t n) {
    std::vector<Rational> probs(n, Rational(1, static_cast<std::int64_t>(n)));
    return ProbDist::from_rationals(std::move(probs));
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    const auto n = rows_.size();
    if (n == 0) throw InvalidDistanceMatrix("distance matrix is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n) {
            throw InvalidDistanceMatrix("row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                                        " entries, expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i][i] != 0) throw InvalidDistanceMatrix("diagonal entry " + std::to_string(i) + " is not zero");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = rows_[i][j];
            if (!std::isfinite(v) || v < 0) {
                throw InvalidDistanceMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is negative or not finite");
            }
            if (v != rows_[j][i]) {
                throw InvalidDistanceMatrix("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") and its transpose differ");
            }
        }
    }
}

DistanceMatrix DistanceMatrix::unit(std::size_t n) {
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 0.0;
    return DistanceMatrix(std::move(rows));
}

namespace {

void require_same_length(const ProbDist& p, const ProbDist& q) {
    if (p.size() != q.size()) {
        throw LengthMismatch("distributions have lengths " + std::to_string(p.size()) + " and " +
                             std::to_string(q.size()));
    }
}

double power_sum(const ProbDist& p, double exponent) {
    double sum = 0;
    for (auto x : p.probs()) {
        if (x > 0) sum += std::pow(x, exponent);
    }
    return sum;
}

double nat_entropy(const ProbDist& p) {
    double sum = 0;
    for (auto x : p.probs()) {
        if (x > 0) sum -= x * std::log(x);
    }
    return sum;
}

}  // namespace

double repeat_rate(const ProbDist& p) {
    double sum = 0;
    for (auto x : p.probs()) sum += x * x;
    return sum;
}

double numbers_equivalent(const ProbDist& p) { return 1.0 / repeat_rate(p); }

double logical_entropy_d(const ProbDist& p) { return 1.0 - repeat_rate(p); }

double shannon_entropy_d(const ProbDist& p, double base) {
    require_valid_base(base);
    return nat_entropy(p) / std::log(base);
}

double block_count_entropy_d(const ProbDist& p) { return std::exp(nat_entropy(p)); }

double logical_cross_entropy(const ProbDist& p, const ProbDist& q) {
    require_same_length(p, q);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * q[i];
    return 1.0 - sum;
}

double shannon_cross_entropy(const ProbDist& p, const ProbDist& q, double base) {
    require_same_length(p, q);
    require_valid_base(base);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (q[i] == 0) throw SupportError("q is zero at index " + std::to_string(i) + " where p is positive");
        sum -= p[i] * std::log(q[i]);
    }
    return sum / std::log(base);
}

double kl_divergence(const ProbDist& p, const ProbDist& q, double base) {
    require_same_length(p, q);
    require_valid_base(base);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (q[i] == 0) throw SupportError("q is zero at index " + std::to_string(i) + " where p is positive");
        sum += p[i] * std::log(p[i] / q[i]);
    }
    return sum / std::log(base);
}

double logical_divergence(const ProbDist& p, const ProbDist& q) {
    require_same_length(p, q);
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = p[i] - q[i];
        sum += diff * diff;
    }
    return sum;
}

double jensen_difference(const ProbDist& p, const ProbDist& q) {
    return logical_cross_entropy(p, q) - 0.5 * (logical_entropy_d(p) + logical_entropy_d(q));
}

ProbDist mix(const ProbDist& p, const ProbDist& q, double weight) {
    require_same_length(p, q);
    if (!(weight >= 0.0 && weight <= 1.0)) throw BadWeight("mixing weight must lie in [0, 1]");
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = weight * p[i] + (1.0 - weight) * q[i];
    return ProbDist::from_probs(std::move(out));
}

EntropyFamily parse_entropy_family(std::string_view name) {
    if (name == "degree-alpha") return EntropyFamily::DegreeAlpha;
    if (name == "havrda-charvat") return EntropyFamily::HavrdaCharvat;
    if (name == "patil-taillie") return EntropyFamily::PatilTaillie;
    if (name == "tsallis") return EntropyFamily::Tsallis;
    throw BadParam("unknown entropy family '" + std::string(name) + "'");
}

std::string_view to_string(EntropyFamily family) {
    switch (family) {
    case EntropyFamily::DegreeAlpha: return "degree-alpha";
    case EntropyFamily::HavrdaCharvat: return "havrda-charvat";
    case EntropyFamily::PatilTaillie: return "patil-taillie";
    case EntropyFamily::Tsallis: return "tsallis";
    }
    return "unknown";
}

double parametric_entropy(const ProbDist& p, EntropyFamily family, double param) {
    if (!std::isfinite(param)) throw BadParam("parameter must be finite");
    switch (family) {
    case EntropyFamily::DegreeAlpha:
        if (!(param > 0) || param == 1) throw BadParam("degree-alpha requires alpha > 0 and alpha != 1");
        return (power_sum(p, param) - 1.0) / (std::exp2(1.0 - param) - 1.0);
    case EntropyFamily::HavrdaCharvat: {
        if (!(param > 0) || param == 1) throw BadParam("havrda-charvat requires alpha > 0 and alpha != 1");
        const double scale = std::exp2(param - 1.0);
        return scale / (scale - 1.0) * (1.0 - power_sum(p, param));
    }
    case EntropyFamily::PatilTaillie:
        if (param == 0) throw BadParam("patil-taillie requires beta != 0");
        return (1.0 - power_sum(p, param + 1.0)) / param;
    case EntropyFamily::Tsallis:
        if (param == 1) throw BadParam("tsallis requires q != 1");
        return (1.0 - power_sum(p, param)) / (param - 1.0);
    }
    throw BadParam("unknown entropy family");
}

double quadratic_entropy(const ProbDist& p, const DistanceMatrix& d) {
    if (p.size() != d.size()) {
        throw DimensionMismatch("distribution has " + std::to_string(p.size()) + " entries but distance matrix is " +
                                std::to_string(d.size()) + "x" + std::to_string(d.size()));
    }
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i != j) sum += d(i, j) * p[i] * p[j];
        }
    }
    return sum;
}

}  // namespace ditcalc
