#include <doctest.h>

#include <cmath>
#include <random>

#include "ditcalc/distribution.hpp"
#include "ditcalc/errors.hpp"

using namespace ditcalc;

namespace {

constexpr double kTol = 1e-12;

ProbDist P(std::vector<double> v) { return dist_from_probs(std::move(v)); }

ProbDist random_dist(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.001, 1.0);
    std::vector<double> v(n);
    double sum = 0;
    for (auto& x : v) sum += (x = unit(rng));
    for (auto& x : v) x /= sum;
    return P(v);
}

}  // namespace

TEST_CASE("construction") {
    const std::vector<std::int64_t> ones{1, 1, 1, 1};
    auto u = dist_from_counts(ones);
    CHECK(std::vector<double>(u.probs().begin(), u.probs().end()) == std::vector<double>(4, 0.25));
    CHECK(*u.exact() == std::vector<Rational>(4, Rational(1, 4)));

    const std::vector<std::int64_t> three_one{3, 1};
    auto d = dist_from_counts(three_one);
    CHECK(d[0] == 0.75);
    CHECK(d[1] == 0.25);

    CHECK_THROWS_AS(P({0.5, 0.6}), NotNormalizedError);
    CHECK_THROWS_AS(P({1.5, -0.5}), NegativeError);
    CHECK_THROWS_AS(P({}), NotNormalizedError);
    const std::vector<std::int64_t> zeros{0, 0};
    CHECK_THROWS_AS(dist_from_counts(zeros), AllZeroError);
    const std::vector<std::int64_t> negative{2, -1};
    CHECK_THROWS_AS(dist_from_counts(negative), NegativeError);
    CHECK_NOTHROW(P({0.5, 0.5 + 5e-10}));
}

TEST_CASE("logical entropy and repeat rate") {
    CHECK(logical_entropy_d(P({0.5, 0.5})) == 0.5);
    CHECK(logical_entropy_d(P({1, 0})) == 0.0);
    for (double p : {0.1, 0.25, 0.7}) CHECK(std::abs(logical_entropy_d(P({p, 1 - p})) - 2 * p * (1 - p)) <= kTol);

    for (std::size_t n = 1; n <= 8; ++n) {
        auto u = uniform_dist(n);
        CHECK(std::abs(repeat_rate(u) - 1.0 / n) <= kTol);
        CHECK(std::abs(numbers_equivalent(u) - n) <= 1e-9);
    }
    CHECK(repeat_rate(P({1, 0, 0})) == 1.0);
    CHECK(repeat_rate(P({0.75, 0.25})) == 0.625);
}

TEST_CASE("Shannon and block-count entropy of distributions") {
    CHECK(shannon_entropy_d(P({0.5, 0.5}), 2) == doctest::Approx(1.0).epsilon(kTol));
    CHECK(shannon_entropy_d(P({1, 0})) == 0.0);
    CHECK(block_count_entropy_d(P({0.5, 0.5})) == doctest::Approx(2.0).epsilon(kTol));
    CHECK(block_count_entropy_d(P({1, 0})) == 1.0);
    CHECK_THROWS_AS(shannon_entropy_d(P({1}), 1), BadBase);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        auto p = random_dist(rng, 1 + rng() % 8);
        for (double base : {2.0, 3.0, std::exp(1.0), 10.0}) {
            CHECK(std::abs(block_count_entropy_d(p) - std::pow(base, shannon_entropy_d(p, base))) <= kTol);
        }
    }
}

TEST_CASE("logical cross entropy") {
    auto p = P({0.2, 0.3, 0.5});
    auto q = P({0.6, 0.1, 0.3});
    CHECK(logical_cross_entropy(p, p) == doctest::Approx(logical_entropy_d(p)).epsilon(kTol));
    CHECK(logical_cross_entropy(p, q) == logical_cross_entropy(q, p));
    CHECK(std::abs(logical_cross_entropy(uniform_dist(3), q) - 2.0 / 3.0) <= kTol);
    CHECK(logical_cross_entropy(P({1, 0}), P({0, 1})) == 1.0);
    CHECK_THROWS_AS(logical_cross_entropy(p, P({0.5, 0.5})), LengthMismatch);
}

TEST_CASE("KL divergence and Shannon cross entropy") {
    auto p = P({0.5, 0.5});
    auto q = P({0.25, 0.75});
    CHECK(kl_divergence(p, p) == 0.0);
    // 1/2·log2(2) + 1/2·log2(2/3), evaluated independently at 40 digits.
    CHECK(std::abs(kl_divergence(p, q, 2) - 0.2075187496394219092731305280260917456201) <= kTol);
    CHECK(std::abs(kl_divergence(p, q, std::exp(1.0)) - 0.1438410362258904637196095029969137157518) <= kTol);
    CHECK(std::abs(kl_divergence(p, q) - (shannon_cross_entropy(p, q) - shannon_entropy_d(p))) <= kTol);
    CHECK_THROWS_AS(kl_divergence(P({1, 0}), P({0, 1})), SupportError);
    CHECK_THROWS_AS(shannon_cross_entropy(P({1, 0}), P({0, 1})), SupportError);
    CHECK_NOTHROW(kl_divergence(P({0, 1}), P({0.5, 0.5})));
    CHECK_THROWS_AS(kl_divergence(p, P({1}), 2), LengthMismatch);
}

TEST_CASE("logical divergence") {
    auto p = P({0.2, 0.3, 0.5});
    auto q = P({0.6, 0.1, 0.3});
    CHECK(logical_divergence(p, p) == 0.0);
    CHECK(logical_divergence(P({1, 0}), P({0, 1})) == 2.0);
    CHECK(std::abs(logical_divergence(uniform_dist(3), q) - (2.0 / 3.0 - logical_entropy_d(q))) <= kTol);
    CHECK(std::abs(logical_divergence(p, q) -
                   (2 * logical_cross_entropy(p, q) - logical_entropy_d(p) - logical_entropy_d(q))) <= kTol);
    CHECK_THROWS_AS(logical_divergence(p, P({1})), LengthMismatch);
}

TEST_CASE("mixing and the Jensen difference") {
    auto p = P({0.2, 0.3, 0.5});
    auto q = P({0.6, 0.1, 0.3});
    CHECK(jensen_difference(p, p) == doctest::Approx(0.0));
    CHECK(std::abs(jensen_difference(p, q) - logical_divergence(p, q) / 2) <= kTol);
    auto half = mix(p, q, 0.5);
    const double hp = logical_entropy_d(p);
    const double hq = logical_entropy_d(q);
    CHECK(std::abs(logical_entropy_d(half) - (logical_cross_entropy(p, q) / 2 + (hp + hq) / 4)) <= kTol);
    CHECK(std::abs(logical_divergence(p, q) - 4 * (logical_entropy_d(half) - (hp + hq) / 2)) <= kTol);
    CHECK(mix(p, q, 1.0) == p);
    CHECK(mix(p, q, 0.0) == q);
    CHECK_THROWS_AS(mix(p, q, 1.5), BadWeight);
    CHECK_THROWS_AS(mix(p, q, -0.1), BadWeight);
    CHECK_THROWS_AS(mix(p, P({1}), 0.5), LengthMismatch);
}

TEST_CASE("random distribution invariants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
        const auto n = 1 + rng() % 8;
        auto p = random_dist(rng, n);
        auto q = random_dist(rng, n);
        const double d = logical_divergence(p, q);
        CHECK(d >= 0);
        CHECK(std::abs(d - (2 * logical_cross_entropy(p, q) - logical_entropy_d(p) - logical_entropy_d(q))) <= kTol);
        CHECK(kl_divergence(p, q) >= -kTol);
        CHECK(logical_entropy_d(q) <= 1.0 - 1.0 / n + kTol);
        const double lambda = unit(rng);
        CHECK(logical_entropy_d(mix(p, q, lambda)) >=
              lambda * logical_entropy_d(p) + (1 - lambda) * logical_entropy_d(q) - kTol);
    }
}

TEST_CASE("parametric entropies") {
    auto p = P({0.1, 0.2, 0.3, 0.4});
    const double h = logical_entropy_d(p);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::Tsallis, 2) - h) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::PatilTaillie, 1) - h) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::DegreeAlpha, 2) - 2 * h) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::HavrdaCharvat, 2) - 2 * h) <= kTol);

    // Closed forms at a non-special parameter: Σp³ = 0.001+0.008+0.027+0.064 = 0.1.
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::Tsallis, 3) - 0.45) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::PatilTaillie, 2) - 0.45) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::DegreeAlpha, 3) - (0.1 - 1) / (0.25 - 1)) <= kTol);
    CHECK(std::abs(parametric_entropy(p, EntropyFamily::HavrdaCharvat, 3) - 4.0 / 3.0 * 0.9) <= kTol);

    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::DegreeAlpha, 1), BadParam);
    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::DegreeAlpha, 0), BadParam);
    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::HavrdaCharvat, 1), BadParam);
    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::HavrdaCharvat, -1), BadParam);
    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::PatilTaillie, 0), BadParam);
    CHECK_THROWS_AS(parametric_entropy(p, EntropyFamily::Tsallis, 1), BadParam);
    CHECK_NOTHROW(parametric_entropy(p, EntropyFamily::Tsallis, -1));

    CHECK(parse_entropy_family("havrda-charvat") == EntropyFamily::HavrdaCharvat);
    CHECK(to_string(EntropyFamily::PatilTaillie) == "patil-taillie");
    CHECK_THROWS_AS(parse_entropy_family("renyi"), BadParam);
}

TEST_CASE("quadratic entropy") {
    auto p = P({0.1, 0.2, 0.3, 0.4});
    CHECK(std::abs(quadratic_entropy(p, DistanceMatrix::unit(4)) - logical_entropy_d(p)) <= kTol);
    CHECK(quadratic_entropy(p, DistanceMatrix({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})) == 0.0);
    CHECK(quadratic_entropy(P({0.5, 0.5}), DistanceMatrix({{0, 3}, {3, 0}})) == 1.5);
    CHECK_THROWS_AS(quadratic_entropy(p, DistanceMatrix::unit(3)), DimensionMismatch);
    CHECK_THROWS_AS(DistanceMatrix({{0, 1}, {2, 0}}), InvalidDistanceMatrix);
    CHECK_THROWS_AS(DistanceMatrix({{1, 1}, {1, 0}}), InvalidDistanceMatrix);
    CHECK_THROWS_AS(DistanceMatrix({{0, -1}, {-1, 0}}), InvalidDistanceMatrix);
    CHECK_THROWS_AS(DistanceMatrix({{0, 1}, {1}}), InvalidDistanceMatrix);
}
