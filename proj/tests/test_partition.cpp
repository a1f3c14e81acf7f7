#include <doctest.h>

#include <set>

#include "ditcalc/errors.hpp"
#include "ditcalc/pair_set.hpp"
#include "ditcalc/partition.hpp"

using namespace ditcalc;

namespace {

std::vector<Block> blocks_of(const Partition& p) { return p.blocks(); }

// Oracle for σ ⪯ π straight from the definition: every block of π lies
// inside some block of σ, by set containment.
bool refines_by_containment(const Partition& sigma, const Partition& pi) {
    for (const auto& c : pi.blocks()) {
        bool inside = false;
        for (const auto& b : sigma.blocks()) {
            std::set<std::size_t> bs(b.begin(), b.end());
            bool all = true;
            for (auto e : c) all = all && bs.contains(e);
            inside = inside || all;
        }
        if (!inside) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("blob and discrete") {
    auto u4 = Universe::of_size(4);
    CHECK(blocks_of(blob(u4)) == std::vector<Block>{{0, 1, 2, 3}});
    CHECK(blocks_of(discrete(u4)) == std::vector<Block>{{0}, {1}, {2}, {3}});
    CHECK(dit_set(blob(u4)).is_empty());
    CHECK(dit_set(discrete(u4)).count() == 12);

    auto u1 = Universe::of_size(1);
    CHECK(blob(u1) == discrete(u1));
    CHECK(blocks_of(blob(u1)) == std::vector<Block>{{0}});
}

TEST_CASE("universe construction") {
    CHECK_THROWS_AS(Universe::of_size(0), InvalidUniverse);
    CHECK_THROWS_AS(Universe::with_labels({"a", "b", "a"}), InvalidUniverse);
    auto u = Universe::with_labels({"x", "y"});
    CHECK(u->label(1) == "y");
    CHECK(u->index_of("x") == 0);
    CHECK_FALSE(u->index_of("z"));
    CHECK(Universe::of_size(3)->label(2) == "2");
}

TEST_CASE("partition_from_blocks canonicalizes and validates") {
    auto u = Universe::of_size(4);
    auto p = partition_from_blocks(u, {{2, 3}, {0, 1}});
    CHECK(blocks_of(p) == std::vector<Block>{{0, 1}, {2, 3}});
    CHECK(blocks_of(partition_from_blocks(u, {{3, 1}, {2, 0}})) == std::vector<Block>{{0, 2}, {1, 3}});

    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}, {1, 2, 3}}), OverlapError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}, {2}}), CoverError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}, {2, 3, 4}}), CoverError);
    CHECK_THROWS_AS(partition_from_blocks(u, {{0, 1}, {}, {2, 3}}), EmptyBlockError);
}

TEST_CASE("canonicalizing a canonical partition is the identity") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto u = Universe::of_size(n);
        for (const auto& p : enumerate_partitions(u)) {
            CHECK(Partition::from_block_labels(u, p.block_labels()) == p);
            CHECK(partition_from_blocks(u, p.blocks()) == p);
        }
    }
}

TEST_CASE("refinement") {
    auto u = Universe::of_size(4);
    auto rows = partition_from_blocks(u, {{0, 1}, {2, 3}});
    auto cols = partition_from_blocks(u, {{0, 2}, {1, 3}});
    CHECK_FALSE(is_refinement(rows, cols));
    CHECK_FALSE(is_refinement(cols, rows));
    CHECK(is_refinement(blob(u), rows));
    CHECK(is_refinement(rows, discrete(u)));
    CHECK(is_refinement(rows, rows));
    CHECK_THROWS_AS(is_refinement(rows, blob(Universe::of_size(3))), UniverseMismatch);
}

TEST_CASE("refinement agrees with block containment and dit inclusion, n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto parts = enumerate_partitions(Universe::of_size(n));
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                const bool r = is_refinement(a, b);
                CHECK(r == refines_by_containment(a, b));
                CHECK(r == dit_set(a).is_subset_of(dit_set(b)));
            }
        }
    }
}

TEST_CASE("join and meet on the 2x2 grid") {
    auto u = Universe::of_size(4);
    auto rows = partition_from_blocks(u, {{0, 1}, {2, 3}});
    auto cols = partition_from_blocks(u, {{0, 2}, {1, 3}});
    CHECK(join(rows, cols) == discrete(u));
    CHECK(meet(rows, cols) == blob(u));
    CHECK(join(rows, blob(u)) == rows);
    CHECK(join(rows, rows) == rows);
    CHECK(meet(rows, discrete(u)) == rows);
    CHECK(meet(rows, rows) == rows);
    CHECK_THROWS_AS(join(rows, blob(Universe::of_size(5))), UniverseMismatch);
    CHECK_THROWS_AS(meet(rows, blob(Universe::of_size(5))), UniverseMismatch);
}

TEST_CASE("join and meet are lub and glb, commutative, associative, idempotent (n <= 4)") {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto u = Universe::of_size(n);
        auto parts = enumerate_partitions(u);
        for (const auto& a : parts) {
            CHECK(is_refinement(blob(u), a));
            CHECK(is_refinement(a, discrete(u)));
            CHECK(join(a, a) == a);
            CHECK(meet(a, a) == a);
            for (const auto& b : parts) {
                const auto j = join(a, b);
                const auto m = meet(a, b);
                CHECK(j == join(b, a));
                CHECK(m == meet(b, a));
                CHECK((is_refinement(a, j) && is_refinement(b, j)));
                CHECK((is_refinement(m, a) && is_refinement(m, b)));
                for (const auto& c : parts) {
                    if (is_refinement(a, c) && is_refinement(b, c)) CHECK(is_refinement(j, c));
                    if (is_refinement(c, a) && is_refinement(c, b)) CHECK(is_refinement(c, m));
                    CHECK(join(join(a, b), c) == join(a, join(b, c)));
                    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
                }
            }
        }
    }
}

TEST_CASE("block probabilities are exact") {
    auto u = Universe::of_size(4);
    auto halves = block_probabilities(partition_from_blocks(u, {{0, 1}, {2, 3}}));
    REQUIRE(halves.exact());
    CHECK(*halves.exact() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(halves[0] == 0.5);

    auto quarters = block_probabilities(discrete(u));
    CHECK(*quarters.exact() == std::vector<Rational>(4, Rational(1, 4)));

    auto skewed = block_probabilities(partition_from_blocks(u, {{0}, {1, 2, 3}}));
    CHECK(*skewed.exact() == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    CHECK(skewed[1] == 0.75);
}

TEST_CASE("enumeration yields Bell-many distinct partitions") {
    const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(bell_number(n) == bell[n]);
        auto parts = enumerate_partitions(Universe::of_size(n));
        CHECK(parts.size() == bell[n]);
        std::set<std::vector<std::size_t>> distinct;
        for (const auto& p : parts) distinct.emplace(p.block_labels().begin(), p.block_labels().end());
        CHECK(distinct.size() == parts.size());
    }
    CHECK(bell_number(12) == 4213597);

    auto one = enumerate_partitions(Universe::of_size(1));
    REQUIRE(one.size() == 1);
    CHECK(blocks_of(one[0]) == std::vector<Block>{{0}});

    // Lexicographic restricted-growth order: blob first, discrete last.
    auto three = enumerate_partitions(Universe::of_size(3));
    CHECK(three.front().is_blob());
    CHECK(three.back().is_discrete());
    CHECK(blocks_of(three[1]) == std::vector<Block>{{0, 1}, {2}});
}

TEST_CASE("enumeration guard") {
    CHECK_NOTHROW(PartitionEnumerator(Universe::of_size(12)));
    CHECK_THROWS_AS(PartitionEnumerator(Universe::of_size(13)), TooLargeError);
    CHECK_THROWS_AS(enumerate_partitions(Universe::of_size(13)), TooLargeError);
}
