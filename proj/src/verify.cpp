#include "ditcalc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <random>
#include <sstream>

#include "ditcalc/distribution.hpp"
#include "ditcalc/entropy.hpp"
#include "ditcalc/errors.hpp"
#include "ditcalc/io.hpp"
#include "ditcalc/pair_set.hpp"

namespace ditcalc {

void VerificationReport::check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kMaxRecordedFailures) failures.push_back(describe());
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::ranges::all_of(reports, [](const auto& r) { return r.passed(); });
}

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

constexpr double kTol = 1e-12;

bool near(double a, double b, double tol = kTol) { return std::abs(a - b) <= tol; }

std::string show(const Partition& p) { return format_partition_text(p); }

std::string show_pair(const Partition& a, const Partition& b) {
    return "pi:\n" + show(a) + "sigma:\n" + show(b);
}

std::string show_triple(const Partition& a, const Partition& b, const Partition& c) {
    return show_pair(a, b) + "tau:\n" + show(c);
}

std::string show_set(const PairSet& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto [i, j] : s.pairs()) {
        out << (first ? "" : ",") << "(" << i << "," << j << ")";
        first = false;
    }
    out << "} on n=" << s.size();
    return out.str();
}

bool equal_block_sizes(const Partition& p) {
    const auto first = p.block(0).size();
    return std::ranges::all_of(p.blocks(), [&](const Block& b) { return b.size() == first; });
}

// Bundles one named report per check for a fixed parameter setting.
class Checks {
public:
    explicit Checks(Params params) : params_(std::move(params)) {}

    VerificationReport& operator[](const std::string& name) {
        auto [it, inserted] = reports_.try_emplace(name);
        if (inserted) {
            it->second.name = name;
            it->second.parameters = params_;
        }
        return it->second;
    }

    std::vector<VerificationReport> take() {
        std::vector<VerificationReport> out;
        for (auto& [name, report] : reports_) out.push_back(std::move(report));
        return out;
    }

private:
    Params params_;
    std::map<std::string, VerificationReport> reports_;
};

class PartitionIndex {
public:
    explicit PartitionIndex(const std::vector<Partition>& all) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto labels = all[i].block_labels();
            index_.emplace(std::vector<std::size_t>(labels.begin(), labels.end()), i);
        }
    }

    std::size_t size() const { return index_.size(); }

    /// Index of p, or npos when p is not one of the enumerated partitions.
    std::size_t find(const Partition& p) const {
        const auto labels = p.block_labels();
        auto it = index_.find(std::vector<std::size_t>(labels.begin(), labels.end()));
        return it == index_.end() ? npos : it->second;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::map<std::vector<std::size_t>, std::size_t> index_;
};

void check_partition_laws(Checks& checks, const UniversePtr& u, const std::vector<Partition>& parts,
                          const std::vector<PairSet>& dits, const std::vector<PairSet>& indits) {
    const auto n = u->size();
    const auto n64 = static_cast<std::int64_t>(n);
    const auto full = PairSet::full(n);
    const auto bottom = blob(u);
    const auto top = discrete(u);

    for (std::size_t a = 0; a < parts.size(); ++a) {
        const auto& p = parts[a];
        const auto describe = [&] { return show(p); };

        auto reversed = p.blocks();
        std::ranges::reverse(reversed);
        for (auto& b : reversed) std::ranges::reverse(b);
        bool ordered = true;
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            ordered = ordered && std::ranges::is_sorted(p.block(b));
            if (b > 0) ordered = ordered && p.block(b - 1).front() < p.block(b).front();
        }
        checks["canonical_form"].check(ordered && Partition::from_block_labels(u, p.block_labels()) == p &&
                                           partition_from_blocks(u, reversed) == p,
                                       describe);

        checks["refinement_bounds"].check(is_refinement(bottom, p) && is_refinement(p, top), describe);

        const auto& dit = dits[a];
        const auto& indit = indits[a];
        checks["dit_indit_split"].check((dit | indit) == full && (dit & indit).is_empty() && dit.is_symmetric() &&
                                            dit.is_irreflexive() && indit.is_reflexive() && indit.is_symmetric() &&
                                            indit.is_transitive() && is_closed(indit) && is_open(dit),
                                        describe);

        checks["open_set_roundtrip"].check(partition_from_open_set(u, dit) == p, describe);

        // h three ways: row-counted dits, dense dit matrix, 1 − Σ p_B².
        const auto h = logical_entropy(p);
        Rational repeat(0);
        for (const auto& b : p.blocks()) {
            const Rational pb(static_cast<std::int64_t>(b.size()), n64);
            repeat += pb * pb;
        }
        const auto probs = block_probabilities(p);
        checks["logical_entropy_forms"].check(
            h == Rational(1) - repeat && h == Rational(static_cast<std::int64_t>(dit.count()), n64 * n64) &&
                near(to_double(h), logical_entropy_d(probs)),
            describe);

        const auto k = static_cast<std::int64_t>(p.block_count());
        const bool equiprobable = equal_block_sizes(p);
        const Rational h_max = Rational(1) - Rational(1, k);
        checks["logical_entropy_bound"].check(h <= h_max && ((h == h_max) == equiprobable), describe);

        const double H2 = shannon_entropy(p, 2.0);
        const double H3 = shannon_entropy(p, 3.0);
        const double Hm = block_count_entropy(p);
        const double log_k = std::log2(static_cast<double>(k));
        checks["shannon_bound"].check(H2 <= log_k + kTol && (near(H2, log_k) == equiprobable), describe);
        checks["block_count_bound"].check(
            Hm <= static_cast<double>(k) + kTol && (near(Hm, static_cast<double>(k)) == equiprobable), describe);
        checks["block_count_shannon"].check(near(Hm, std::exp2(H2)) && near(Hm, std::pow(3.0, H3)), describe);

        const auto report = entropy_report(p, 2.0);
        for (const auto& be : report.per_block) {
            const double hb = to_double(be.logical);
            checks["block_entropy_relations"].check(
                be.logical == Rational(1) - be.probability && near(hb, 1.0 - 1.0 / be.block_count) &&
                    near(hb, 1.0 - std::exp2(-be.shannon)) && near(h_from_H(be.shannon, 2.0), hb) &&
                    near(H_from_h(hb, 2.0), be.shannon),
                describe);
        }
    }
}

void check_pair_laws(Checks& checks, const std::vector<Partition>& parts, const std::vector<PairSet>& dits,
                     const std::vector<PairSet>& indits, const PartitionIndex& index, const LatticeOps& ops) {
    const auto count = parts.size();
    const auto n = parts.front().size();
    const auto full = PairSet::full(n);

    std::vector<std::vector<bool>> refines(count, std::vector<bool>(count));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) refines[a][b] = is_refinement(parts[a], parts[b]);
    }

    constexpr auto npos = PartitionIndex::npos;
    std::vector<std::vector<std::size_t>> join_of(count, std::vector<std::size_t>(count));
    std::vector<std::vector<std::size_t>> meet_of(count, std::vector<std::size_t>(count));

    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            const auto& pi = parts[a];
            const auto& sigma = parts[b];
            const auto describe = [&] { return show_pair(pi, sigma); };

            const auto joined = ops.join(pi, sigma);
            const auto met = ops.meet(pi, sigma);
            join_of[a][b] = index.find(joined);
            meet_of[a][b] = index.find(met);

            checks["refinement_dit_inclusion"].check(refines[a][b] == dits[a].is_subset_of(dits[b]), describe);
            checks["join_dit_union"].check(dit_set(joined) == (dits[a] | dits[b]), describe);
            checks["meet_dit_interior"].check(dit_set(met) == interior(dits[a] & dits[b]), describe);

            const auto mut = mutual_information_set(pi, sigma);
            checks["mut_nonempty"].check(pi.is_blob() || sigma.is_blob() || !mut.is_empty(), describe);
            checks["mut_structural"].check(mutual_information_set_structural(pi, sigma) == mut,
                                                        describe);

            checks["equivalence_union_contrapositive"].check(
                (indits[a] | indits[b]) != full || indits[a] == full || indits[b] == full, describe);

            const auto h_pi = logical_entropy(pi);
            const auto h_sigma = logical_entropy(sigma);
            const auto h_join = logical_entropy(joined);
            const auto h_meet = logical_entropy(met);
            checks["modular_law"].check(logical_mutual_info(pi, sigma) == h_pi + h_sigma - h_join, describe);
            checks["submodular_inequality"].check(h_meet + h_join <= h_pi + h_sigma, describe);

            const double I = shannon_mutual_info(pi, sigma, 2.0);
            const double expansion = shannon_entropy(pi) + shannon_entropy(sigma) - shannon_entropy(joined);
            const bool independent = are_independent(pi, sigma);
            checks["shannon_mutual_info_expansion"].check(
                near(I, expansion) && I >= -kTol && (!independent || std::abs(I) <= kTol), describe);

            // Upper and lower bounds, then least/greatest among them.
            const auto j = join_of[a][b];
            const auto m = meet_of[a][b];
            bool bounds = j != npos && m != npos && refines[a][j] && refines[b][j] && refines[m][a] && refines[m][b];
            std::size_t witness = npos;
            for (std::size_t t = 0; bounds && t < count; ++t) {
                if (refines[a][t] && refines[b][t] && !refines[j][t]) witness = t;
                if (refines[t][a] && refines[t][b] && !refines[t][m]) witness = t;
                if (witness != npos) bounds = false;
            }
            checks["lattice_lub_glb"].check(bounds, [&] {
                return witness == npos ? describe() : show_triple(pi, sigma, parts[witness]);
            });
        }
    }

    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            const auto describe = [&] { return show_pair(parts[a], parts[b]); };
            const auto j = join_of[a][b];
            const auto m = meet_of[a][b];
            bool ok = j != npos && m != npos && j == join_of[b][a] && m == meet_of[b][a] && join_of[a][a] == a &&
                      meet_of[a][a] == a && join_of[a][m] == a && meet_of[a][j] == a;
            checks["lattice_algebra"].check(ok, describe);
        }
    }

    // Associativity over all triples; sizes above 5 are skipped for time.
    if (n > 5) return;
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            for (std::size_t c = 0; c < count; ++c) {
                const auto ab = join_of[a][b];
                const auto bc = join_of[b][c];
                const auto mab = meet_of[a][b];
                const auto mbc = meet_of[b][c];
                bool ok = ab != npos && bc != npos && mab != npos && mbc != npos && join_of[ab][c] == join_of[a][bc] &&
                          meet_of[mab][c] == meet_of[a][mbc];
                checks["lattice_associativity"].check(ok, [&] { return show_triple(parts[a], parts[b], parts[c]); });
            }
        }
    }
}

void check_closure_operator(Checks& checks, std::size_t n) {
    std::vector<PairSet> sets;
    if (n <= 3) {
        const std::size_t bits = n * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            PairSet s(n);
            for (std::size_t k = 0; k < bits; ++k) {
                if ((mask >> k) & 1U) s.insert(k / n, k % n);
            }
            sets.push_back(std::move(s));
        }
    } else {
        std::mt19937_64 rng(0x5eed0000 + n);
        for (int k = 0; k < 256; ++k) {
            PairSet s(n);
            const auto density = 1 + rng() % 4;  // roughly 1/8 .. 4/8 of all pairs
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (rng() % 8 < density) s.insert(i, j);
                }
            }
            sets.push_back(std::move(s));
        }
    }

    std::vector<PairSet> closed;
    std::vector<PairSet> opened;
    for (const auto& s : sets) {
        const auto c = closure(s);
        const auto i = interior(s);
        const auto describe = [&] { return show_set(s); };
        checks["closure_operator"].check(s.is_subset_of(c) && closure(c) == c && c == closure_warshall(s) &&
                                             c.is_reflexive() && c.is_symmetric() && c.is_transitive() &&
                                             is_closed(s) == (s == c),
                                         describe);
        checks["interior_operator"].check(i.is_subset_of(s) && interior(i) == i && is_open(i) &&
                                              is_open(s) == is_closed(s.complement()) && is_open(s) == (s == i),
                                          describe);
        closed.push_back(c);
        opened.push_back(i);
    }

    const auto monotone = [&](std::size_t x, std::size_t y) {
        if (!sets[x].is_subset_of(sets[y])) return;
        checks["closure_interior_monotone"].check(closed[x].is_subset_of(closed[y]) && opened[x].is_subset_of(opened[y]),
                                                  [&] { return show_set(sets[x]) + " within " + show_set(sets[y]); });
    };
    if (n <= 3) {
        for (std::size_t x = 0; x < sets.size(); ++x) {
            for (std::size_t y = 0; y < sets.size(); ++y) monotone(x, y);
        }
    } else {
        // Pair each sample with its union with the next one.
        const auto base = sets.size();
        for (std::size_t x = 0; x < base; ++x) {
            auto bigger = sets[x] | sets[(x + 1) % base];
            sets.push_back(bigger);
            closed.push_back(closure(bigger));
            opened.push_back(interior(bigger));
            monotone(x, sets.size() - 1);
        }
    }

    if (n >= 3) {
        // Two equivalence relations with one two-element block each; their
        // union is not transitive.
        const auto e1 = closure(PairSet::from_pairs(n, std::vector<Pair>{{0, 1}}));
        const auto e2 = closure(PairSet::from_pairs(n, std::vector<Pair>{{1, 2}}));
        checks["closure_not_topological"].check(is_closed(e1) && is_closed(e2) && !is_closed(e1 | e2),
                                                [&] { return show_set(e1) + " and " + show_set(e2); });
    }
}

std::vector<VerificationReport> exhaustive_for_size(std::size_t n, const LatticeOps& ops) {
    Checks checks({{"n", static_cast<std::int64_t>(n)}});
    const auto u = Universe::of_size(n);
    const auto parts = enumerate_partitions(u);
    const PartitionIndex index(parts);
    checks["enumeration_count"].check(parts.size() == bell_number(n) && index.size() == parts.size(), [&] {
        return "enumerated " + std::to_string(parts.size()) + " partitions (" + std::to_string(index.size()) +
               " distinct), expected " + std::to_string(bell_number(n));
    });

    std::vector<PairSet> dits;
    std::vector<PairSet> indits;
    for (const auto& p : parts) {
        dits.push_back(dit_set(p));
        indits.push_back(indit_set(p));
    }

    check_partition_laws(checks, u, parts, dits, indits);
    check_pair_laws(checks, parts, dits, indits, index, ops);
    check_closure_operator(checks, n);
    return checks.take();
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::ranges::stable_sort(reports, [](const auto& a, const auto& b) {
        return std::tie(a.name, a.parameters) < std::tie(b.name, b.parameters);
    });
}

}  // namespace

std::vector<VerificationReport> run_exhaustive(std::size_t max_n, const LatticeOps& ops) {
    if (max_n < 2) throw RangeError("exhaustive verification needs max_n >= 2");
    if (max_n > kMaxExhaustiveSize) {
        throw TooLargeError("exhaustive verification is limited to max_n <= " + std::to_string(kMaxExhaustiveSize));
    }
    std::vector<std::future<std::vector<VerificationReport>>> jobs;
    for (std::size_t n = 1; n <= max_n; ++n) {
        jobs.push_back(std::async(std::launch::async, [n, &ops] { return exhaustive_for_size(n, ops); }));
    }
    std::vector<VerificationReport> reports;
    for (auto& job : jobs) {
        auto part = job.get();
        std::ranges::move(part, std::back_inserter(reports));
    }
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> run_independence(const std::vector<std::pair<std::size_t, std::size_t>>& dims) {
    std::vector<VerificationReport> reports;
    for (auto [a, b] : dims) {
        if (a < 2 || b < 2) throw RangeError("grid dimensions must be at least 2");
        if (a * b > 64) throw TooLargeError("grid universes are limited to 64 elements");
    }
    for (auto [a, b] : dims) {
        Checks checks({{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}});
        const auto u = Universe::of_size(a * b);
        std::vector<std::size_t> row_labels(a * b);
        std::vector<std::size_t> col_labels(a * b);
        for (std::size_t x = 0; x < a * b; ++x) {
            row_labels[x] = x / b;
            col_labels[x] = x % b;
        }
        const auto rows = Partition::from_block_labels(u, row_labels);
        const auto cols = Partition::from_block_labels(u, col_labels);
        const auto joined = join(rows, cols);
        const auto describe = [&] { return show_pair(rows, cols); };

        auto& grid = checks["independence_product_grid"];
        const auto h_rows = logical_entropy(rows);
        const auto h_cols = logical_entropy(cols);
        const auto h_join = logical_entropy(joined);
        grid.check(are_independent(rows, cols) && are_independent(cols, rows), describe);
        grid.check(are_independent(rows, blob(u)), describe);
        grid.check(logical_mutual_info(rows, cols) == h_rows * h_cols, describe);
        const double I = shannon_mutual_info(rows, cols, 2.0);
        grid.check(I <= kTol && I >= -kTol, describe);
        grid.check(h_join == Rational(1) - (Rational(1) - h_rows) * (Rational(1) - h_cols), describe);
        grid.check(near(shannon_entropy(joined), shannon_entropy(rows) + shannon_entropy(cols)), describe);
        grid.check(near(block_count_entropy(joined), block_count_entropy(rows) * block_count_entropy(cols)), describe);

        // Rows against themselves are dependent, and m = h·h must fail.
        auto& control = checks["independence_negative_control"];
        control.check(!are_independent(rows, rows), [&] { return show_pair(rows, rows); });
        control.check(logical_mutual_info(rows, rows) != h_rows * h_rows, [&] { return show_pair(rows, rows); });

        std::ranges::move(checks.take(), std::back_inserter(reports));
    }
    sort_reports(reports);
    return reports;
}

namespace {

class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1].
    double unit() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }
    std::size_t length(std::size_t n_max) { return 1 + static_cast<std::size_t>(engine_() % n_max); }

    ProbDist dist(std::size_t n) {
        std::vector<double> draws(n);
        double sum = 0;
        for (auto& x : draws) sum += (x = unit());
        for (auto& x : draws) x /= sum;
        return ProbDist::from_probs(std::move(draws));
    }

private:
    std::mt19937_64 engine_;
};

std::string show_dist(const ProbDist& p) {
    std::ostringstream out;
    out.precision(17);
    out << "(";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
    out << ")";
    return out.str();
}

}  // namespace

std::vector<VerificationReport> run_distribution_trials(std::size_t n_max, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw RangeError("distribution trials need trials >= 1");
    if (n_max < 1) throw RangeError("distribution trials need n_max >= 1");
    Checks checks({{"n_max", static_cast<std::int64_t>(n_max)},
                   {"trials", static_cast<std::int64_t>(trials)},
                   {"seed", static_cast<std::int64_t>(seed)}});
    TrialRng rng(seed);

    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = rng.length(n_max);
        const auto p = rng.dist(n);
        const auto q = rng.dist(n);
        const double lambda = rng.unit();
        const auto describe = [&] { return "p=" + show_dist(p) + " q=" + show_dist(q); };

        const double hp = logical_entropy_d(p);
        const double hq = logical_entropy_d(q);
        const double hpq = logical_cross_entropy(p, q);
        const double d = logical_divergence(p, q);
        double max_diff = 0;
        for (std::size_t i = 0; i < n; ++i) max_diff = std::max(max_diff, std::abs(p[i] - q[i]));

        checks["logical_divergence_nonnegative"].check(d >= 0 && logical_divergence(p, p) == 0, describe);
        checks["logical_divergence_zero_iff_equal"].check(
            (max_diff <= 1e-9) ? d <= kTol : d > 0, describe);
        checks["logical_information_inequality"].check(near(d, 2 * hpq - hp - hq), describe);
        const auto half = mix(p, q, 0.5);
        checks["mixing_identity"].check(near(d, 4 * (logical_entropy_d(half) - 0.5 * (hp + hq))) &&
                                            near(logical_entropy_d(half), hpq / 2 + (hp + hq) / 4) &&
                                            near(jensen_difference(p, q), d / 2),
                                        describe);
        checks["logical_entropy_concavity"].check(
            logical_entropy_d(mix(p, q, lambda)) >= lambda * hp + (1 - lambda) * hq - kTol, describe);
        checks["cross_entropy_symmetry"].check(hpq == logical_cross_entropy(q, p) && near(logical_cross_entropy(p, p), hp),
                                               describe);

        const double D = kl_divergence(p, q, 2.0);
        checks["kl_information_inequality"].check(
            D >= -kTol && kl_divergence(p, p, 2.0) <= kTol && kl_divergence(p, p, 2.0) >= -kTol &&
                near(D, shannon_cross_entropy(p, q, 2.0) - shannon_entropy_d(p, 2.0)),
            describe);

        const auto uniform = uniform_dist(n);
        const double max_h = 1.0 - 1.0 / static_cast<double>(n);
        checks["uniform_cross_entropy"].check(near(logical_cross_entropy(uniform, q), max_h) &&
                                                  near(logical_divergence(uniform, q), max_h - hq),
                                              describe);
        checks["uniform_maximizes_logical_entropy"].check(hq <= max_h + kTol && near(logical_entropy_d(uniform), max_h),
                                                          describe);

        checks["repeat_rate_complement"].check(near(repeat_rate(p), 1 - hp), describe);
        checks["block_count_distribution"].check(
            near(block_count_entropy_d(p), std::exp2(shannon_entropy_d(p, 2.0))) &&
                near(block_count_entropy_d(p), std::pow(10.0, shannon_entropy_d(p, 10.0))),
            describe);

        checks["parametric_reductions"].check(
            near(parametric_entropy(p, EntropyFamily::Tsallis, 2.0), hp) &&
                near(parametric_entropy(p, EntropyFamily::PatilTaillie, 1.0), hp) &&
                near(parametric_entropy(p, EntropyFamily::DegreeAlpha, 2.0), 2 * hp) &&
                near(parametric_entropy(p, EntropyFamily::HavrdaCharvat, 2.0), 2 * hp) &&
                near(quadratic_entropy(p, DistanceMatrix::unit(n)), hp),
            describe);
    }
    return checks.take();
}

}  // namespace ditcalc
