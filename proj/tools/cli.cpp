#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ditcalc/demo.hpp"
#include "ditcalc/distribution.hpp"
#include "ditcalc/entropy.hpp"
#include "ditcalc/errors.hpp"
#include "ditcalc/io.hpp"
#include "ditcalc/pair_set.hpp"
#include "ditcalc/verify.hpp"

namespace ditcalc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::string num(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

std::string exact(const Rational& r) { return to_string(r) + " (" + num(to_double(r)) + ")"; }

std::string block_list(const Partition& p) {
    std::string out;
    for (const auto& block : p.blocks()) {
        out += "{";
        for (std::size_t k = 0; k < block.size(); ++k) out += (k ? " " : "") + p.universe().label(block[k]);
        out += "}";
    }
    return out;
}

std::string base_name(double base) { return "H(base " + num(base) + ")"; }

struct Options {
    CliConfig config;
    bool dump_dits = false;
    std::string quadratic_path;
    std::string family;
    std::optional<double> param;
    unsigned demo_n = 0;
    std::size_t max_n = 5;
    std::size_t trials = 1000;
    std::size_t dist_n_max = 8;
    std::uint64_t seed = 42;
    std::string mutate;
};

int cmd_entropy(const Options& opt, std::ostream& out) {
    const auto pi = parse_partition(read_file(opt.config.inputs.at(0)));
    const auto report = entropy_report(pi, opt.config.base);
    if (opt.config.json) {
        auto doc = to_json(report, pi);
        doc["partition"] = to_json(pi);
        if (opt.dump_dits) doc["dits"] = to_json(dit_set(pi));
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "universe: " << pi.size() << " elements, " << pi.block_count() << " blocks\n";
    out << "h = " << exact(report.logical) << "\n";
    out << base_name(report.base) << " = " << num(report.shannon) << "\n";
    out << "H_m = " << num(report.block_count) << "\n";
    out << "blocks:\n";
    for (const auto& b : report.per_block) {
        out << "  " << b.block << " {";
        const auto& block = pi.block(b.block);
        for (std::size_t k = 0; k < block.size(); ++k) out << (k ? " " : "") << pi.universe().label(block[k]);
        out << "}  p_B=" << to_string(b.probability) << "  h(B)=" << to_string(b.logical)
            << "  H(B)=" << num(b.shannon) << "  H_m(B)=" << num(b.block_count) << "\n";
    }
    if (opt.dump_dits) out << "dits: " << to_json(dit_set(pi)).dump() << "\n";
    return kExitOk;
}

int cmd_dist(const Options& opt, std::ostream& out) {
    const auto data = parse_distribution_csv(read_file(opt.config.inputs.at(0)));
    const auto& p = data.dist;
    const double base = opt.config.base;
    nlohmann::json doc = {{"labels", data.labels},
                          {"probs", std::vector<double>(p.probs().begin(), p.probs().end())},
                          {"h", logical_entropy_d(p)},
                          {"repeat_rate", repeat_rate(p)},
                          {"numbers_equivalent", numbers_equivalent(p)},
                          {"base", base},
                          {"H", shannon_entropy_d(p, base)},
                          {"H_m", block_count_entropy_d(p)}};
    if (p.exact()) {
        Rational repeat(0);
        for (const auto& r : *p.exact()) repeat += r * r;
        doc["h_exact"] = to_json(Rational(1) - repeat);
    }
    if (!opt.family.empty()) {
        if (!opt.param) throw BadParam("--family needs --param");
        const auto family = parse_entropy_family(opt.family);
        doc["parametric"] = {{"family", std::string(to_string(family))},
                             {"param", *opt.param},
                             {"value", parametric_entropy(p, family, *opt.param)}};
    } else if (opt.param) {
        throw BadParam("--param needs --family");
    }
    if (!opt.quadratic_path.empty()) {
        const auto d = parse_distance_matrix(read_file(opt.quadratic_path));
        doc["quadratic"] = quadratic_entropy(p, d);
    }

    if (opt.config.json) {
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "outcomes: " << p.size() << (data.from_counts ? " (from counts)" : "") << "\n";
    out << "h = ";
    if (doc.contains("h_exact")) {
        out << doc["h_exact"]["num"].get<std::int64_t>() << "/" << doc["h_exact"]["den"].get<std::int64_t>() << " ("
            << num(logical_entropy_d(p)) << ")\n";
    } else {
        out << num(logical_entropy_d(p)) << "\n";
    }
    out << "repeat rate = " << num(repeat_rate(p)) << "\n";
    out << "numbers equivalent = " << num(numbers_equivalent(p)) << "\n";
    out << base_name(base) << " = " << num(shannon_entropy_d(p, base)) << "\n";
    out << "H_m = " << num(block_count_entropy_d(p)) << "\n";
    if (doc.contains("parametric")) {
        out << doc["parametric"]["family"].get<std::string>() << "(" << num(*opt.param)
            << ") = " << num(doc["parametric"]["value"].get<double>()) << "\n";
    }
    if (doc.contains("quadratic")) out << "quadratic entropy = " << num(doc["quadratic"].get<double>()) << "\n";
    return kExitOk;
}

int cmd_compare(const Options& opt, std::ostream& out) {
    const auto pi = parse_partition(read_file(opt.config.inputs.at(0)));
    const auto sigma = parse_partition(read_file(opt.config.inputs.at(1)), pi.universe_ptr());
    const double base = opt.config.base;

    const auto joined = join(pi, sigma);
    const auto met = meet(pi, sigma);
    const auto h_pi = logical_entropy(pi);
    const auto h_sigma = logical_entropy(sigma);
    const auto h_join = logical_entropy(joined);
    const auto m = logical_mutual_info(pi, sigma);
    const double I = shannon_mutual_info(pi, sigma, base);
    const bool independent = are_independent(pi, sigma);
    const auto modular = h_pi + h_sigma - h_join;

    if (opt.config.json) {
        nlohmann::json doc = {{"join", to_json(joined)},
                              {"meet", to_json(met)},
                              {"h_pi", to_json(h_pi)},
                              {"h_sigma", to_json(h_sigma)},
                              {"h_join", to_json(h_join)},
                              {"h_meet", to_json(logical_entropy(met))},
                              {"m", to_json(m)},
                              {"modular_rhs", to_json(modular)},
                              {"base", base},
                              {"H_pi", shannon_entropy(pi, base)},
                              {"H_sigma", shannon_entropy(sigma, base)},
                              {"H_join", shannon_entropy(joined, base)},
                              {"I", I},
                              {"independent", independent}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "join = " << block_list(joined) << "\n";
    out << "meet = " << block_list(met) << "\n";
    out << "h(pi) = " << exact(h_pi) << "\n";
    out << "h(sigma) = " << exact(h_sigma) << "\n";
    out << "h(join) = " << exact(h_join) << "\n";
    out << "h(meet) = " << exact(logical_entropy(met)) << "\n";
    out << "m(pi,sigma) = " << exact(m) << "\n";
    out << "h(pi) + h(sigma) - h(join) = " << exact(modular) << "\n";
    out << "I(pi;sigma) = " << num(I) << " (base " << num(base) << ")\n";
    out << "independent: " << (independent ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_demo(const Options& opt, bool coins, std::ostream& out) {
    const auto trace = coins ? coin_demo(opt.demo_n) : binary_demo(opt.demo_n);
    if (opt.config.json) {
        out << to_json(trace).dump(2) << "\n";
        return kExitOk;
    }
    out << (coins ? "coin weighing" : "binary digits") << ": " << trace.universe_size << " elements, "
        << trace.digits << " digit partitions\n";
    for (const auto& s : trace.steps) {
        out << "  digit " << s.digit << ": +" << s.new_dits << " dits (expected " << s.expected_new_dits
            << "), total " << s.total_dits;
        if (s.dense_new_dits) out << " [dense +" << *s.dense_new_dits << "]";
        out << "\n";
    }
    out << "total dits = " << trace.total_dits << " (expected " << trace.expected_total_dits << ")\n";
    out << "h = " << exact(trace.logical) << "\n";
    out << "H(base " << trace.radix << ") = " << num(trace.shannon) << "\n";
    out << "H_m = " << num(trace.block_count) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    LatticeOps ops;
    if (opt.mutate == "meet") {
        ops.meet = [](const Partition& a, const Partition& b) { return join(a, b); };
    } else if (opt.mutate == "join") {
        ops.join = [](const Partition& a, const Partition& b) { return meet(a, b); };
    } else if (!opt.mutate.empty()) {
        throw BadParam("unknown mutation '" + opt.mutate + "'");
    }

    auto reports = run_exhaustive(opt.max_n, ops);
    std::ranges::move(run_independence({{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}), std::back_inserter(reports));
    std::ranges::move(run_distribution_trials(opt.dist_n_max, opt.trials, opt.seed), std::back_inserter(reports));
    const bool ok = all_passed(reports);

    if (opt.config.json) {
        nlohmann::json doc = {{"passed", ok}, {"reports", nlohmann::json::array()}};
        for (const auto& r : reports) doc["reports"].push_back(to_json(r));
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.name;
            for (const auto& [key, value] : r.parameters) out << " " << key << "=" << value;
            out << " cases=" << r.cases;
            if (!r.passed()) out << " failures=" << r.failure_count;
            out << "\n";
            for (const auto& f : r.failures) {
                std::istringstream lines(f);
                std::string line;
                out << "  counterexample:\n";
                while (std::getline(lines, line)) out << "    " << line << "\n";
            }
        }
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

CliEnvironment environment_from_process() {
    CliEnvironment env;
    if (const char* base = std::getenv("DITCALC_BASE")) env.base = base;
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliEnvironment& env) {
    Options opt;
    double default_base = kDefaultBase;
    if (env.base) {
        try {
            std::size_t pos = 0;
            default_base = std::stod(*env.base, &pos);
            if (pos != env.base->size()) throw std::invalid_argument("trailing characters");
            require_valid_base(default_base);
        } catch (const std::exception&) {
            err << "error: DITCALC_BASE='" << *env.base << "' is not a valid log base (> 1)\n";
            return kExitBadInput;
        }
    }
    opt.config.base = default_base;

    CLI::App app{"Partition logic and logical/Shannon entropy calculator", "ditcalc"};
    app.require_subcommand(1);

    const auto add_base = [&](CLI::App* sub) {
        sub->add_option("--base", opt.config.base, "Logarithm base (> 1); default 2 or $DITCALC_BASE");
        sub->add_flag("--json", opt.config.json, "Emit JSON");
    };

    auto* entropy = app.add_subcommand("entropy", "Entropy report for a partition file");
    entropy->add_option("partition", opt.config.inputs, "Partition file (text or JSON)")->required()->expected(1);
    entropy->add_flag("--dump-dits", opt.dump_dits, "Also print the dit set as index pairs");
    add_base(entropy);

    auto* dist = app.add_subcommand("dist", "Entropies of a distribution given as label,count or label,prob CSV");
    dist->add_option("csv", opt.config.inputs, "CSV file")->required()->expected(1);
    dist->add_option("--quadratic", opt.quadratic_path, "Distance matrix file for quadratic entropy");
    dist->add_option("--family", opt.family, "degree-alpha | havrda-charvat | patil-taillie | tsallis");
    dist->add_option("--param", opt.param, "Parameter of the entropy family");
    add_base(dist);

    auto* compare = app.add_subcommand("compare", "Join, meet and mutual information of two partitions");
    compare->add_option("partitions", opt.config.inputs, "Two partition files over the same labels")
        ->required()
        ->expected(2);
    add_base(compare);

    auto* demo = app.add_subcommand("demo", "Counting-distinctions demos");
    demo->require_subcommand(1);
    auto* binary = demo->add_subcommand("binary", "Join the n binary-digit partitions of a 2^n universe");
    binary->add_option("--n", opt.demo_n, "Number of binary digits (1..16)")->required();
    binary->add_flag("--json", opt.config.json, "Emit JSON");
    auto* coins = demo->add_subcommand("coins", "Coin weighing: the n ternary-digit partitions of 3^n coins");
    coins->add_option("--n", opt.demo_n, "Number of weighings (1..10)")->required();
    coins->add_flag("--json", opt.config.json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Run the brute-force verification harness");
    verify->add_option("--max-n", opt.max_n, "Largest universe for the exhaustive sweep (2..6)");
    verify->add_option("--trials", opt.trials, "Random distribution pairs");
    verify->add_option("--n-max", opt.dist_n_max, "Longest random distribution");
    verify->add_option("--seed", opt.seed, "Seed for the random trials");
    verify->add_flag("--json", opt.config.json, "Emit JSON");
    verify->add_option("--mutate", opt.mutate, "Corrupt join or meet (harness self-test)")->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        require_valid_base(opt.config.base);
        if (entropy->parsed()) {
            opt.config.subcommand = "entropy";
            return cmd_entropy(opt, out);
        }
        if (dist->parsed()) {
            opt.config.subcommand = "dist";
            return cmd_dist(opt, out);
        }
        if (compare->parsed()) {
            opt.config.subcommand = "compare";
            return cmd_compare(opt, out);
        }
        if (binary->parsed()) {
            opt.config.subcommand = "demo binary";
            return cmd_demo(opt, false, out);
        }
        if (coins->parsed()) {
            opt.config.subcommand = "demo coins";
            return cmd_demo(opt, true, out);
        }
        if (verify->parsed()) {
            opt.config.subcommand = "verify";
            return cmd_verify(opt, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << "error: no subcommand\n";
    return kExitBadInput;
}

}  // namespace ditcalc::cli
