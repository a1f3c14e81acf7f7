#include "ditcalc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ditcalc/errors.hpp"

namespace ditcalc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

std::vector<std::string> split_whitespace(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

struct RawBlock {
    std::vector<std::string> labels;
    std::size_t line = 0;
};

// Shared tail of both partition formats: map labels onto a universe and
// build the partition.
Partition assemble(const std::vector<RawBlock>& raw, UniversePtr universe) {
    std::map<std::string, std::size_t> seen_on_line;
    std::vector<std::string> order;
    for (const auto& block : raw) {
        for (const auto& label : block.labels) {
            auto [it, inserted] = seen_on_line.try_emplace(label, block.line);
            if (!inserted) {
                if (block.line == 0) throw ParseError(0, "label '" + label + "' appears more than once");
                throw ParseError(block.line, "label '" + label + "' appears more than once (first on line " +
                                                 std::to_string(it->second) + ")");
            }
            order.push_back(label);
        }
    }
    if (order.empty()) throw ParseError(0, "partition has no blocks");

    if (!universe) {
        universe = Universe::with_labels(order);
    } else {
        for (const auto& block : raw) {
            for (const auto& label : block.labels) {
                if (!universe->index_of(label)) {
                    throw UniverseMismatch("label '" + label + "' is not in the universe");
                }
            }
        }
        if (order.size() != universe->size()) {
            for (std::size_t i = 0; i < universe->size(); ++i) {
                if (!seen_on_line.contains(universe->label(i))) {
                    throw UniverseMismatch("universe label '" + universe->label(i) + "' is missing");
                }
            }
        }
    }

    std::vector<Block> blocks;
    for (const auto& block : raw) {
        Block b;
        for (const auto& label : block.labels) b.push_back(*universe->index_of(label));
        blocks.push_back(std::move(b));
    }
    return partition_from_blocks(universe, blocks);
}

std::string json_label(const nlohmann::json& v, std::size_t line_hint) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ParseError(line_hint, "labels must be strings or integers, got " + v.dump());
}

}  // namespace

Partition parse_partition_text(std::string_view text, const UniversePtr& universe) {
    std::vector<RawBlock> raw;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        raw.push_back({split_whitespace(line), i + 1});
    }
    return assemble(raw, universe);
}

Partition parse_partition_json(std::string_view text, const UniversePtr& universe) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array()) {
        throw ParseError(0, "JSON partition needs a \"blocks\" array");
    }

    UniversePtr target = universe;
    if (doc.contains("universe")) {
        if (!doc["universe"].is_array()) throw ParseError(0, "\"universe\" must be an array");
        std::vector<std::string> labels;
        for (const auto& v : doc["universe"]) labels.push_back(json_label(v, 0));
        UniversePtr declared;
        try {
            declared = Universe::with_labels(labels);
        } catch (const InvalidUniverse& e) {
            throw ParseError(0, e.what());
        }
        if (!target) {
            target = declared;
        } else {
            auto a = labels;
            auto b = target->labels();
            if (b.empty()) {
                for (std::size_t i = 0; i < target->size(); ++i) b.push_back(target->label(i));
            }
            std::ranges::sort(a);
            std::ranges::sort(b);
            if (a != b) throw UniverseMismatch("declared universe differs from the expected one");
        }
    }

    std::vector<RawBlock> raw;
    for (const auto& block : doc["blocks"]) {
        if (!block.is_array()) throw ParseError(0, "each block must be an array of labels");
        RawBlock rb;
        for (const auto& v : block) rb.labels.push_back(json_label(v, 0));
        if (rb.labels.empty()) throw EmptyBlockError("block " + std::to_string(raw.size()) + " is empty");
        raw.push_back(std::move(rb));
    }
    if (target) {
        for (const auto& block : raw) {
            for (const auto& label : block.labels) {
                if (!target->index_of(label)) throw ParseError(0, "label '" + label + "' is not in the universe");
            }
        }
        // A declared universe may leave elements uncovered; report that as
        // a cover error rather than a mismatch.
        std::set<std::string> covered;
        for (const auto& block : raw) covered.insert(block.labels.begin(), block.labels.end());
        if (covered.size() < target->size()) {
            for (std::size_t i = 0; i < target->size(); ++i) {
                if (!covered.contains(target->label(i))) {
                    throw CoverError("element " + target->label(i) + " is not covered by any block");
                }
            }
        }
    }
    return assemble(raw, target);
}

Partition parse_partition(std::string_view text, const UniversePtr& universe) {
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') return parse_partition_json(text, universe);
    return parse_partition_text(text, universe);
}

std::string format_partition_text(const Partition& p) {
    std::string out;
    for (const auto& block : p.blocks()) {
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k) out += ' ';
            out += p.universe().label(block[k]);
        }
        out += '\n';
    }
    return out;
}

LabeledDist parse_distribution_csv(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t header_line = 0;
    while (header_line < lines.size() && trim(lines[header_line]).empty()) ++header_line;
    if (header_line == lines.size()) throw ParseError(0, "CSV is empty; a header row is required");

    const auto split_row = [](std::string_view line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            cells.emplace_back(trim(line.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return cells;
    };

    const auto header = split_row(lines[header_line]);
    auto lower = [](std::string s) {
        std::ranges::transform(s, s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };
    if (header.size() != 2 || lower(header[0]) != "label") {
        throw ParseError(header_line + 1, "header must be 'label,count' or 'label,prob'");
    }
    const auto kind = lower(header[1]);
    const bool counts = kind == "count";
    if (!counts && kind != "prob") throw ParseError(header_line + 1, "header must be 'label,count' or 'label,prob'");

    std::vector<std::string> labels;
    std::vector<std::int64_t> count_values;
    std::vector<double> prob_values;
    for (std::size_t i = header_line + 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto row = split_row(lines[i]);
        const auto line_no = i + 1;
        if (row.size() != 2) throw ParseError(line_no, "expected 2 columns, got " + std::to_string(row.size()));
        if (row[0].empty()) throw ParseError(line_no, "empty label");
        if (std::ranges::find(labels, row[0]) != labels.end()) {
            throw ParseError(line_no, "duplicate label '" + row[0] + "'");
        }
        const auto& cell = row[1];
        const auto* first = cell.data();
        const auto* last = cell.data() + cell.size();
        if (counts) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last) throw ParseError(line_no, "count '" + cell + "' is not an integer");
            if (value < 0) throw NegativeError("line " + std::to_string(line_no) + ": count is negative");
            count_values.push_back(value);
        } else {
            double value = 0;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last) throw ParseError(line_no, "probability '" + cell + "' is not a number");
            if (value < 0) throw NegativeError("line " + std::to_string(line_no) + ": probability is negative");
            prob_values.push_back(value);
        }
        labels.push_back(row[0]);
    }
    if (labels.empty()) throw ParseError(0, "CSV has no data rows");

    if (counts) return {labels, ProbDist::from_counts(count_values), true};
    return {labels, ProbDist::from_probs(std::move(prob_values)), false};
}

DistanceMatrix parse_distance_matrix(std::string_view text) {
    std::vector<std::vector<double>> rows;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        std::string cleaned(line);
        std::ranges::replace(cleaned, ',', ' ');
        std::vector<double> row;
        for (const auto& token : split_whitespace(cleaned)) {
            double value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw ParseError(i + 1, "'" + token + "' is not a number");
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    return DistanceMatrix(std::move(rows));
}

nlohmann::json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

nlohmann::json to_json(const Partition& p) {
    auto blocks = nlohmann::json::array();
    for (const auto& block : p.blocks()) {
        auto b = nlohmann::json::array();
        for (auto e : block) b.push_back(p.universe().label(e));
        blocks.push_back(std::move(b));
    }
    auto universe = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) universe.push_back(p.universe().label(i));
    return {{"universe", std::move(universe)}, {"blocks", std::move(blocks)}};
}

nlohmann::json to_json(const PairSet& s) {
    auto pairs = nlohmann::json::array();
    for (auto [i, j] : s.pairs()) pairs.push_back({i, j});
    return {{"size", s.size()}, {"pairs", std::move(pairs)}};
}

nlohmann::json to_json(const EntropyReport& report, const Partition& p) {
    auto blocks = nlohmann::json::array();
    for (const auto& b : report.per_block) {
        auto labels = nlohmann::json::array();
        for (auto e : p.block(b.block)) labels.push_back(p.universe().label(e));
        blocks.push_back({{"block", b.block},
                          {"labels", std::move(labels)},
                          {"p_exact", to_json(b.probability)},
                          {"p", to_double(b.probability)},
                          {"h_exact", to_json(b.logical)},
                          {"h", to_double(b.logical)},
                          {"H", b.shannon},
                          {"H_m", b.block_count}});
    }
    return {{"h_exact", to_json(report.logical)},
            {"h", report.logical_value},
            {"base", report.base},
            {"H", report.shannon},
            {"H_m", report.block_count},
            {"blocks", std::move(blocks)}};
}

nlohmann::json to_json(const VerificationReport& report) {
    auto params = nlohmann::json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    return {{"name", report.name},
            {"parameters", std::move(params)},
            {"cases", report.cases},
            {"failure_count", report.failure_count},
            {"failures", report.failures}};
}

nlohmann::json to_json(const DemoTrace& trace) {
    auto steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json step = {{"digit", s.digit},
                               {"new_dits", s.new_dits},
                               {"expected_new_dits", s.expected_new_dits},
                               {"total_dits", s.total_dits}};
        if (s.dense_new_dits) step["dense_new_dits"] = *s.dense_new_dits;
        steps.push_back(std::move(step));
    }
    return {{"radix", trace.radix},
            {"digits", trace.digits},
            {"universe_size", trace.universe_size},
            {"steps", std::move(steps)},
            {"total_dits", trace.total_dits},
            {"expected_total_dits", trace.expected_total_dits},
            {"h_exact", to_json(trace.logical)},
            {"h", to_double(trace.logical)},
            {"H", trace.shannon},
            {"H_m", trace.block_count},
            {"join_is_discrete", trace.join_is_discrete}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace ditcalc
