#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ditcalc/demo.hpp"
#include "ditcalc/distribution.hpp"
#include "ditcalc/entropy.hpp"
#include "ditcalc/pair_set.hpp"
#include "ditcalc/partition.hpp"
#include "ditcalc/verify.hpp"

namespace ditcalc {

// Partition files
//
// Text: one block per line, whitespace-separated labels, blank lines
// ignored, '#' starts a comment line. Labels become the universe in order
// of first appearance.
//
// JSON: {"universe": ["a", "b", ...], "blocks": [["a", "b"], ["c"]]}.
//
// When `universe` is given, the file's labels must be exactly its labels
// (UniverseMismatch otherwise) and the result shares that universe.

Partition parse_partition_text(std::string_view text, const UniversePtr& universe = nullptr);
Partition parse_partition_json(std::string_view text, const UniversePtr& universe = nullptr);
/// JSON when the first non-blank character is '{', text otherwise.
Partition parse_partition(std::string_view text, const UniversePtr& universe = nullptr);

/// Text format, one block per line, newline-terminated.
std::string format_partition_text(const Partition& p);

/// CSV with a header row `label,count` or `label,prob`.
struct LabeledDist {
    std::vector<std::string> labels;
    ProbDist dist;
    bool from_counts = false;
};

LabeledDist parse_distribution_csv(std::string_view text);

/// n rows of n numbers separated by commas and/or whitespace; '#' comments.
DistanceMatrix parse_distance_matrix(std::string_view text);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const PairSet& s);
nlohmann::json to_json(const EntropyReport& report, const Partition& p);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const DemoTrace& trace);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace ditcalc
