#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ditcalc/partition.hpp"
#include "ditcalc/rational.hpp"

namespace ditcalc {

inline constexpr double kDefaultBase = 2.0;

/// Throws BadBase unless base > 1 and finite.
void require_valid_base(double base);

/// Number of ordered pairs distinguished by pi, counted row by row.
std::uint64_t dit_count(const Partition& pi);

/// h(pi) = |dit(pi)| / |U|², exact.
Rational logical_entropy(const Partition& pi);

/// H(pi) = Σ p_B log_base(1/p_B).
double shannon_entropy(const Partition& pi, double base = kDefaultBase);

/// H_m(pi) = Π (1/p_B)^{p_B}, evaluated as exp(Σ p_B ln(1/p_B)).
double block_count_entropy(const Partition& pi);

/// Block-entropy conversions h = 1 − base^(−H) and H = log_base(1/(1−h)).
/// Throw DomainError for H < 0 or h outside [0, 1).
double h_from_H(double shannon_block_entropy, double base = kDefaultBase);
double H_from_h(double logical_block_entropy, double base = kDefaultBase);

/// 50 significant decimal digits.
using WideFloat = boost::multiprecision::cpp_bin_float_50;

/// Wide-precision conversions. 1 − h keeps its significant digits far past
/// the point where the double versions round h to 1.
WideFloat h_from_H(const WideFloat& shannon_block_entropy, const WideFloat& base);
WideFloat H_from_h(const WideFloat& logical_block_entropy, const WideFloat& base);

/// m(pi, sigma) = |Mut(pi, sigma)| / |U|², exact.
Rational logical_mutual_info(const Partition& pi, const Partition& sigma);

/// I(pi; sigma) = Σ p_{B∩C} log_base(p_{B∩C} / (p_B p_C)).
double shannon_mutual_info(const Partition& pi, const Partition& sigma, double base = kDefaultBase);

/// Exact test |B∩C|·|U| = |B|·|C| for every block pair.
bool are_independent(const Partition& pi, const Partition& sigma);

struct BlockEntropy {
    std::size_t block = 0;
    Rational probability;
    Rational logical;     // h(B) = 1 − p_B
    double shannon = 0;   // H(B) = log_base(1/p_B)
    double block_count = 0;  // H_m(B) = 1/p_B
};

struct EntropyReport {
    Rational logical;
    double logical_value = 0;
    double shannon = 0;
    double base = kDefaultBase;
    double block_count = 0;
    std::vector<BlockEntropy> per_block;
};

EntropyReport entropy_report(const Partition& pi, double base = kDefaultBase);

}  // namespace ditcalc
