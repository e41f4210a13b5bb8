#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pqchain/pow.hpp"
#include "pqchain/scheme.hpp"
#include "pqchain/stats.hpp"

namespace pqchain {

/// One row of the keygen/sign/verify timing table. Means are arithmetic over
/// per-operation monotonic-clock samples; min/max are kept for diagnostics.
struct SchemeBenchRow {
    SchemeDescriptor scheme;
    double keygen_ms = 0.0;
    double sign_ms = 0.0;
    double verify_ms = 0.0;
    int iterations = 0;
    int warmup = 0;
    bool available = false;
    double keygen_min_ms = 0.0, keygen_max_ms = 0.0;
    double sign_min_ms = 0.0, sign_max_ms = 0.0;
    double verify_min_ms = 0.0, verify_max_ms = 0.0;
};

struct PowBenchRow {
    int difficulty_bits = 0;
    TargetPolarity polarity = TargetPolarity::AllZeros;
    double mean_ms = 0.0;
    double mean_iterations = 0.0;
    int trials = 0;
    int capped_trials = 0;  // searches that hit the iteration cap
};

struct DistributionReport {
    std::uint64_t trials = 0;
    std::array<std::uint64_t, 256> bucket_counts{};  // first digest byte
    double chi_square = 0.0;
    double p_value = 0.0;
    double all_zeros_freq_l4 = 0.0;
    double all_ones_freq_l4 = 0.0;
    double all_zeros_freq_l8 = 0.0;
    double all_ones_freq_l8 = 0.0;
};

/// Times keygen, sign and verify separately over fresh inputs after
/// `warmup` discarded rounds. Benchmark loops are single-threaded. A scheme
/// without a backend yields a row marked unavailable rather than an error.
/// Requires iterations >= 30.
SchemeBenchRow bench_scheme(const SchemeDescriptor& scheme, int iterations, int warmup,
                            std::size_t message_size_bytes, std::uint64_t seed = 7);

/// For each L, runs `trials` proof-of-work searches over distinct random
/// 64-byte contents and reports mean wall time and mean iteration count.
/// Searches that exceed the iteration cap are counted, not fatal.
/// Requires trials >= 30.
std::vector<PowBenchRow> bench_pow(std::span<const int> difficulty_values,
                                   TargetPolarity polarity, int trials,
                                   std::uint64_t seed = 7,
                                   std::optional<std::uint64_t> iteration_cap = {});

/// Hashes `trials` distinct random contents once each, tallies the first
/// digest byte into 256 buckets, and tests uniformity (Pearson chi-square,
/// 255 degrees of freedom). Also reports how often the 4- and 8-bit prefixes
/// were all zeros / all ones. Requires trials >= 1000.
DistributionReport prefix_distribution(std::uint64_t trials, std::uint64_t seed = 7);

// Report rendering. Each suite has a delimiter-separated table with a fixed
// column set and a JSON document carrying the same rows plus diagnostics.
std::string scheme_table_csv(std::span<const SchemeBenchRow> rows);
std::string scheme_table_json(std::span<const SchemeBenchRow> rows);
std::string pow_table_csv(std::span<const PowBenchRow> rows);
std::string pow_table_json(std::span<const PowBenchRow> rows);
std::string distribution_csv(const DistributionReport& report);
std::string distribution_json(const DistributionReport& report);

}  // namespace pqchain
