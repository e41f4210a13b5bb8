#pragma once

#include <cstdint>
#include <span>

#include "pqchain/bytes.hpp"
#include "pqchain/errors.hpp"

namespace pqchain {

enum class TargetPolarity { AllZeros, AllOnes };

std::string_view polarity_name(TargetPolarity polarity);

/// Default safety cap 2^(L+8): large enough that honest searches at sane L
/// terminate, small enough to bound runaway ones.
std::uint64_t default_iteration_cap(int difficulty_bits);

struct PowConfig {
    int difficulty_bits = 8;  // L, 0..64
    TargetPolarity polarity = TargetPolarity::AllZeros;
    std::uint64_t max_iterations = default_iteration_cap(8);

    static PowConfig with_difficulty(int bits,
                                     TargetPolarity polarity = TargetPolarity::AllZeros);
};

/// True iff the first L bits of the digest (bytes in order, MSB first within
/// each byte) all match the polarity. L = 0 is trivially true.
bool target_predicate(const Hash256& digest, int difficulty_bits,
                      TargetPolarity polarity);

struct PowResult {
    std::uint64_t nonce = 0;  // r, the number of hash applications
    Hash256 digest{};
};

/// Iterated-hash search: digest_1 = SHA-256(content), digest_k =
/// SHA-256(digest_{k-1}). Returns the smallest r >= 1 whose digest satisfies
/// the target predicate. The chain is fully determined by the content; the
/// search has no free nonce input. Throws IterationCapExceeded when r would
/// pass config.max_iterations.
PowResult pow_search(std::span<const std::uint8_t> content, const PowConfig& config);

}  // namespace pqchain
