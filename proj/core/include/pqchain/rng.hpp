#pragma once

#include <cstdint>
#include <span>

namespace pqchain::rng {

/// Switches the process randomness source to a deterministic DRBG derived
/// from `value`. Affects key generation for the PQC backends and any other
/// consumer of fill(). ECDSA key generation goes through OpenSSL's own RNG
/// and is not seedable.
void seed(std::uint64_t value);

/// Fills `out` with random bytes. Thread-safe. Uses the system RNG unless
/// seed() has been called.
void fill(std::span<std::uint8_t> out);

bool is_seeded();

}  // namespace pqchain::rng
