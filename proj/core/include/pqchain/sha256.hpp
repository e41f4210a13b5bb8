#pragma once

#include <span>

#include "pqchain/bytes.hpp"

namespace pqchain {

/// SHA-256 digest of `data` (OpenSSL-backed).
Hash256 sha256(std::span<const std::uint8_t> data);

inline Hash256 sha256(const Bytes& data) {
    return sha256(std::span<const std::uint8_t>(data));
}

}  // namespace pqchain
