#pragma once

#include <filesystem>
#include <span>

#include "pqchain/bytes.hpp"
#include "pqchain/scheme.hpp"

namespace pqchain {

/// SHA-256 digest of a public key, used as the payment identifier.
struct Address {
    Hash256 bytes{};

    std::string hex() const;  // 64 lowercase hex characters

    friend auto operator<=>(const Address&, const Address&) = default;
};

/// Deterministic: SHA-256 over the public key's canonical encoding.
/// Throws EmptyKey for an empty key.
Address derive_address(std::span<const std::uint8_t> public_key);

struct Wallet {
    KeyPair keypair;
    Address address;
};

Wallet create_wallet(const SchemeDescriptor& scheme);

/// Wallet-at-rest format, line oriented:
///   scheme=<family>/<param_id>
///   pk=<hex>
///   sk=<hex>
/// File permissions are the deployment's concern; the private key is stored
/// in the clear.
void save_wallet(const Wallet& wallet, const std::filesystem::path& path);
Wallet load_wallet(const std::filesystem::path& path);

}  // namespace pqchain
