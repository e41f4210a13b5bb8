#pragma once

#include <span>

#include "pqchain/scheme.hpp"

namespace pqchain::detail {

/// One cryptographic provider behind the scheme registry. Stateless; all
/// entry points are safe to call concurrently.
class Backend {
   public:
    virtual ~Backend() = default;

    virtual KeyPair generate(const SchemeDescriptor& scheme) const = 0;
    virtual Bytes sign(const KeyPair& keypair,
                       std::span<const std::uint8_t> message) const = 0;
    /// Malformed keys or signatures yield false, never an exception.
    virtual bool verify(const SchemeDescriptor& scheme,
                        std::span<const std::uint8_t> public_key,
                        std::span<const std::uint8_t> message,
                        std::span<const std::uint8_t> signature) const = 0;
};

/// nullptr when the provider is absent from this build.
const Backend* ecdsa_backend();
const Backend* pqclean_backend();

}  // namespace pqchain::detail
