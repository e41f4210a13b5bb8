#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqchain/bytes.hpp"
#include "pqchain/errors.hpp"

namespace pqchain {

enum class SigFamily { ECDSA, Dilithium, Falcon, SPHINCSplus };

std::string_view family_name(SigFamily family);
std::optional<SigFamily> parse_family(std::string_view name);

/// Identifies one signature algorithm + parameter set. security_level is the
/// NIST 1-5 scale; 0 marks quantum-vulnerable classical schemes.
struct SchemeDescriptor {
    SigFamily family = SigFamily::ECDSA;
    std::string param_id;
    int security_level = 0;
    bool quantum_safe = false;

    /// Canonical textual id, e.g. "Dilithium/dilithium2". This is the string
    /// embedded in transaction encodings, wallet files and chain files.
    std::string id() const;

    friend bool operator==(const SchemeDescriptor& a, const SchemeDescriptor& b) {
        return a.family == b.family && a.param_id == b.param_id;
    }
};

struct KeyPair {
    SchemeDescriptor scheme;
    Bytes public_key;
    SecureBytes private_key;
};

struct SignatureBytes {
    SchemeDescriptor scheme;
    Bytes bytes;
};

/// All scheme rows with a working backend in this build, ordered by family
/// then ascending security level.
std::vector<SchemeDescriptor> list_schemes();

/// The full registry including rows whose backend is missing from this
/// build; the bench harness reports such rows as unavailable.
std::vector<SchemeDescriptor> known_schemes();

bool scheme_available(const SchemeDescriptor& scheme);

/// Looks up a scheme by canonical id, param_id or a registered alias
/// (case-insensitive), e.g. "dilithium2", "dilithium2_aes", "ml-dsa-44",
/// "ecdsa-p256". Throws UnsupportedScheme.
const SchemeDescriptor& find_scheme(std::string_view selector);

/// Selector strings accepted by find_scheme for this scheme.
std::vector<std::string> scheme_aliases(const SchemeDescriptor& scheme);

KeyPair generate_keypair(const SchemeDescriptor& scheme);

SignatureBytes sign(const KeyPair& keypair, std::span<const std::uint8_t> message);

/// True iff `signature` is valid for (public_key, message) under `scheme`.
/// Malformed signature or key bytes yield false, never an exception.
bool verify(std::span<const std::uint8_t> public_key, const SchemeDescriptor& scheme,
            std::span<const std::uint8_t> message, const SignatureBytes& signature);

}  // namespace pqchain
