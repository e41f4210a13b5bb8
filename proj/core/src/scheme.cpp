#include "pqchain/scheme.hpp"

#include <algorithm>
#include <cctype>

#include "backend.hpp"

namespace pqchain {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

struct RegistryEntry {
    SchemeDescriptor desc;
    std::vector<std::string> aliases;  // lowercase selectors
    const detail::Backend* backend;    // nullptr when absent from this build
};

// Security levels follow the NIST 1-5 scale; level 0 marks the
// quantum-vulnerable classical rows. The *_aes aliases are the round-3
// Dilithium labels whose sampler variant was dropped from the final
// standard; they map to the nearest standardized parameter set (ML-DSA).
std::vector<RegistryEntry> build_registry() {
    const detail::Backend* ecdsa = detail::ecdsa_backend();
    const detail::Backend* pqclean = detail::pqclean_backend();

    auto scheme = [](SigFamily family, const char* param, int level) {
        return SchemeDescriptor{family, param, level, level > 0};
    };

    std::vector<RegistryEntry> reg;
    reg.push_back({scheme(SigFamily::ECDSA, "P-256", 0),
                   {"p-256", "p256", "ecdsa-p256", "ecdsa_p256"},
                   ecdsa});
    reg.push_back({scheme(SigFamily::ECDSA, "P-384", 0),
                   {"p-384", "p384", "ecdsa-p384", "ecdsa_p384"},
                   ecdsa});
    reg.push_back({scheme(SigFamily::ECDSA, "P-521", 0),
                   {"p-521", "p521", "ecdsa-p521", "ecdsa_p521"},
                   ecdsa});
    reg.push_back({scheme(SigFamily::Dilithium, "dilithium2", 2),
                   {"dilithium2", "dilithium2_aes", "ml-dsa-44", "mldsa44"},
                   pqclean});
    reg.push_back({scheme(SigFamily::Dilithium, "dilithium3", 3),
                   {"dilithium3", "dilithium3_aes", "ml-dsa-65", "mldsa65"},
                   pqclean});
    reg.push_back({scheme(SigFamily::Dilithium, "dilithium5", 5),
                   {"dilithium5", "dilithium5_aes", "ml-dsa-87", "mldsa87"},
                   pqclean});
    reg.push_back({scheme(SigFamily::Falcon, "falcon_512", 1),
                   {"falcon_512", "falcon-512", "falcon512"},
                   pqclean});
    reg.push_back({scheme(SigFamily::Falcon, "falcon_1024", 5),
                   {"falcon_1024", "falcon-1024", "falcon1024"},
                   pqclean});
    reg.push_back({scheme(SigFamily::SPHINCSplus, "shake_128f", 1),
                   {"shake_128f", "sphincs-shake-128f", "slh-dsa-shake-128f"},
                   pqclean});
    reg.push_back({scheme(SigFamily::SPHINCSplus, "shake_192f", 3),
                   {"shake_192f", "sphincs-shake-192f", "slh-dsa-shake-192f"},
                   pqclean});
    reg.push_back({scheme(SigFamily::SPHINCSplus, "shake_256f", 5),
                   {"shake_256f", "sphincs-shake-256f", "slh-dsa-shake-256f"},
                   pqclean});

    std::sort(reg.begin(), reg.end(), [](const RegistryEntry& a, const RegistryEntry& b) {
        if (a.desc.family != b.desc.family) return a.desc.family < b.desc.family;
        if (a.desc.security_level != b.desc.security_level)
            return a.desc.security_level < b.desc.security_level;
        return a.desc.param_id < b.desc.param_id;
    });
    return reg;
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> reg = build_registry();
    return reg;
}

const RegistryEntry* lookup(const SchemeDescriptor& scheme) {
    for (const RegistryEntry& entry : registry()) {
        if (entry.desc == scheme) return &entry;
    }
    return nullptr;
}

const RegistryEntry& lookup_or_throw(const SchemeDescriptor& scheme) {
    const RegistryEntry* entry = lookup(scheme);
    if (entry == nullptr) {
        throw UnsupportedScheme("unregistered scheme " + scheme.id());
    }
    if (entry->backend == nullptr) {
        throw UnsupportedScheme("no backend for " + scheme.id() + " in this build");
    }
    return *entry;
}

}  // namespace

std::string_view family_name(SigFamily family) {
    switch (family) {
        case SigFamily::ECDSA: return "ECDSA";
        case SigFamily::Dilithium: return "Dilithium";
        case SigFamily::Falcon: return "Falcon";
        case SigFamily::SPHINCSplus: return "SPHINCSplus";
    }
    return "unknown";
}

std::optional<SigFamily> parse_family(std::string_view name) {
    std::string n = lower(name);
    if (n == "ecdsa") return SigFamily::ECDSA;
    if (n == "dilithium") return SigFamily::Dilithium;
    if (n == "falcon") return SigFamily::Falcon;
    if (n == "sphincsplus" || n == "sphincs+") return SigFamily::SPHINCSplus;
    return std::nullopt;
}

std::string SchemeDescriptor::id() const {
    return std::string(family_name(family)) + "/" + param_id;
}

std::vector<SchemeDescriptor> list_schemes() {
    std::vector<SchemeDescriptor> out;
    for (const RegistryEntry& entry : registry()) {
        if (entry.backend != nullptr) out.push_back(entry.desc);
    }
    return out;
}

std::vector<SchemeDescriptor> known_schemes() {
    std::vector<SchemeDescriptor> out;
    for (const RegistryEntry& entry : registry()) out.push_back(entry.desc);
    return out;
}

bool scheme_available(const SchemeDescriptor& scheme) {
    const RegistryEntry* entry = lookup(scheme);
    return entry != nullptr && entry->backend != nullptr;
}

const SchemeDescriptor& find_scheme(std::string_view selector) {
    std::string needle = lower(selector);
    for (const RegistryEntry& entry : registry()) {
        if (lower(entry.desc.id()) == needle || lower(entry.desc.param_id) == needle) {
            return entry.desc;
        }
        for (const std::string& alias : entry.aliases) {
            if (alias == needle) return entry.desc;
        }
    }
    throw UnsupportedScheme("unknown scheme selector \"" + std::string(selector) +
                            "\"");
}

std::vector<std::string> scheme_aliases(const SchemeDescriptor& scheme) {
    const RegistryEntry* entry = lookup(scheme);
    if (entry == nullptr) return {};
    return entry->aliases;
}

KeyPair generate_keypair(const SchemeDescriptor& scheme) {
    const RegistryEntry& entry = lookup_or_throw(scheme);
    return entry.backend->generate(entry.desc);
}

SignatureBytes sign(const KeyPair& keypair, std::span<const std::uint8_t> message) {
    const RegistryEntry& entry = lookup_or_throw(keypair.scheme);
    return SignatureBytes{entry.desc, entry.backend->sign(keypair, message)};
}

bool verify(std::span<const std::uint8_t> public_key, const SchemeDescriptor& scheme,
            std::span<const std::uint8_t> message, const SignatureBytes& signature) {
    const RegistryEntry& entry = lookup_or_throw(scheme);
    if (!(signature.scheme == scheme)) return false;
    if (public_key.empty() || signature.bytes.empty()) return false;
    return entry.backend->verify(entry.desc, public_key, message, signature.bytes);
}

}  // namespace pqchain
