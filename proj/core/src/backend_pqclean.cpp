#include <cstddef>
#include <cstdint>

#include "backend.hpp"
#include "pqchain/errors.hpp"

extern "C" {
#include "crypto_sign/falcon-1024/clean/api.h"
#include "crypto_sign/falcon-512/clean/api.h"
#include "crypto_sign/ml-dsa-44/clean/api.h"
#include "crypto_sign/ml-dsa-65/clean/api.h"
#include "crypto_sign/ml-dsa-87/clean/api.h"
#include "crypto_sign/sphincs-shake-128f-simple/clean/api.h"
#include "crypto_sign/sphincs-shake-192f-simple/clean/api.h"
#include "crypto_sign/sphincs-shake-256f-simple/clean/api.h"
}

namespace pqchain::detail {

namespace {

// The ML-DSA entry points take a domain-separation context; this build signs
// raw messages with the empty context.
int mldsa44_sign(uint8_t* sig, size_t* siglen, const uint8_t* m, size_t mlen,
                 const uint8_t* sk) {
    return PQCLEAN_MLDSA44_CLEAN_crypto_sign_signature_ctx(sig, siglen, m, mlen,
                                                           nullptr, 0, sk);
}
int mldsa44_verify(const uint8_t* sig, size_t siglen, const uint8_t* m, size_t mlen,
                   const uint8_t* pk) {
    return PQCLEAN_MLDSA44_CLEAN_crypto_sign_verify_ctx(sig, siglen, m, mlen, nullptr,
                                                        0, pk);
}
int mldsa65_sign(uint8_t* sig, size_t* siglen, const uint8_t* m, size_t mlen,
                 const uint8_t* sk) {
    return PQCLEAN_MLDSA65_CLEAN_crypto_sign_signature_ctx(sig, siglen, m, mlen,
                                                           nullptr, 0, sk);
}
int mldsa65_verify(const uint8_t* sig, size_t siglen, const uint8_t* m, size_t mlen,
                   const uint8_t* pk) {
    return PQCLEAN_MLDSA65_CLEAN_crypto_sign_verify_ctx(sig, siglen, m, mlen, nullptr,
                                                        0, pk);
}
int mldsa87_sign(uint8_t* sig, size_t* siglen, const uint8_t* m, size_t mlen,
                 const uint8_t* sk) {
    return PQCLEAN_MLDSA87_CLEAN_crypto_sign_signature_ctx(sig, siglen, m, mlen,
                                                           nullptr, 0, sk);
}
int mldsa87_verify(const uint8_t* sig, size_t siglen, const uint8_t* m, size_t mlen,
                   const uint8_t* pk) {
    return PQCLEAN_MLDSA87_CLEAN_crypto_sign_verify_ctx(sig, siglen, m, mlen, nullptr,
                                                        0, pk);
}

struct PqApi {
    const char* param_id;
    std::size_t public_key_bytes;
    std::size_t secret_key_bytes;
    std::size_t signature_max_bytes;
    int (*keypair)(uint8_t* pk, uint8_t* sk);
    int (*sign)(uint8_t* sig, size_t* siglen, const uint8_t* m, size_t mlen,
                const uint8_t* sk);
    int (*verify)(const uint8_t* sig, size_t siglen, const uint8_t* m, size_t mlen,
                  const uint8_t* pk);
};

constexpr PqApi kApis[] = {
    {"dilithium2", PQCLEAN_MLDSA44_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_MLDSA44_CLEAN_CRYPTO_SECRETKEYBYTES, PQCLEAN_MLDSA44_CLEAN_CRYPTO_BYTES,
     PQCLEAN_MLDSA44_CLEAN_crypto_sign_keypair, mldsa44_sign, mldsa44_verify},
    {"dilithium3", PQCLEAN_MLDSA65_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_MLDSA65_CLEAN_CRYPTO_SECRETKEYBYTES, PQCLEAN_MLDSA65_CLEAN_CRYPTO_BYTES,
     PQCLEAN_MLDSA65_CLEAN_crypto_sign_keypair, mldsa65_sign, mldsa65_verify},
    {"dilithium5", PQCLEAN_MLDSA87_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_MLDSA87_CLEAN_CRYPTO_SECRETKEYBYTES, PQCLEAN_MLDSA87_CLEAN_CRYPTO_BYTES,
     PQCLEAN_MLDSA87_CLEAN_crypto_sign_keypair, mldsa87_sign, mldsa87_verify},
    {"falcon_512", PQCLEAN_FALCON512_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_FALCON512_CLEAN_CRYPTO_SECRETKEYBYTES,
     PQCLEAN_FALCON512_CLEAN_CRYPTO_BYTES,
     PQCLEAN_FALCON512_CLEAN_crypto_sign_keypair,
     PQCLEAN_FALCON512_CLEAN_crypto_sign_signature,
     PQCLEAN_FALCON512_CLEAN_crypto_sign_verify},
    {"falcon_1024", PQCLEAN_FALCON1024_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_FALCON1024_CLEAN_CRYPTO_SECRETKEYBYTES,
     PQCLEAN_FALCON1024_CLEAN_CRYPTO_BYTES,
     PQCLEAN_FALCON1024_CLEAN_crypto_sign_keypair,
     PQCLEAN_FALCON1024_CLEAN_crypto_sign_signature,
     PQCLEAN_FALCON1024_CLEAN_crypto_sign_verify},
    {"shake_128f", PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_CRYPTO_SECRETKEYBYTES,
     PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_CRYPTO_BYTES,
     PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_crypto_sign_keypair,
     PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_crypto_sign_signature,
     PQCLEAN_SPHINCSSHAKE128FSIMPLE_CLEAN_crypto_sign_verify},
    {"shake_192f", PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_CRYPTO_SECRETKEYBYTES,
     PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_CRYPTO_BYTES,
     PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_crypto_sign_keypair,
     PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_crypto_sign_signature,
     PQCLEAN_SPHINCSSHAKE192FSIMPLE_CLEAN_crypto_sign_verify},
    {"shake_256f", PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_CRYPTO_PUBLICKEYBYTES,
     PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_CRYPTO_SECRETKEYBYTES,
     PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_CRYPTO_BYTES,
     PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_crypto_sign_keypair,
     PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_crypto_sign_signature,
     PQCLEAN_SPHINCSSHAKE256FSIMPLE_CLEAN_crypto_sign_verify},
};

const PqApi* find_api(const SchemeDescriptor& scheme) {
    for (const PqApi& api : kApis) {
        if (scheme.param_id == api.param_id) return &api;
    }
    return nullptr;
}

class PqcleanBackend final : public Backend {
   public:
    KeyPair generate(const SchemeDescriptor& scheme) const override {
        const PqApi* api = find_api(scheme);
        if (api == nullptr) {
            throw UnsupportedScheme("no PQClean implementation for " + scheme.id());
        }
        KeyPair kp;
        kp.scheme = scheme;
        kp.public_key.resize(api->public_key_bytes);
        kp.private_key.resize(api->secret_key_bytes);
        if (api->keypair(kp.public_key.data(), kp.private_key.data()) != 0) {
            throw BackendFailure("key generation failed for " + scheme.id());
        }
        return kp;
    }

    Bytes sign(const KeyPair& keypair,
               std::span<const std::uint8_t> message) const override {
        const PqApi* api = find_api(keypair.scheme);
        if (api == nullptr) {
            throw UnsupportedScheme("no PQClean implementation for " +
                                    keypair.scheme.id());
        }
        if (keypair.private_key.size() != api->secret_key_bytes) {
            throw BackendFailure("private key has wrong length for " +
                                 keypair.scheme.id());
        }
        Bytes sig(api->signature_max_bytes);
        std::size_t siglen = sig.size();
        if (api->sign(sig.data(), &siglen, message.data(), message.size(),
                      keypair.private_key.data()) != 0) {
            throw BackendFailure("signing failed for " + keypair.scheme.id());
        }
        sig.resize(siglen);
        return sig;
    }

    bool verify(const SchemeDescriptor& scheme, std::span<const std::uint8_t> public_key,
                std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> signature) const override {
        const PqApi* api = find_api(scheme);
        if (api == nullptr) {
            throw UnsupportedScheme("no PQClean implementation for " + scheme.id());
        }
        if (public_key.size() != api->public_key_bytes) return false;
        if (signature.empty() || signature.size() > api->signature_max_bytes)
            return false;
        return api->verify(signature.data(), signature.size(), message.data(),
                           message.size(), public_key.data()) == 0;
    }
};

}  // namespace

const Backend* pqclean_backend() {
    static PqcleanBackend backend;
    return &backend;
}

}  // namespace pqchain::detail
