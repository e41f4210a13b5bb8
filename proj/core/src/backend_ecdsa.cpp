#include <openssl/bn.h>
#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/param_build.h>

#include <memory>

#include "backend.hpp"
#include "pqchain/errors.hpp"

namespace pqchain::detail {

namespace {

struct CurveInfo {
    const char* param_id;
    const char* group_name;  // OpenSSL group name
    const char* digest;      // paired hash (conventional pairing)
    std::size_t field_bytes;
};

constexpr CurveInfo kCurves[] = {
    {"P-256", "P-256", "SHA256", 32},
    {"P-384", "P-384", "SHA384", 48},
    {"P-521", "P-521", "SHA512", 66},
};

const CurveInfo* find_curve(const SchemeDescriptor& scheme) {
    for (const CurveInfo& c : kCurves) {
        if (scheme.param_id == c.param_id) return &c;
    }
    return nullptr;
}

struct PkeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct PkeyCtxDeleter {
    void operator()(EVP_PKEY_CTX* p) const { EVP_PKEY_CTX_free(p); }
};
struct MdCtxDeleter {
    void operator()(EVP_MD_CTX* p) const { EVP_MD_CTX_free(p); }
};
struct BnDeleter {
    void operator()(BIGNUM* p) const { BN_clear_free(p); }
};
struct ParamBldDeleter {
    void operator()(OSSL_PARAM_BLD* p) const { OSSL_PARAM_BLD_free(p); }
};
struct ParamDeleter {
    void operator()(OSSL_PARAM* p) const { OSSL_PARAM_free(p); }
};

using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using PkeyCtxPtr = std::unique_ptr<EVP_PKEY_CTX, PkeyCtxDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, MdCtxDeleter>;
using BnPtr = std::unique_ptr<BIGNUM, BnDeleter>;

// Builds an EVP_PKEY from the canonical encodings: public key as an
// uncompressed EC point, private key as the big-endian scalar. The private
// part is optional (verification needs only the point).
PkeyPtr make_pkey(const CurveInfo& curve, std::span<const std::uint8_t> public_key,
                  std::span<const std::uint8_t> private_key) {
    std::unique_ptr<OSSL_PARAM_BLD, ParamBldDeleter> bld(OSSL_PARAM_BLD_new());
    if (!bld) return nullptr;
    if (OSSL_PARAM_BLD_push_utf8_string(bld.get(), OSSL_PKEY_PARAM_GROUP_NAME,
                                        curve.group_name, 0) != 1) {
        return nullptr;
    }
    if (!public_key.empty() &&
        OSSL_PARAM_BLD_push_octet_string(bld.get(), OSSL_PKEY_PARAM_PUB_KEY,
                                         public_key.data(), public_key.size()) != 1) {
        return nullptr;
    }
    BnPtr priv;
    if (!private_key.empty()) {
        priv.reset(BN_bin2bn(private_key.data(), static_cast<int>(private_key.size()),
                             nullptr));
        if (!priv || OSSL_PARAM_BLD_push_BN(bld.get(), OSSL_PKEY_PARAM_PRIV_KEY,
                                            priv.get()) != 1) {
            return nullptr;
        }
    }
    std::unique_ptr<OSSL_PARAM, ParamDeleter> params(
        OSSL_PARAM_BLD_to_param(bld.get()));
    if (!params) return nullptr;

    PkeyCtxPtr ctx(EVP_PKEY_CTX_new_from_name(nullptr, "EC", nullptr));
    if (!ctx || EVP_PKEY_fromdata_init(ctx.get()) != 1) return nullptr;
    EVP_PKEY* raw = nullptr;
    int selection = private_key.empty() ? EVP_PKEY_PUBLIC_KEY : EVP_PKEY_KEYPAIR;
    if (EVP_PKEY_fromdata(ctx.get(), &raw, selection, params.get()) != 1) {
        return nullptr;
    }
    return PkeyPtr(raw);
}

class EcdsaBackend final : public Backend {
   public:
    KeyPair generate(const SchemeDescriptor& scheme) const override {
        const CurveInfo* curve = find_curve(scheme);
        if (curve == nullptr) {
            throw UnsupportedScheme("no ECDSA parameters for " + scheme.id());
        }
        PkeyPtr pkey(EVP_EC_gen(curve->group_name));
        if (!pkey) throw BackendFailure("EC key generation failed for " + scheme.id());

        KeyPair kp;
        kp.scheme = scheme;

        std::size_t publen = 0;
        if (EVP_PKEY_get_octet_string_param(pkey.get(), OSSL_PKEY_PARAM_PUB_KEY,
                                            nullptr, 0, &publen) != 1) {
            throw BackendFailure("EC public key export failed");
        }
        kp.public_key.resize(publen);
        if (EVP_PKEY_get_octet_string_param(pkey.get(), OSSL_PKEY_PARAM_PUB_KEY,
                                            kp.public_key.data(), kp.public_key.size(),
                                            &publen) != 1) {
            throw BackendFailure("EC public key export failed");
        }
        kp.public_key.resize(publen);

        BIGNUM* raw = nullptr;
        if (EVP_PKEY_get_bn_param(pkey.get(), OSSL_PKEY_PARAM_PRIV_KEY, &raw) != 1) {
            throw BackendFailure("EC private key export failed");
        }
        BnPtr priv(raw);
        kp.private_key.resize(curve->field_bytes);
        if (BN_bn2binpad(priv.get(), kp.private_key.data(),
                         static_cast<int>(kp.private_key.size())) < 0) {
            throw BackendFailure("EC private key encoding failed");
        }
        return kp;
    }

    Bytes sign(const KeyPair& keypair,
               std::span<const std::uint8_t> message) const override {
        const CurveInfo* curve = find_curve(keypair.scheme);
        if (curve == nullptr) {
            throw UnsupportedScheme("no ECDSA parameters for " + keypair.scheme.id());
        }
        PkeyPtr pkey = make_pkey(*curve, keypair.public_key,
                                 std::span<const std::uint8_t>(
                                     keypair.private_key.data(),
                                     keypair.private_key.size()));
        if (!pkey) throw BackendFailure("EC private key import failed");

        MdCtxPtr md(EVP_MD_CTX_new());
        if (!md || EVP_DigestSignInit_ex(md.get(), nullptr, curve->digest, nullptr,
                                         nullptr, pkey.get(), nullptr) != 1) {
            throw BackendFailure("ECDSA sign init failed");
        }
        std::size_t siglen = 0;
        if (EVP_DigestSign(md.get(), nullptr, &siglen, message.data(),
                           message.size()) != 1) {
            throw BackendFailure("ECDSA signing failed");
        }
        Bytes sig(siglen);
        if (EVP_DigestSign(md.get(), sig.data(), &siglen, message.data(),
                           message.size()) != 1) {
            throw BackendFailure("ECDSA signing failed");
        }
        sig.resize(siglen);  // DER encoding is variable-length
        return sig;
    }

    bool verify(const SchemeDescriptor& scheme, std::span<const std::uint8_t> public_key,
                std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> signature) const override {
        const CurveInfo* curve = find_curve(scheme);
        if (curve == nullptr) {
            throw UnsupportedScheme("no ECDSA parameters for " + scheme.id());
        }
        if (public_key.empty() || signature.empty()) return false;
        PkeyPtr pkey = make_pkey(*curve, public_key, {});
        if (!pkey) return false;  // malformed point

        MdCtxPtr md(EVP_MD_CTX_new());
        if (!md || EVP_DigestVerifyInit_ex(md.get(), nullptr, curve->digest, nullptr,
                                           nullptr, pkey.get(), nullptr) != 1) {
            return false;
        }
        return EVP_DigestVerify(md.get(), signature.data(), signature.size(),
                                message.data(), message.size()) == 1;
    }
};

}  // namespace

const Backend* ecdsa_backend() {
    static EcdsaBackend backend;
    return &backend;
}

}  // namespace pqchain::detail
