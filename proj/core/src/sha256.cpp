#include "pqchain/sha256.hpp"

#include <openssl/evp.h>

#include "pqchain/errors.hpp"

namespace pqchain {

Hash256 sha256(std::span<const std::uint8_t> data) {
    Hash256 digest;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(),
                   nullptr) != 1 ||
        len != digest.size()) {
        throw BackendFailure("SHA-256 digest failed");
    }
    return digest;
}

}  // namespace pqchain
