#include "pqchain/rng.hpp"

#include <openssl/rand.h>

#include <cstring>
#include <mutex>

#include "pqchain/errors.hpp"
#include "pqchain/sha256.hpp"

// PQClean's key generation and signing pull randomness through
// PQCLEAN_randombytes; routing it through this module makes PQC key
// generation reproducible under a fixed seed.
extern "C" int PQCLEAN_randombytes(uint8_t* output, size_t n);

namespace pqchain::rng {

namespace {

struct DrbgState {
    std::mutex mutex;
    bool seeded = false;
    Hash256 key{};
    std::uint64_t counter = 0;
};

DrbgState& state() {
    static DrbgState s;
    return s;
}

// SHA-256 counter DRBG block: SHA-256(key || counter).
void next_block(DrbgState& s, Hash256& out) {
    Bytes buf(s.key.begin(), s.key.end());
    append_u64_be(buf, s.counter++);
    out = sha256(buf);
}

}  // namespace

void seed(std::uint64_t value) {
    DrbgState& s = state();
    std::lock_guard lock(s.mutex);
    Bytes seed_bytes;
    append_u64_be(seed_bytes, value);
    s.key = sha256(seed_bytes);
    s.counter = 0;
    s.seeded = true;
}

bool is_seeded() {
    DrbgState& s = state();
    std::lock_guard lock(s.mutex);
    return s.seeded;
}

void fill(std::span<std::uint8_t> out) {
    DrbgState& s = state();
    std::lock_guard lock(s.mutex);
    if (!s.seeded) {
        if (out.empty()) return;
        if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
            throw BackendFailure("system RNG failure");
        }
        return;
    }
    std::size_t offset = 0;
    Hash256 block;
    while (offset < out.size()) {
        next_block(s, block);
        std::size_t n = std::min(block.size(), out.size() - offset);
        std::memcpy(out.data() + offset, block.data(), n);
        offset += n;
    }
}

}  // namespace pqchain::rng

extern "C" int PQCLEAN_randombytes(uint8_t* output, size_t n) {
    pqchain::rng::fill(std::span<std::uint8_t>(output, n));
    return 0;
}
