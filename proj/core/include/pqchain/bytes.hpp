#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqchain {

using Bytes = std::vector<std::uint8_t>;
using Hash256 = std::array<std::uint8_t, 32>;

inline constexpr Hash256 kZeroHash{};

/// Overwrites memory and prevents the compiler from eliding the store.
void secure_wipe(void* data, std::size_t size) noexcept;

namespace detail {

template <typename T>
struct WipingAllocator {
    using value_type = T;

    WipingAllocator() = default;
    template <typename U>
    WipingAllocator(const WipingAllocator<U>&) noexcept {}

    T* allocate(std::size_t n) { return std::allocator<T>{}.allocate(n); }

    void deallocate(T* p, std::size_t n) noexcept {
        secure_wipe(p, n * sizeof(T));
        std::allocator<T>{}.deallocate(p, n);
    }

    template <typename U>
    bool operator==(const WipingAllocator<U>&) const noexcept {
        return true;
    }
};

}  // namespace detail

/// Byte buffer for secret material; storage is wiped on deallocation.
using SecureBytes = std::vector<std::uint8_t, detail::WipingAllocator<std::uint8_t>>;

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

// Big-endian append helpers shared by the canonical encodings.
void append_u32_be(Bytes& out, std::uint32_t value);
void append_u64_be(Bytes& out, std::uint64_t value);
void append_bytes(Bytes& out, std::span<const std::uint8_t> data);
void append_length_prefixed(Bytes& out, std::span<const std::uint8_t> data);

}  // namespace pqchain
