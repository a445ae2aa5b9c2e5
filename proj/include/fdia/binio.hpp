#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fdia/errors.hpp"

namespace fdia {

// All on-disk containers are little-endian. These helpers byte-swap on
// big-endian hosts so the file formats stay portable.

namespace detail {
template <typename T>
T to_le(T v) {
    if constexpr (std::endian::native == std::endian::big) {
        T out;
        auto* src = reinterpret_cast<const unsigned char*>(&v);
        auto* dst = reinterpret_cast<unsigned char*>(&out);
        for (std::size_t i = 0; i < sizeof(T); ++i) dst[i] = src[sizeof(T) - 1 - i];
        return out;
    }
    return v;
}
} // namespace detail

template <typename T>
void write_le(std::ostream& os, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    T le = detail::to_le(v);
    os.write(reinterpret_cast<const char*>(&le), sizeof(T));
}

template <typename T>
T read_le(std::istream& is, const char* what) {
    static_assert(std::is_trivially_copyable_v<T>);
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError(std::string("truncated checkpoint or container while reading ") + what);
    return detail::to_le(v);
}

inline void write_f64_block(std::ostream& os, const double* data, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) write_le(os, data[i]);
}

inline void read_f64_block(std::istream& is, double* data, std::size_t count, const char* what) {
    for (std::size_t i = 0; i < count; ++i) data[i] = read_le<double>(is, what);
}

inline void write_magic(std::ostream& os, const char magic[4]) { os.write(magic, 4); }

inline void expect_magic(std::istream& is, const char magic[4], const char* what) {
    char buf[4];
    is.read(buf, 4);
    if (!is) throw IoError(std::string("truncated ") + what);
    if (std::memcmp(buf, magic, 4) != 0)
        throw IoError(std::string("bad magic bytes, not a ") + what + " file");
}

/// FNV-1a 64-bit. Config hashing for manifests; not cryptographic.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace fdia
