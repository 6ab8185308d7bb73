#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace shieldnn {

// FNV-1a 64-bit. Used for provenance hashes in certificates and filter files;
// an integrity/traceability check, not a cryptographic one.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data);

}  // namespace shieldnn
