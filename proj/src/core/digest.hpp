#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace nhb {

// FNV-1a 64-bit. Used for media payload digests, corpus digests and store
// state digests. Not cryptographic; collision resistance is irrelevant here,
// cross-platform stability is what matters.
class Fnv1a64 {
public:
    Fnv1a64& update(const void* data, size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; i++) {
            h_ ^= p[i];
            h_ *= 0x100000001b3ULL;
        }
        return *this;
    }
    Fnv1a64& update(std::string_view s) { return update(s.data(), s.size()); }
    uint64_t value() const { return h_; }
    std::string hex() const;

private:
    uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline uint64_t fnv1a64(std::string_view s) {
    return Fnv1a64{}.update(s).value();
}

std::string to_hex(uint64_t v);

} // namespace nhb
