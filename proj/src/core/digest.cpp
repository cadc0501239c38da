#include "core/digest.hpp"

namespace nhb {

std::string to_hex(uint64_t v) {
    static const char* kHex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; i--) {
        out[i] = kHex[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string Fnv1a64::hex() const {
    return to_hex(h_);
}

} // namespace nhb
