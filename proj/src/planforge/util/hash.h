#pragma once

#include <cstdint>
#include <cstddef>
#include <string_view>

namespace planforge {

// FNV-1a, used for stable fingerprints that must not vary across runs.
class Fnv1a {
public:
    void feed(uint64_t value) {
        for (int i = 0; i < 8; ++i) {
            state_ ^= (value >> (8 * i)) & 0xffu;
            state_ *= 0x100000001b3ull;
        }
    }

    void feed(int value) { feed(static_cast<uint64_t>(static_cast<int64_t>(value))); }

    void feed(std::string_view text) {
        for (unsigned char c : text) {
            state_ ^= c;
            state_ *= 0x100000001b3ull;
        }
    }

    uint64_t value() const { return state_; }

private:
    uint64_t state_ = 0xcbf29ce484222325ull;
};

}  // namespace planforge
