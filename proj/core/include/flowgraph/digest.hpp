// FNV-1a content digests used to stamp run artifacts for reproducibility.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace flowgraph {

class Fnv1a64 {
public:
    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= 0x100000001b3ULL;
        }
    }
    std::uint64_t value() const { return state_; }
    std::string hex() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string digest_hex(std::string_view bytes);
std::string digest_file_hex(const std::string& path);  // throws Error if unreadable

}  // namespace flowgraph
