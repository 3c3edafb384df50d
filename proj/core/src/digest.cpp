#include "flowgraph/digest.hpp"

#include <cstdio>
#include <fstream>

#include "flowgraph/error.hpp"

namespace flowgraph {

std::string Fnv1a64::hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
    return buf;
}

std::string digest_hex(std::string_view bytes) {
    Fnv1a64 d;
    d.update(bytes);
    return d.hex();
}

std::string digest_file_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for digest: " + path);
    Fnv1a64 d;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        d.update(std::string_view(buf, static_cast<std::size_t>(in.gcount())));
    }
    return d.hex();
}

}  // namespace flowgraph
