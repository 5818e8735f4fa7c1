#include "permlab/config.hpp"

#include <cstdlib>
#include <cstring>

namespace permlab {
namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* s = std::getenv(name);
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) return fallback;
    return static_cast<std::uint64_t>(v);
}

}  // namespace

const Limits& limits() {
    static const Limits instance = [] {
        Limits l;
        l.enumeration = env_or("PERMLAB_ENUM_CUTOFF", l.enumeration);
        l.lattice = env_or("PERMLAB_LATTICE_CUTOFF", l.lattice);
        l.degree = static_cast<std::uint32_t>(env_or("PERMLAB_DEGREE_CUTOFF", l.degree));
        return l;
    }();
    return instance;
}

}  // namespace permlab
