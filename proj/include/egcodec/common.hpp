#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace egc {

using real = double;

// Invariant / precondition check. Throws so callers can test error paths.
#define EGC_CHECK(cond, msg)                                                  \
    do {                                                                      \
        if (!(cond)) throw std::invalid_argument(std::string("egc: ") + msg); \
    } while (0)

#define EGC_FAIL(msg) throw std::runtime_error(std::string("egc: ") + (msg))

inline constexpr real kPi = 3.14159265358979323846;

inline bool is_finite(real x) { return std::isfinite(x); }

// FNV-1a, used for config and architecture hashes.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace egc
