// Error types and the deterministic RNG used for all sampling.
//
// Sampling must be reproducible byte-for-byte across runs and platforms, so
// bounded draws use plain modulo on mt19937_64 output (the engine sequence is
// pinned by the standard) instead of std::uniform_int_distribution, whose
// output is implementation-defined.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twc {

// Invalid construction parameters or malformed input (selector, word, file).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured cap or evaluation budget was exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant failure (e.g. runaway width saturation).
struct EngineError : std::logic_error {
    using std::logic_error::logic_error;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable 64-bit hash for deriving per-check subseeds from check names.
inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(splitmix64(seed)) {}
    Rng(uint64_t seed, const std::string& stream)
        : eng(splitmix64(seed ^ fnv1a64(stream))) {}

    uint64_t next() { return eng(); }
    // Draw from [0, n). Modulo bias is irrelevant at test sample sizes and
    // keeps the draw sequence platform-independent.
    uint64_t below(uint64_t n) { return n ? eng() % n : 0; }
};

namespace detail {

// Small exact number theory used by the constructors and checks.

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long ipow(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

inline std::vector<std::pair<long long, int>> factor_order(long long n) {
    std::vector<std::pair<long long, int>> f;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

} // namespace detail
} // namespace twc
