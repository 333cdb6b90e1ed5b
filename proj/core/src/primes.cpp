#include "pierirank/primes.hpp"

#include <stdexcept>

namespace pierirank {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are deterministic for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t random_prime(int bits, std::mt19937_64& rng) {
    if (bits < 2 || bits > 63) throw std::invalid_argument("bits out of range");
    const uint64_t lo = 1ull << (bits - 1);
    const uint64_t span = lo;  // [2^(bits-1), 2^bits)
    for (int attempt = 0; attempt < 100000; ++attempt) {
        uint64_t cand = lo + rng() % span;
        cand |= 1;
        if (is_prime_u64(cand)) return cand;
    }
    throw std::runtime_error("random prime search failed");
}

}  // namespace pierirank
