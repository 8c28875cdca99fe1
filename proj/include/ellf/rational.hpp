#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ellf/error.hpp"

namespace ellf {

// v_p of a nonzero integer.
long int_valuation(const mpz_class& n, long p);

// v_p of a rational; `inf` is set for 0.
long rat_valuation(const mpq_class& r, long p, bool& inf);
long rat_valuation_nonzero(const mpq_class& r, long p);

// p^k as mpz, k >= 0.
mpz_class pow_z(long p, long k);

// p^k as mpq, any sign of k.
mpq_class pow_q(long p, long k);

// The representative of y modulo p^k * Z_p inside [0, p^k), for y with
// denominator a power of p.  k may be <= 0 (then only denominator digits
// below p^k survive).
mpq_class rat_mod_ppow(const mpq_class& y, long p, long k);

// True when the denominator of y is a power of p.
bool denominator_is_ppow(const mpq_class& y, long p);

mpq_class parse_rational(const std::string& s);
std::string rational_str(const mpq_class& r);

// Deterministic cross-platform RNG helpers (std::uniform_* distributions are
// not portable bit-for-bit).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        // xorshift64*
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }
    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        if (hi < lo) fail(Errc::BadParameter, "empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    bool flip() { return (next() & 1) != 0; }
};

}  // namespace ellf
