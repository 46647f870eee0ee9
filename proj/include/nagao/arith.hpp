#pragma once
#include <cstdint>
#include <vector>

#include "nagao/errors.hpp"

namespace nagao::arith {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// All primes <= T, ascending.  T >= 2.
std::vector<i64> primes_up_to(i64 T);

inline u64 mulmod(u64 a, u64 b, u64 p) { return (unsigned __int128)a * b % p; }

u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

// Context for one odd prime p >= 5.  The quadratic-residue table is built
// once when a fiber sweep will evaluate >= p characters; single lookups fall
// back to the Euler criterion.
struct PrimeCtx {
    i64 p = 0;
    std::vector<std::int8_t> chi; // chi[a] in {-1,0,+1}; empty until built

    explicit PrimeCtx(i64 prime) : p(prime) {}

    void build_table();
    bool has_table() const { return !chi.empty(); }
};

// Legendre symbol (a|p) in {-1,0,+1}.
int legendre(i64 a, const PrimeCtx& ctx);

// Distinct roots in F_p of a polynomial given by coefficients mod p
// (coeffs[i] = coefficient of x^i, each already reduced).  Exhaustive scan;
// p is small everywhere this is used.  Throws zero_polynomial on f == 0.
int count_roots_mod_p(const std::vector<u32>& coeffs, const PrimeCtx& ctx);

// Horner evaluation of reduced coefficients at x mod p.
u32 eval_mod_p(const std::vector<u32>& coeffs, u32 x, u64 p);

} // namespace nagao::arith
