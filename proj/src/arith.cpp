#include "nagao/arith.hpp"

namespace nagao::arith {

std::vector<i64> primes_up_to(i64 T) {
    if (T < 2) fail(errc::config_error, "primes_up_to: T must be >= 2");
    std::vector<bool> comp(T + 1, false);
    std::vector<i64> out;
    for (i64 i = 2; i <= T; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= T; j += i) comp[j] = true;
    }
    return out;
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

void PrimeCtx::build_table() {
    if (!chi.empty()) return;
    chi.assign((size_t)p, -1);
    chi[0] = 0;
    // mark nonzero squares incrementally: x^2 = (x-1)^2 + 2x - 1
    u64 sq = 0;
    for (i64 x = 1; x <= (p - 1) / 2; ++x) {
        sq += 2 * (u64)x - 1;
        if (sq >= (u64)p) sq -= (u64)p;
        if (sq >= (u64)p) sq -= (u64)p;
        chi[sq] = 1;
    }
}

int legendre(i64 a, const PrimeCtx& ctx) {
    i64 p = ctx.p;
    i64 r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    if (ctx.has_table()) return ctx.chi[(size_t)r];
    return powmod((u64)r, (u64)(p - 1) / 2, (u64)p) == 1 ? 1 : -1;
}

int count_roots_mod_p(const std::vector<u32>& coeffs, const PrimeCtx& ctx) {
    bool all_zero = true;
    for (u32 c : coeffs)
        if (c % ctx.p != 0) { all_zero = false; break; }
    if (coeffs.empty() || all_zero)
        fail(errc::zero_polynomial, "count_roots: polynomial is 0 mod p");
    int n = 0;
    for (i64 x = 0; x < ctx.p; ++x)
        if (eval_mod_p(coeffs, (u32)x, (u64)ctx.p) == 0) ++n;
    return n;
}

u32 eval_mod_p(const std::vector<u32>& coeffs, u32 x, u64 p) {
    u64 acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = (mulmod(acc, x, p) + coeffs[i]) % p;
    return (u32)acc;
}

} // namespace nagao::arith
