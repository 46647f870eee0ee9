#pragma once
#include <cstdint>
#include <numeric>
#include <string>
#include <cassert>

namespace nagao {

// Exact rational with int64 numerator/denominator.  Denominators that occur
// in trace records are powers of p times small cofactors, so 64 bits is
// enough for every supported prime bound; intermediates use __int128 and
// overflow is checked in debug builds.
struct rat {
    long long num = 0;
    long long den = 1;

    rat() = default;
    rat(long long n) : num(n), den(1) {}
    rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        assert(den != 0);
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static rat from_i128(__int128 n, __int128 d) {
        assert(d != 0);
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        assert(n <= INT64_MAX && n >= INT64_MIN && d <= INT64_MAX);
        rat r; r.num = (long long)n; r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }

    double to_double() const { return (double)num / (double)den; }
    bool is_zero() const { return num == 0; }

    friend rat operator+(const rat& a, const rat& b) {
        return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend rat operator-(const rat& a, const rat& b) {
        return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
    }
    friend rat operator*(const rat& a, const rat& b) {
        return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend rat operator/(const rat& a, const rat& b) {
        assert(b.num != 0);
        return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    friend rat operator-(const rat& a) { rat r(a); r.num = -r.num; return r; }
    friend bool operator==(const rat& a, const rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace nagao
