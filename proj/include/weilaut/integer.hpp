#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace weilaut {

// All arithmetic in this library is exact. Int is the only integer type the
// public surface uses; machine ints appear only where a quantity is
// structurally small (degrees, conductors, exponents).
using Int = boost::multiprecision::cpp_int;

inline std::string to_dec(const Int& n) { return n.str(); }

inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0) return 0;
    return int_abs(a / int_gcd(a, b) * b);
}

inline Int int_pow(Int base, long long e)
{
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int mod_positive(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0) r += int_abs(m);
    return r;
}

inline Int pow_mod(Int base, Int exp, const Int& mod)
{
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    base = mod_positive(base, mod);
    Int r = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Extended gcd based modular inverse; requires gcd(a, m) = 1.
inline Int inverse_mod(const Int& a, const Int& m)
{
    Int old_r = mod_positive(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("inverse_mod: element not invertible");
    return mod_positive(old_s, m);
}

inline long long to_long_checked(const Int& n, const char* what)
{
    if (n > Int((std::numeric_limits<long long>::max)()) ||
        n < Int((std::numeric_limits<long long>::min)()))
        throw std::overflow_error(std::string(what) + ": value does not fit a machine integer");
    return static_cast<long long>(n);
}

} // namespace weilaut
