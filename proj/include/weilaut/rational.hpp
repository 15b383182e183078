#pragma once

#include "weilaut/integer.hpp"

#include <string>

namespace weilaut {

// Always stored reduced with positive denominator; equality is structural.
struct Rat {
    Int num{0};
    Int den{1};

    Rat() = default;
    Rat(const Int& n) : num(n), den(1) {}
    Rat(long long n) : num(n), den(1) {}
    Rat(const Int& n, const Int& d) : num(n), den(d) { reduce(); }
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce()
    {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Int g = int_gcd(int_abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integral() const { return den == 1; }

    // representative in [0, 1)
    Rat mod1() const
    {
        Int r = mod_positive(num, den);
        return Rat(r, den);
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.num == 0) throw std::invalid_argument("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
};

inline std::string to_string(const Rat& r)
{
    if (r.den == 1) return to_dec(r.num);
    return to_dec(r.num) + "/" + to_dec(r.den);
}

} // namespace weilaut
