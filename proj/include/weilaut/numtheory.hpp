#pragma once

#include "weilaut/integer.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace weilaut {

// Deterministic Miller-Rabin witness set, exact for inputs below 3.3e24;
// probabilistic (and in practice decisive) beyond.
inline bool is_probable_prime(const Int& n)
{
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Trial division with a perfect-square / primality fallback for the cofactor.
// Sufficient for every quantity this library factors (discriminants, conductors,
// orders); inputs whose cofactor resists both checks are rejected rather than
// silently misfactored.
inline std::vector<std::pair<Int, int>> factorize(Int n)
{
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factorize: zero");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Int p = 5;
    const Int bound = 1000000;
    while (p <= bound && p * p <= n) {
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (n > 1) {
        if (is_probable_prime(n)) {
            out.emplace_back(n, 1);
        } else {
            // cofactor has no factor <= 1e6; try exact powers p^e
            bool resolved = false;
            for (int e = 2; !resolved && Int(1) << e <= n; ++e) {
                Int lo = 1, hi = n;
                while (lo < hi) {
                    Int mid = (lo + hi + 1) >> 1;
                    if (int_pow(mid, e) <= n)
                        lo = mid;
                    else
                        hi = mid - 1;
                }
                if (int_pow(lo, e) == n && is_probable_prime(lo)) {
                    out.emplace_back(lo, e);
                    resolved = true;
                }
            }
            if (!resolved)
                throw std::domain_error("factorize: cofactor " + to_dec(n) +
                                        " exceeds the small-prime bound and is not a prime power");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Int totient(const Int& n)
{
    if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
    Int r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline long long totient_ll(long long n) { return to_long_checked(totient(Int(n)), "totient"); }

// Least n >= 1 with r^n = 1 (mod m); requires gcd(r, m) = 1.
inline long long mult_order(const Int& r, const Int& m)
{
    if (m < 1) throw std::invalid_argument("mult_order: modulus must be >= 1");
    if (m == 1) return 1;
    Int r0 = mod_positive(r, m);
    if (int_gcd(r0, m) != 1)
        throw std::invalid_argument("mult_order: gcd(r, m) != 1");
    Int x = r0;
    long long k = 1;
    while (x != 1) {
        x = x * r0 % m;
        ++k;
        if (Int(k) > m) throw std::logic_error("mult_order: no order found (unreachable)");
    }
    return k;
}

inline int valuation(Int n, const Int& p)
{
    if (n == 0) throw std::invalid_argument("valuation: zero has infinite valuation");
    if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline bool is_squarefree(const Int& n)
{
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

// n = s * f^2 with s squarefree; returns s with the sign of n.
inline Int squarefree_part(const Int& n)
{
    if (n == 0) throw std::invalid_argument("squarefree_part: zero");
    Int s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) s *= p;
    return s;
}

inline bool is_perfect_square(const Int& n)
{
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// d squarefree; the discriminant of Q(sqrt(d)).
inline Int fundamental_discriminant(const Int& d)
{
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("fundamental_discriminant: d must be squarefree and != 0, 1");
    return mod_positive(d, 4) == 1 ? d : 4 * d;
}

inline bool is_fundamental_discriminant(const Int& D)
{
    if (D == 0 || D == 1) return false;
    if (mod_positive(D, 4) == 1) return is_squarefree(D);
    if (D % 4 != 0) return false;
    Int m = D / 4;
    Int r = mod_positive(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

// Kronecker symbol (D/p) for a fundamental discriminant D and a prime p:
// 0 ramified, +1 split, -1 inert in Q(sqrt(D)).
inline int kronecker_symbol(const Int& D, const Int& p)
{
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("kronecker_symbol: " + to_dec(D) + " is not a fundamental discriminant");
    if (!is_probable_prime(p))
        throw std::invalid_argument("kronecker_symbol: p must be prime");
    if (D % p == 0) return 0;
    if (p == 2) {
        // D odd here, hence D = 1 (mod 4), so D mod 8 is 1 or 5
        return mod_positive(D, 8) == 1 ? 1 : -1;
    }
    Int l = pow_mod(mod_positive(D, p), (p - 1) / 2, p);
    return l == 1 ? 1 : -1;
}

inline std::vector<long long> divisors(long long n)
{
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long long> ds{1};
    for (const auto& [p, e] : factorize(Int(n))) {
        long long pl = to_long_checked(p, "divisors");
        size_t sz = ds.size();
        long long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= pl;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// q = p^a with p prime, a >= 1; empty if q is not a prime power.
inline std::optional<std::pair<Int, long long>> prime_power_decompose(const Int& q)
{
    if (q < 2) return std::nullopt;
    std::vector<std::pair<Int, int>> f;
    try {
        f = factorize(q);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, static_cast<long long>(f[0].second));
}

} // namespace weilaut
