#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "weilaut/integer.hpp"
#include "weilaut/poly.hpp"
#include "weilaut/rational.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <utility>

namespace oracles {

using weilaut::Int;
using weilaut::Rat;

inline long long brute_totient(long long n)
{
    long long c = 0;
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline long long brute_order(long long r, long long m)
{
    if (m == 1) return 1;
    long long x = ((r % m) + m) % m;
    long long acc = x, k = 1;
    while (acc != 1) {
        acc = acc * x % m;
        ++k;
    }
    return k;
}

// split/inert/ramified by exhaustive squares mod p (odd p)
inline int brute_kronecker(long long D, long long p)
{
    if (D % p == 0) return 0;
    std::set<long long> squares;
    for (long long x = 1; x < p; ++x) squares.insert(x * x % p);
    long long d = ((D % p) + p) % p;
    return squares.count(d) ? 1 : -1;
}

// Root valuations of t^2 + b t + c at p via the Newton polygon: the lower
// hull of (0, v(c)), (1, v(b)), (2, 0). Independent route to what the Hensel
// lift computes in the split case.
inline std::pair<Rat, Rat> newton_polygon_valuations(const Int& b, const Int& c, const Int& p)
{
    using weilaut::valuation;
    int vc = valuation(c, p);
    if (b == 0) return {Rat(vc, 2), Rat(vc, 2)};
    int vb = valuation(b, p);
    if (2 * vb < vc) return {Rat(vc - vb), Rat(vb)};
    return {Rat(vc, 2), Rat(vc, 2)};
}

// Advisory numeric check (tolerance 1e-9): both roots of the monic quadratic
// have modulus sqrt(q). Exact arithmetic everywhere else; this oracle exists
// only to cross-check definitions.
inline bool numeric_weil_quadratic(const Int& b, const Int& c, const Int& q, double tol = 1e-9)
{
    long double bb = static_cast<long double>(b.convert_to<double>());
    long double cc = static_cast<long double>(c.convert_to<double>());
    long double qq = static_cast<long double>(q.convert_to<double>());
    long double disc = bb * bb - 4.0L * cc;
    long double sq = sqrtl(fabsl(qq));
    if (disc <= 0) {
        std::complex<long double> root(-bb / 2, sqrtl(-disc) / 2);
        return fabsl(std::abs(root) - sq) < tol * sq;
    }
    long double r1 = (-bb + sqrtl(disc)) / 2;
    long double r2 = (-bb - sqrtl(disc)) / 2;
    return fabsl(fabsl(r1) - sq) < tol * sq && fabsl(fabsl(r2) - sq) < tol * sq;
}

inline std::vector<long long> primes_up_to(long long n)
{
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    std::vector<long long> out;
    for (long long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

} // namespace oracles
