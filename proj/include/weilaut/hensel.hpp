#pragma once

#include "weilaut/numtheory.hpp"
#include "weilaut/poly.hpp"
#include "weilaut/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weilaut {

// One entry per place of Q[t]/(h) above p: the valuation of a root of h at
// that place (normalized so that v(p) = 1) together with the local degree
// [K_nu : Q_p].
struct PlaceValuation {
    Rat valuation;
    long long local_degree;

    friend bool operator==(const PlaceValuation& a, const PlaceValuation& b)
    {
        return a.valuation == b.valuation && a.local_degree == b.local_degree;
    }
};

namespace detail {

// square root of w mod p (odd p); w must be a nonzero square mod p
inline Int sqrt_mod_prime(const Int& w, const Int& p)
{
    Int wm = mod_positive(w, p);
    for (Int x = 1; x < p; ++x)
        if (x * x % p == wm) return x;
    throw std::logic_error("sqrt_mod_prime: no square root found");
}

// square root of w mod p^k by Newton lifting (odd p) or bit lifting (p = 2,
// needs w = 1 mod 8). Assumes a root exists, which the split case guarantees.
inline Int sqrt_lift(const Int& w, const Int& p, long long k)
{
    Int M = int_pow(p, k);
    Int wm = mod_positive(w, M);
    if (p == 2) {
        if (mod_positive(wm, 8) != 1) throw std::logic_error("sqrt_lift: w != 1 mod 8");
        Int x = 1;
        for (long long e = 3; e < k; ++e) {
            Int step = Int(1) << e;          // 2^e
            Int Me = step << 1;              // 2^(e+1)
            if (mod_positive(x * x - wm, Me) != 0) x += step >> 1;
        }
        return mod_positive(x, M);
    }
    Int x = sqrt_mod_prime(wm, p);
    long long prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        Int Me = int_pow(p, prec);
        Int inv2x = inverse_mod(2 * x, Me);
        x = mod_positive(x - (x * x - wm) * inv2x, Me);
    }
    return x;
}

} // namespace detail

// p-adic root valuations of a monic irreducible quadratic h = t^2 + b t + c.
//
// Split case: both roots live in Z_p; they are recovered as (-b +- sqrt(disc))/2
// with sqrt(disc) Hensel-lifted mod p^k, and their valuations are read off the
// residues. Precision policy: start at k = 2 v_p(disc) + 2 v_p(c) + 4, confirm
// against k + 2, escalate to 2k on disagreement, and fail with a diagnostic if
// the valuations never stabilize.
//
// Inert and ramified cases have a single place of local degree 2, where the
// valuation is v_p(c)/2 (a half-integer is possible only when ramified).
inline std::vector<PlaceValuation> hensel_root_valuations(const IntPoly& h, const Int& p)
{
    if (h.degree() != 2 || !h.is_monic())
        throw std::invalid_argument("hensel_root_valuations: h must be monic quadratic");
    if (!is_probable_prime(p))
        throw std::invalid_argument("hensel_root_valuations: p must be prime");

    const Int b = h.coeff(1);
    const Int c = h.coeff(0);
    const Int disc = b * b - 4 * c;
    if (disc >= 0 && is_perfect_square(disc))
        throw std::invalid_argument("hensel_root_valuations: h is reducible over Q");

    const Int D = fundamental_discriminant(squarefree_part(disc));
    const int kro = kronecker_symbol(D, p);
    const int vc = valuation(c, p);

    if (kro <= 0) {
        if (kro < 0 && vc % 2 != 0)
            throw std::logic_error("hensel_root_valuations: odd norm valuation at an inert place");
        return {PlaceValuation{Rat(vc, 2), 2}};
    }

    // split: v_p(disc) is even since p does not divide the field discriminant
    const int vd = valuation(disc, p);
    if (vd % 2 != 0) throw std::logic_error("hensel_root_valuations: odd v_p(disc) in the split case");
    const long long s = vd / 2;
    const Int w = disc / int_pow(p, vd);

    auto valuations_at = [&](long long k) -> std::optional<std::pair<int, int>> {
        const long long prec = k + s + 3;
        const Int M = int_pow(p, prec);
        const Int pk = int_pow(p, k);
        const Int sq = mod_positive(detail::sqrt_lift(w, p, prec) * int_pow(p, s), M);
        Int roots[2];
        if (p == 2) {
            // -b +- sq is even in the split case; halve an even representative
            // mod 2^prec to get the root mod 2^(prec-1), then read mod 2^k
            Int n0 = mod_positive(-b + sq, M), n1 = mod_positive(-b - sq, M);
            if (n0 % 2 != 0 || n1 % 2 != 0) return std::nullopt;
            roots[0] = mod_positive(n0 / 2, pk);
            roots[1] = mod_positive(n1 / 2, pk);
        } else {
            const Int half = inverse_mod(2, M);
            roots[0] = mod_positive((-b + sq) * half, pk);
            roots[1] = mod_positive((-b - sq) * half, pk);
        }
        if (roots[0] == 0 || roots[1] == 0) return std::nullopt; // valuation >= k: ambiguous at this precision
        int v0 = valuation(roots[0], p);
        int v1 = valuation(roots[1], p);
        if (v0 + v1 != vc) return std::nullopt; // norm bookkeeping failed: precision too low
        return std::make_pair(std::max(v0, v1), std::min(v0, v1));
    };

    long long k = 2LL * vd + 2LL * vc + 4;
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto a = valuations_at(k);
        auto bb = valuations_at(k + 2);
        if (a && bb && *a == *bb)
            return {PlaceValuation{Rat(a->first), 1}, PlaceValuation{Rat(a->second), 1}};
        k *= 2;
    }
    throw std::domain_error("hensel_root_valuations: root valuations did not stabilize for h = " +
                            h.to_string() + " at p = " + to_dec(p));
}

} // namespace weilaut
