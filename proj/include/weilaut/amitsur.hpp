#pragma once

#include "weilaut/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace weilaut {

// Metacyclic presentation <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r> with
// s = gcd(r-1, m), t = m/s, n = ord_m(r). Convention: r = 1 (mod m) gives the
// cyclic group of order m with n = s = 1 (and t = m).
struct GmrPresentation {
    long long m = 1;
    long long r = 1;
    long long s = 1;
    long long t = 1;
    long long n = 1;

    static GmrPresentation make(long long m, long long r)
    {
        if (m < 1) throw std::invalid_argument("GmrPresentation: m must be >= 1");
        long long rr = ((r % m) + m) % m;
        if (std::gcd(rr == 0 ? m : rr, m) != 1)
            throw std::invalid_argument("GmrPresentation: gcd(m, r) must be 1");
        if (m == 1) rr = 1;
        GmrPresentation g;
        g.m = m;
        g.r = rr == 0 ? 1 : rr;
        if (g.r == 1 || g.r % m == 1) {
            g.n = 1;
            g.s = 1;
            g.t = m;
        } else {
            g.s = std::gcd(g.r - 1, m);
            g.t = m / g.s;
            g.n = mult_order(Int(g.r), Int(m));
        }
        return g;
    }

    bool is_cyclic() const { return n == 1 && s == 1; }
    long long order() const { return m * n; }

    // "Dic" when the presentation is the dicyclic one (r = -1, b^2 = a^(m/2))
    std::string display() const
    {
        std::string base = "G(" + std::to_string(m) + "," + std::to_string(r) + ")";
        if (is_cyclic()) return base + " = Z/" + std::to_string(m);
        if (n == 2 && (r + 1) % m == 0) base += " = Dic_" + std::to_string(m * n);
        return base;
    }
};

inline bool condition_C1(const GmrPresentation& g)
{
    return std::gcd(g.n, g.t) == 1 && std::gcd(g.s, g.t) == 1;
}

inline bool condition_C2(const GmrPresentation& g)
{
    if (g.n % 2 != 0 || (g.n / 2) % 2 == 0) return false;
    if (g.s % 2 != 0 || (g.s / 2) % 2 == 0) return false;
    long long m = g.m;
    int alpha = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++alpha;
    }
    if (alpha < 2 || m % 2 == 0) return false; // m = 2^alpha * m', m' odd
    if (std::gcd(g.n, g.t) != 2 || std::gcd(g.s, g.t) != 2) return false;
    long long mod = 1LL << alpha;
    return ((g.r + 1) % mod) == 0;
}

struct PrimeData {
    long long p;
    long long alpha;   // p^alpha exactly divides m
    long long n_p;     // ord of r mod m p^-alpha
    long long delta_p; // ord of p mod m p^-alpha
};

inline PrimeData prime_data(const GmrPresentation& g, long long p)
{
    if (p < 2 || g.m % p != 0) throw std::invalid_argument("prime_data: p must divide m");
    long long alpha = 0, rest = g.m;
    while (rest % p == 0) {
        rest /= p;
        ++alpha;
    }
    return {p, alpha, mult_order(Int(g.r), Int(rest)), mult_order(Int(p), Int(rest))};
}

struct TraceEntry {
    long long q = 0; // prime dividing n under examination (0 for global entries)
    long long p = 0; // prime dividing m under examination
    std::string clause;
    bool ok = false;
    std::string note;
};

struct EmbedResult {
    bool embeddable = false;
    std::string via; // "cyclic", "C-fail", "(1)", "(2)"
    std::vector<TraceEntry> trace;
};

// Amitsur's criterion for G_{m,r} to embed in a division ring:
// (C1 or C2) must hold, and then either
// (1) n = s = 2 with r = -1 (mod m), or
// (2) every prime q | n admits p | m with q not dividing n_p and
//     (a) p != 2 and gcd(q, (p^delta_p - 1)/s) = 1, or
//     (b) p = q = 2, C2, and m/4, delta_p both odd.
// Clause (a) is transcribed literally; when s does not divide p^delta_p - 1
// the pair is recorded as failing its divisibility precondition.
inline EmbedResult embeddable_in_division_ring(const GmrPresentation& g)
{
    EmbedResult res;
    if (g.is_cyclic()) {
        res.embeddable = true;
        res.via = "cyclic";
        res.trace.push_back({0, 0, "cyclic", true, "r = 1 (mod m): cyclic groups embed"});
        return res;
    }

    bool c1 = condition_C1(g), c2 = condition_C2(g);
    res.trace.push_back({0, 0, "C1", c1, "gcd(n,t) = " + std::to_string(std::gcd(g.n, g.t)) +
                                             ", gcd(s,t) = " + std::to_string(std::gcd(g.s, g.t))});
    res.trace.push_back({0, 0, "C2", c2, c2 ? "2-part conditions hold" : "2-part conditions fail"});
    if (!c1 && !c2) {
        res.via = "C-fail";
        return res;
    }

    if (g.n == 2 && g.s == 2 && (g.r + 1) % g.m == 0) {
        res.via = "(1)";
        res.embeddable = true;
        res.trace.push_back({0, 0, "(1)", true, "n = s = 2 and r = -1 (mod m)"});
        return res;
    }
    res.trace.push_back({0, 0, "(1)", false, "n = s = 2 with r = -1 (mod m) does not hold"});

    std::vector<long long> qs, ps;
    for (const auto& [q, e] : factorize(Int(g.n))) qs.push_back(to_long_checked(q, "q | n"));
    for (const auto& [p, e] : factorize(Int(g.m))) ps.push_back(to_long_checked(p, "p | m"));

    bool all_q_ok = true;
    for (long long q : qs) {
        bool found = false;
        for (long long p : ps) {
            PrimeData pd = prime_data(g, p);
            if (pd.n_p % q == 0) {
                res.trace.push_back({q, p, "(2)", false, "q divides n_p = " + std::to_string(pd.n_p)});
                continue;
            }
            if (p != 2) {
                Int pd1 = int_pow(Int(p), pd.delta_p) - 1;
                if (pd1 % g.s != 0) {
                    res.trace.push_back({q, p, "(2a)", false,
                                         "divisibility precondition: s = " + std::to_string(g.s) +
                                             " does not divide p^delta_p - 1 = " + to_dec(pd1)});
                    continue;
                }
                Int quo = pd1 / g.s;
                bool ok = int_gcd(Int(q), quo) == 1;
                res.trace.push_back({q, p, "(2a)", ok,
                                     "gcd(q, (p^delta_p - 1)/s) = gcd(" + std::to_string(q) + ", " +
                                         to_dec(quo) + ")"});
                if (ok) {
                    found = true;
                    break;
                }
            } else {
                bool ok = q == 2 && c2 && (g.m / 4) % 2 == 1 && pd.delta_p % 2 == 1;
                res.trace.push_back({q, p, "(2b)", ok,
                                     "p = 2 branch: needs q = 2, C2, m/4 and delta_2 odd (delta_2 = " +
                                         std::to_string(pd.delta_p) + ")"});
                if (ok) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            all_q_ok = false;
            res.trace.push_back({q, 0, "(2)", false, "no prime p | m works for q = " + std::to_string(q)});
        }
    }
    res.embeddable = all_q_ok;
    res.via = all_q_ok ? "(2)" : "(2)-fail";
    return res;
}

// All r in (Z/m)^x of order n_target, optionally keeping only presentations
// that embed in a division ring. Deterministic ascending order.
inline std::vector<long long> gmr_candidates(long long m, long long n_target, bool embeddable_only)
{
    if (m < 1) throw std::invalid_argument("gmr_candidates: m must be >= 1");
    if (m == 1) return n_target == 1 ? std::vector<long long>{1} : std::vector<long long>{};
    std::vector<long long> out;
    for (long long r = 1; r < m; ++r) {
        if (std::gcd(r, m) != 1) continue;
        if (mult_order(Int(r), Int(m)) != n_target) continue;
        if (embeddable_only && !embeddable_in_division_ring(GmrPresentation::make(m, r)).embeddable)
            continue;
        out.push_back(r);
    }
    return out;
}

// Even m with phi(m) | 2g. phi(m) >= sqrt(m/2), so phi(m) <= 2g bounds m by 8g^2.
inline std::vector<long long> even_m_candidates(long long g)
{
    if (g < 3 || g % 2 == 0 || !is_probable_prime(Int(g)))
        throw std::invalid_argument("even_m_candidates: g must be an odd prime");
    std::vector<long long> out;
    for (long long m = 2; m <= 8 * g * g; m += 2)
        if ((2 * g) % totient_ll(m) == 0) out.push_back(m);
    return out;
}

struct ExclusionCase {
    long long m;
    long long group_order;        // m * g for n = g
    bool g_squared_divides;       // g^2 | m g, i.e. g | m
    std::vector<long long> rs_of_order_g;  // candidates with ord(r) = g (only if the above)
    std::vector<long long> embeddable_rs;  // those passing Amitsur (must be empty)
    bool excluded;
};

struct ExclusionReport {
    long long g;
    std::vector<ExclusionCase> cases;
    bool all_excluded;
};

// Non-cyclic G_{m,r} in D^x would need n = g and g^2 | |G| = m g; for each
// even-m candidate either g^2 fails to divide the order, or every r of order
// g fails the embeddability criterion.
inline ExclusionReport noncyclic_exclusion(long long g)
{
    ExclusionReport rep{g, {}, true};
    for (long long m : even_m_candidates(g)) {
        ExclusionCase c{m, m * g, (m * g) % (g * g) == 0, {}, {}, true};
        if (c.g_squared_divides) {
            c.rs_of_order_g = gmr_candidates(m, g, false);
            c.embeddable_rs = gmr_candidates(m, g, true);
            c.excluded = c.embeddable_rs.empty();
        }
        rep.all_excluded = rep.all_excluded && c.excluded;
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

struct GroupId {
    enum class Kind { Cyclic, Gmr, TstarProduct, Ostar, Istar };

    Kind kind = Kind::Cyclic;
    long long order = 1;
    long long m = 0, r = 0; // for Gmr

    static GroupId cyclic(long long n) { return {Kind::Cyclic, n, 0, 0}; }
    static GroupId gmr(long long m, long long r)
    {
        auto g = GmrPresentation::make(m, r);
        return {Kind::Gmr, g.order(), m, g.r};
    }
    // Exceptional embeddable types; never produced over imaginary quadratic
    // centers, kept only as named constants with a fixed exclusion verdict.
    static GroupId tstar_product(long long gmr_order) { return {Kind::TstarProduct, 24 * gmr_order, 0, 0}; }
    static GroupId ostar() { return {Kind::Ostar, 48, 0, 0}; }
    static GroupId istar() { return {Kind::Istar, 120, 0, 0}; }

    std::string display() const
    {
        switch (kind) {
        case Kind::Cyclic: return "Z/" + std::to_string(order);
        case Kind::Gmr: return GmrPresentation::make(m, r).display();
        case Kind::TstarProduct: return "T* x G_{m,r} (order " + std::to_string(order) + ")";
        case Kind::Ostar: return "O* (order 48)";
        case Kind::Istar: return "I* (order 120)";
        }
        return "?";
    }

    friend bool operator==(const GroupId& a, const GroupId& b)
    {
        return a.kind == b.kind && a.order == b.order && a.m == b.m && a.r == b.r;
    }
};

// Fixed verdict for the exceptional embeddable types. They exist inside
// rational quaternion algebras; a division algebra of odd prime degree over
// an imaginary quadratic center admits only the cyclic and metacyclic types,
// so they never enter the candidate pipeline here.
inline std::string exceptional_type_verdict(const GroupId& g)
{
    switch (g.kind) {
    case GroupId::Kind::TstarProduct:
    case GroupId::Kind::Ostar:
    case GroupId::Kind::Istar:
        return g.display() + ": excluded for imaginary-quadratic centers (requires a quaternionic "
                             "2-Sylow embedding that odd-prime-degree algebras over such centers do not admit)";
    default:
        throw std::invalid_argument("exceptional_type_verdict: not an exceptional type");
    }
}

// Finite groups of even order embeddable in a division algebra of odd prime
// degree g over an imaginary quadratic field: exactly the cyclic groups Z/m
// for the even-m candidates. Non-cyclic metacyclic candidates are excluded by
// noncyclic_exclusion; the exceptional types carry a fixed exclusion verdict.
inline std::vector<GroupId> even_order_candidates(long long g)
{
    ExclusionReport rep = noncyclic_exclusion(g);
    if (!rep.all_excluded)
        throw std::logic_error("even_order_candidates: a non-cyclic candidate survived exclusion");
    std::vector<GroupId> out;
    for (long long m : even_m_candidates(g)) out.push_back(GroupId::cyclic(m));
    return out;
}

} // namespace weilaut
