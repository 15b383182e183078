#pragma once

#include "weilaut/numtheory.hpp"

#include <string>
#include <vector>

namespace weilaut {

// Q(zeta_m) = Q(zeta_{m/2}) for m = 2 mod 4; canonical conductors avoid that alias.
inline long long normalize_conductor(long long m)
{
    if (m < 1) throw std::invalid_argument("normalize_conductor: m must be >= 1");
    return m % 4 == 2 ? m / 2 : m;
}

enum class FieldKind { Rational, RealQuadratic, ImagQuadratic, Cyclotomic };

// Symbolic number field: Q, Q(sqrt(d)) for squarefree d, or Q(zeta_m) with a
// normalized conductor. Fields are descriptors only; elements never appear,
// everything downstream argues through degrees, splitting data and torsion.
class FieldDescriptor {
public:
    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::Rational, 0); }

    static FieldDescriptor quadratic(const Int& d)
    {
        if (d == 0 || d == 1 || !is_squarefree(d))
            throw std::invalid_argument("FieldDescriptor: d must be squarefree, != 0, 1");
        return FieldDescriptor(d < 0 ? FieldKind::ImagQuadratic : FieldKind::RealQuadratic, d);
    }

    static FieldDescriptor imag_quadratic(const Int& d)
    {
        FieldDescriptor f = quadratic(d);
        if (f.kind() != FieldKind::ImagQuadratic)
            throw std::invalid_argument("FieldDescriptor: d must be negative");
        return f;
    }

    // normalizes the conductor; m with Q(zeta_m) = Q collapses to the rational field
    static FieldDescriptor cyclotomic(long long m)
    {
        long long mm = normalize_conductor(m);
        if (mm <= 2) return rational();
        return FieldDescriptor(FieldKind::Cyclotomic, Int(mm));
    }

    FieldKind kind() const { return kind_; }
    bool is_quadratic() const { return kind_ == FieldKind::RealQuadratic || kind_ == FieldKind::ImagQuadratic; }

    const Int& quadratic_d() const
    {
        if (!is_quadratic()) throw std::invalid_argument("quadratic_d: not a quadratic field");
        return v_;
    }

    long long conductor() const
    {
        if (kind_ != FieldKind::Cyclotomic) throw std::invalid_argument("conductor: not a cyclotomic field");
        return to_long_checked(v_, "conductor");
    }

    Int discriminant() const
    {
        if (kind_ == FieldKind::Rational) return 1;
        if (is_quadratic()) return fundamental_discriminant(v_);
        throw std::invalid_argument("discriminant: supported for Q and quadratic fields only");
    }

    long long degree() const
    {
        switch (kind_) {
        case FieldKind::Rational: return 1;
        case FieldKind::RealQuadratic:
        case FieldKind::ImagQuadratic: return 2;
        case FieldKind::Cyclotomic: return totient_ll(conductor());
        }
        throw std::logic_error("degree: bad kind");
    }

    bool is_totally_imaginary() const
    {
        return kind_ == FieldKind::ImagQuadratic || kind_ == FieldKind::Cyclotomic;
    }

    std::string display() const
    {
        switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::RealQuadratic:
        case FieldKind::ImagQuadratic: return "Q(sqrt(" + to_dec(v_) + "))";
        case FieldKind::Cyclotomic: return "Q(zeta_" + to_dec(v_) + ")";
        }
        throw std::logic_error("display: bad kind");
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b)
    {
        return a.kind_ == b.kind_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

private:
    FieldDescriptor(FieldKind k, Int v) : kind_(k), v_(std::move(v)) {}

    FieldKind kind_;
    Int v_; // d for quadratics, conductor for cyclotomics, 0 for Q
};

enum class SplitType { Split, Inert, Ramified };

struct QuadraticSplitting {
    SplitType type;
    long long ramification;  // e
    long long residue_degree; // f
    long long num_primes;     // g = 2 / (e f)
};

inline QuadraticSplitting splitting_in_quadratic(const Int& p, const FieldDescriptor& K)
{
    if (!K.is_quadratic()) throw std::invalid_argument("splitting_in_quadratic: K must be quadratic");
    switch (kronecker_symbol(K.discriminant(), p)) {
    case 1: return {SplitType::Split, 1, 1, 2};
    case -1: return {SplitType::Inert, 1, 2, 1};
    default: return {SplitType::Ramified, 2, 1, 1};
    }
}

inline const char* split_type_name(SplitType t)
{
    switch (t) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    default: return "ramified";
    }
}

struct CyclotomicSplitting {
    long long e_ram;
    long long f_res;
    long long num_primes; // phi(m) / (e f)
};

// Splitting of p in Q(zeta_m): with m = p^alpha * m', e = phi(p^alpha) and
// f = ord of p mod m'. Accepts un-normalized m (the data only depends on the field).
inline CyclotomicSplitting cyclotomic_residue_degree(const Int& p, long long m)
{
    if (!is_probable_prime(p)) throw std::invalid_argument("cyclotomic_residue_degree: p must be prime");
    long long mm = normalize_conductor(m);
    Int rest = mm;
    Int palpha = 1;
    while (rest % p == 0) {
        rest /= p;
        palpha *= p;
    }
    long long e = to_long_checked(totient(palpha), "e_ram");
    long long f = mult_order(p, rest);
    long long phi = totient_ll(mm);
    if (phi % (e * f) != 0) throw std::logic_error("cyclotomic_residue_degree: e*f does not divide phi(m)");
    return {e, f, phi / (e * f)};
}

// Q(sqrt(d)) lies in Q(zeta_m) iff |disc| divides m (conductor-discriminant).
inline bool contains_quadratic(long long m, const FieldDescriptor& K)
{
    if (!K.is_quadratic()) throw std::invalid_argument("contains_quadratic: K must be quadratic");
    if (m < 1) throw std::invalid_argument("contains_quadratic: m must be >= 1");
    Int ad = int_abs(K.discriminant());
    return Int(m) % ad == 0;
}

// [K(zeta_j) : K] for imaginary quadratic K.
inline long long relative_degree_adjoin_zeta(const FieldDescriptor& K, long long j)
{
    if (K.kind() != FieldKind::ImagQuadratic)
        throw std::invalid_argument("relative_degree_adjoin_zeta: K must be imaginary quadratic");
    long long jj = normalize_conductor(j);
    long long phi = totient_ll(jj);
    return contains_quadratic(jj, K) ? phi / 2 : phi;
}

// Multiset of local degrees [L_P : K_p] over all primes p | p of K and P | p
// of L = K(zeta_j). Supported exactly when L itself is a cyclotomic field,
// i.e. phi(lcm(j', |disc K|)) = [L : Q]; the splitting pipeline only reaches
// this with [L : K] odd, which forces disc K | j' and hence L = Q(zeta_j').
inline std::vector<long long> local_degrees_over(const FieldDescriptor& K, long long j, const Int& p)
{
    long long delta = relative_degree_adjoin_zeta(K, j);
    QuadraticSplitting sk = splitting_in_quadratic(p, K);
    if (delta == 1) return std::vector<long long>(static_cast<size_t>(sk.num_primes), 1);

    long long jj = normalize_conductor(j);
    Int lcm_c = int_lcm(Int(jj), int_abs(K.discriminant()));
    long long jcomp = normalize_conductor(to_long_checked(lcm_c, "compositum conductor"));
    if (totient_ll(jcomp) != 2 * delta)
        throw std::domain_error("local_degrees_over: K(zeta_" + std::to_string(j) +
                                ") is not a cyclotomic field over " + K.display() +
                                "; this compositum is out of scope");
    CyclotomicSplitting sl = cyclotomic_residue_degree(p, jcomp);
    long long num = sl.e_ram * sl.f_res;
    long long den = sk.ramification * sk.residue_degree;
    if (num % den != 0)
        throw std::logic_error("local_degrees_over: incompatible (e, f) data in the tower");
    return std::vector<long long>(static_cast<size_t>(sl.num_primes), num / den);
}

// Unit group of the ring of integers as Z^rank x Z/torsion.
struct UnitGroupShape {
    long long rank;
    long long torsion_order;

    friend bool operator==(const UnitGroupShape& a, const UnitGroupShape& b)
    {
        return a.rank == b.rank && a.torsion_order == b.torsion_order;
    }
};

inline UnitGroupShape unit_group_shape(const FieldDescriptor& F)
{
    switch (F.kind()) {
    case FieldKind::ImagQuadratic:
        if (F.quadratic_d() == -1) return {0, 4};
        if (F.quadratic_d() == -3) return {0, 6};
        return {0, 2};
    case FieldKind::Cyclotomic: {
        long long m = F.conductor();
        long long phi = totient_ll(m);
        long long torsion = m % 2 == 0 ? m : 2 * m;
        return {phi / 2 - 1, torsion};
    }
    default:
        throw std::invalid_argument("unit_group_shape: fundamental units of real fields are out of scope");
    }
}

// Every finite subgroup of Z^rank x Z/t embeds in the (cyclic) torsion part,
// so the torsion order bounds every finite subgroup of the unit group.
inline long long torsion_subgroup_order(const UnitGroupShape& s) { return s.torsion_order; }

} // namespace weilaut
