#pragma once

#include "weilaut/fields.hpp"
#include "weilaut/hensel.hpp"
#include "weilaut/poly.hpp"
#include "weilaut/rational.hpp"

#include <string>
#include <vector>

namespace weilaut {

struct NotWeilNumberError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation lands outside the two endomorphism-algebra types
// that are possible in odd prime dimension; reaching it would falsify the
// classification this library reproduces, so it is never swallowed.
struct ClassificationContradictionError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class WeilForm { Quadratic, ZetaPower };

// A q-Weil number pi, carried by its minimal polynomial h over Q.
// Supported shapes: quadratic pi (plus the degenerate rational pi = +-sqrt(q))
// and pi = p^(a/2) * zeta_m for even a. These are the only shapes the
// odd-prime-dimension classification ever instantiates.
struct WeilNumber {
    Int p;
    long long a = 1;
    Int q;
    IntPoly h;
    WeilForm form = WeilForm::Quadratic;
    long long zeta_m = 0; // the m of pi = p^(a/2) zeta_m; 0 for quadratic form

    // pi a root of t^2 + b t + q
    static WeilNumber quadratic(const Int& b, const Int& q)
    {
        auto pp = prime_power_decompose(q);
        if (!pp) throw std::invalid_argument("WeilNumber: q = " + to_dec(q) + " is not a prime power");
        if (b * b > 4 * q)
            throw NotWeilNumberError("not a Weil number: real roots of wrong modulus (b^2 > 4q)");
        if (b * b == 4 * q)
            throw std::invalid_argument("WeilNumber: t^2 + bt + q is reducible (zero discriminant)");
        WeilNumber w;
        w.p = pp->first;
        w.a = pp->second;
        w.q = q;
        w.h = IntPoly({q, b, 1});
        w.form = WeilForm::Quadratic;
        return w;
    }

    // pi = p^(a/2) * zeta_m; minimal polynomial c^phi(m) * Phi_m(t/c), c = p^(a/2)
    static WeilNumber zeta(long long m, const Int& p, long long a)
    {
        if (m < 1) throw std::invalid_argument("WeilNumber: m must be >= 1");
        if (a < 2 || a % 2 != 0) throw std::invalid_argument("WeilNumber: a must be a positive even integer");
        if (!is_probable_prime(p)) throw std::invalid_argument("WeilNumber: p must be prime");
        Int c = int_pow(p, a / 2);
        IntPoly phi = cyclotomic_poly(m);
        std::vector<Int> coeffs(static_cast<size_t>(phi.degree()) + 1);
        for (long long i = 0; i <= phi.degree(); ++i)
            coeffs[static_cast<size_t>(i)] = phi.coeff(static_cast<size_t>(i)) * int_pow(c, phi.degree() - i);
        WeilNumber w;
        w.p = p;
        w.a = a;
        w.q = int_pow(p, a);
        w.h = IntPoly(std::move(coeffs));
        w.form = WeilForm::ZetaPower;
        w.zeta_m = m;
        return w;
    }

    // general entry point for polynomial input (CLI); degree 1 and 2 only
    static WeilNumber from_poly(const std::vector<Int>& coeffs, const Int& q)
    {
        IntPoly h(coeffs);
        if (h.degree() < 1) throw std::invalid_argument("WeilNumber: polynomial must have degree >= 1");
        if (!h.is_monic()) throw std::invalid_argument("WeilNumber: polynomial must be monic");
        auto pp = prime_power_decompose(q);
        if (!pp) throw std::invalid_argument("WeilNumber: q = " + to_dec(q) + " is not a prime power");
        if (h.degree() > 2)
            throw std::invalid_argument("WeilNumber: only degree <= 2 polynomial input is supported "
                                        "(use the zeta form for CM Weil numbers)");
        if (!weil_functional_equation(h, q))
            throw NotWeilNumberError("not a " + to_dec(q) + "-Weil number: " + h.to_string());
        if (h.degree() == 2) {
            Int disc = h.coeff(1) * h.coeff(1) - 4 * h.coeff(0);
            if (disc >= 0 && is_perfect_square(disc))
                throw std::invalid_argument("WeilNumber: " + h.to_string() + " is reducible over Q");
        }
        WeilNumber w;
        w.p = pp->first;
        w.a = pp->second;
        w.q = q;
        w.h = h;
        w.form = WeilForm::Quadratic;
        return w;
    }

    Int discriminant() const
    {
        if (h.degree() != 2) throw std::invalid_argument("discriminant: not a quadratic Weil number");
        return h.coeff(1) * h.coeff(1) - 4 * h.coeff(0);
    }

    friend bool operator==(const WeilNumber& x, const WeilNumber& y)
    {
        // conjugacy of Weil numbers is equality of minimal polynomials
        return x.q == y.q && x.h == y.h;
    }
};

// Center K = Q[pi] of the endomorphism algebra.
inline FieldDescriptor center_field(const WeilNumber& w)
{
    if (w.form == WeilForm::ZetaPower) return FieldDescriptor::cyclotomic(w.zeta_m);
    if (w.h.degree() == 1) return FieldDescriptor::rational();
    Int disc = w.discriminant();
    if (disc < 0) return FieldDescriptor::imag_quadratic(squarefree_part(disc));
    return FieldDescriptor::quadratic(squarefree_part(w.q)); // h = t^2 - q, pi = sqrt(q)
}

enum class PlaceKind { FiniteAboveP, FiniteAwayFromP, RealPlace, ComplexPlace };

struct PlaceInvariant {
    PlaceKind kind;
    int index = 0;       // distinguishes places of the same kind
    Rat value;           // reduced, in [0, 1)
    long long local_degree = 1;
};

inline std::string place_display(const PlaceInvariant& pi)
{
    switch (pi.kind) {
    case PlaceKind::FiniteAboveP: return "v" + std::to_string(pi.index) + "|p";
    case PlaceKind::FiniteAwayFromP: return "away-from-p";
    case PlaceKind::RealPlace: return "real" + std::to_string(pi.index);
    case PlaceKind::ComplexPlace: return "complex";
    }
    return "?";
}

// Brauer invariants of End^0: (ord_v(pi)/ord_v(q)) * [K_v : Q_p] mod 1 above p,
// 1/2 at real places, 0 everywhere else. The ratio is computed with the
// valuation normalized by v(p) = 1, which makes it independent of the choice
// of uniformizer. One representative entry stands for all places away from p
// (and all complex places); they carry invariant 0.
inline std::vector<PlaceInvariant> local_invariants(const WeilNumber& w)
{
    std::vector<PlaceInvariant> out;
    FieldDescriptor K = center_field(w);
    const Rat inv_q_ord(1, w.a); // 1 / ord(q) since ord(p) = 1

    switch (K.kind()) {
    case FieldKind::Rational: {
        // pi = +-p^(a/2)
        Int pi_abs = int_abs(w.h.coeff(0));
        Rat ratio = Rat(valuation(pi_abs, w.p)) * inv_q_ord;
        out.push_back({PlaceKind::FiniteAboveP, 0, ratio.mod1(), 1});
        out.push_back({PlaceKind::FiniteAwayFromP, 0, Rat(0), 1});
        out.push_back({PlaceKind::RealPlace, 0, Rat(1, 2), 1});
        return out;
    }
    case FieldKind::RealQuadratic: {
        // pi = +-sqrt(q), a odd, p ramified in Q(sqrt(p...))
        Rat ratio(1, 2); // v(pi) = a/2 over v(q) = a
        out.push_back({PlaceKind::FiniteAboveP, 0, (ratio * Rat(2)).mod1(), 2});
        out.push_back({PlaceKind::FiniteAwayFromP, 0, Rat(0), 1});
        out.push_back({PlaceKind::RealPlace, 0, Rat(1, 2), 1});
        out.push_back({PlaceKind::RealPlace, 1, Rat(1, 2), 1});
        return out;
    }
    case FieldKind::ImagQuadratic: {
        auto places = hensel_root_valuations(w.h, w.p);
        int idx = 0;
        for (const auto& pv : places) {
            Rat value = (pv.valuation * inv_q_ord * Rat(pv.local_degree)).mod1();
            out.push_back({PlaceKind::FiniteAboveP, idx++, value, pv.local_degree});
        }
        out.push_back({PlaceKind::FiniteAwayFromP, 0, Rat(0), 1});
        out.push_back({PlaceKind::ComplexPlace, 0, Rat(0), 1});
        return out;
    }
    case FieldKind::Cyclotomic: {
        // ord(pi)/ord(q) = 1/2 at every place above p since pi = p^(a/2) zeta
        CyclotomicSplitting s = cyclotomic_residue_degree(w.p, K.conductor());
        long long ldeg = s.e_ram * s.f_res;
        Rat value = (Rat(1, 2) * Rat(ldeg)).mod1();
        for (long long i = 0; i < s.num_primes; ++i)
            out.push_back({PlaceKind::FiniteAboveP, static_cast<int>(i), value, ldeg});
        out.push_back({PlaceKind::FiniteAwayFromP, 0, Rat(0), 1});
        out.push_back({PlaceKind::ComplexPlace, 0, Rat(0), 1});
        return out;
    }
    }
    throw std::logic_error("local_invariants: bad field kind");
}

// Index of the division algebra: least common denominator of the invariants.
inline long long division_index(const std::vector<PlaceInvariant>& invs)
{
    Int l = 1;
    for (const auto& pi : invs) l = int_lcm(l, pi.value.den);
    return to_long_checked(l, "division_index");
}

// g with d e = 2g, where e = [Q(pi) : Q] and d is the division index.
inline long long dimension(const WeilNumber& w)
{
    long long e = center_field(w).degree();
    long long d = division_index(local_invariants(w));
    if ((d * e) % 2 != 0) throw std::logic_error("dimension: d*e is odd");
    return d * e / 2;
}

enum class AlbertType { I, II, III, IV };
enum class EndoShape { CMField, DivisionAlgebraOverImagQuadratic };

// Numerical restriction on (e0, e, d, g) from Albert's classification.
inline bool albert_table1_check(AlbertType type, long long e0, long long e, long long d, long long g,
                                bool char_p)
{
    switch (type) {
    case AlbertType::I: return g % e == 0;
    case AlbertType::II: return g % (2 * e) == 0;
    case AlbertType::III: return char_p ? g % e == 0 : g % (2 * e) == 0;
    case AlbertType::IV: return char_p ? g % (e0 * d) == 0 : g % (e0 * d * d) == 0;
    }
    throw std::logic_error("albert_table1_check: bad type");
}

struct EndoAlgebra {
    FieldDescriptor center;
    long long e; // [K : Q]
    long long d; // index over the center
    long long g; // dimension, d e = 2g
    Int p;
    Int q;
    std::vector<PlaceInvariant> invariants;
    AlbertType albert_type;
    EndoShape shape;
    std::vector<std::string> notes; // exclusion/constraint trail for certificates
};

// The two possible endomorphism algebras in odd prime dimension g:
// a CM-field of degree 2g, or a division algebra of degree g over an
// imaginary quadratic field. Anything else raises ClassificationContradictionError.
inline EndoAlgebra classify_endo(const WeilNumber& w)
{
    FieldDescriptor K = center_field(w);
    auto invs = local_invariants(w);
    long long e = K.degree();
    long long d = division_index(invs);
    long long g = d * e / 2;

    if (g < 3 || g % 2 == 0 || !is_probable_prime(Int(g)))
        throw std::invalid_argument("classify_endo: dimension g = " + std::to_string(g) +
                                    " is not an odd prime; the two-type classification does not apply");
    if (!K.is_totally_imaginary())
        throw std::invalid_argument("classify_endo: degenerate real Weil number refused for odd prime g");

    EndoAlgebra alg{K, e, d, g, w.p, w.q, invs, AlbertType::IV, EndoShape::CMField, {}};
    alg.notes.push_back("Type III excluded: the center is generated by a Weil number, so a totally real "
                        "center has degree at most 2 < g; combined with the Albert-type divisibility bounds this rules the type out");
    if (d == 1) {
        if (e != 2 * g)
            throw ClassificationContradictionError("classify_endo: commutative algebra with e = " + std::to_string(e) +
                                          " != 2g; outside the two-type classification");
        alg.shape = EndoShape::CMField;
        alg.notes.push_back("CM-field of degree 2g = " + std::to_string(2 * g) +
                            " over Q (Type IV, d = 1, e0 = g; char-p divisibility bound: e0*d = g divides g)");
    } else if (e == 2 && d == g && K.kind() == FieldKind::ImagQuadratic) {
        alg.shape = EndoShape::DivisionAlgebraOverImagQuadratic;
        alg.notes.push_back("central division algebra of degree g = " + std::to_string(g) + " over " +
                            K.display() + " (Type IV, e0 = 1; char-p divisibility bound: e0*d = g divides g)");
    } else {
        throw ClassificationContradictionError("classify_endo: (e, d) = (" + std::to_string(e) + ", " +
                                      std::to_string(d) + ") with g = " + std::to_string(g) +
                                      " matches neither possible type");
    }
    if (!albert_table1_check(AlbertType::IV, e / 2, e, d, g, true))
        throw ClassificationContradictionError("classify_endo: Type IV divisibility constraint e0*d | g fails");
    return alg;
}

struct CommutativityFlags {
    bool is_commutative;          // End^0 = Q[pi], i.e. d = 1
    bool is_supersingular_rational; // Q[pi] = Q, i.e. deg h = 1
};

inline CommutativityFlags commutativity_flags(const WeilNumber& w)
{
    return {division_index(local_invariants(w)) == 1, w.h.degree() == 1};
}

// Characteristic polynomial of Frobenius, f = h^d.
inline IntPoly frobenius_char_poly(const WeilNumber& w)
{
    return w.h.pow(division_index(local_invariants(w)));
}

} // namespace weilaut
