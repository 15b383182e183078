#pragma once

#include "weilaut/amitsur.hpp"
#include "weilaut/fields.hpp"
#include "weilaut/weil.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace weilaut {

// A central division algebra of odd prime degree over an imaginary quadratic
// field, described by where it ramifies. Invariant orders at conjugate places
// coincide (the invariants are negatives mod 1), so one order per rational
// prime suffices.
struct DivisionAlgebraDescriptor {
    FieldDescriptor center = FieldDescriptor::rational();
    long long degree = 1;
    struct RamifiedPrime {
        Int p;
        long long invariant_order;
    };
    std::vector<RamifiedPrime> ramified;

    static DivisionAlgebraDescriptor from_endo(const EndoAlgebra& alg)
    {
        if (alg.shape != EndoShape::DivisionAlgebraOverImagQuadratic)
            throw std::invalid_argument("DivisionAlgebraDescriptor: algebra is not of division type");
        DivisionAlgebraDescriptor d;
        d.center = alg.center;
        d.degree = alg.d;
        long long order = 0;
        for (const auto& pi : alg.invariants) {
            if (pi.kind != PlaceKind::FiniteAboveP || pi.value.num == 0) continue;
            long long o = to_long_checked(pi.value.den, "invariant order");
            if (alg.d % o != 0)
                throw std::logic_error("DivisionAlgebraDescriptor: invariant order does not divide the degree");
            if (order == 0)
                order = o;
            else if (order != o)
                throw std::logic_error("DivisionAlgebraDescriptor: conjugate places with different orders");
        }
        if (order > 1) d.ramified.push_back({alg.p, order});
        return d;
    }
};

struct EmbedDecision {
    bool embeds;
    std::string reason;
};

// Does Q(zeta_j) embed into D over the center K?
// [K(zeta_j):K] = 1: it already lies in the center. A proper subfield must
// have degree dividing deg(D) (double centralizer); for prime degree that
// leaves [K(zeta_j):K] = g, where embedding is equivalent to splitting:
// at every ramified place the local degree must be divisible by the order
// of the local invariant.
inline EmbedDecision cyclic_embeds_in_algebra(long long j, const DivisionAlgebraDescriptor& D)
{
    long long g = D.degree;
    long long delta = relative_degree_adjoin_zeta(D.center, j);
    if (delta == 1) return {true, "Q(zeta_" + std::to_string(j) + ") lies in the center " + D.center.display()};
    if (delta != g)
        return {false, "degree " + std::to_string(delta) + " does not divide " + std::to_string(g) +
                       " (double centralizer theorem)"};
    for (const auto& ram : D.ramified) {
        auto degs = local_degrees_over(D.center, j, ram.p);
        for (long long l : degs)
            if (l % ram.invariant_order != 0)
                return {false, "at p = " + to_dec(ram.p) + ", local degree " + std::to_string(l) +
                               " not divisible by the invariant order " + std::to_string(ram.invariant_order)};
    }
    return {true, "Q(zeta_" + std::to_string(j) + ") has degree g over the center and splits D: every local "
                  "degree at every ramified place is divisible by the invariant order"};
}

struct MaximalityCheck {
    long long candidate_order;
    bool embeds;
    std::string reason;
};

struct MaximalityResult {
    GroupId maximal = GroupId::cyclic(1);
    bool seed_is_maximal = false;
    std::vector<MaximalityCheck> checks;
};

// Z/seed is maximal among finite subgroups of D^x iff no strictly larger
// candidate from the even-order list embeds. (Any finite subgroup of D^x is
// on that list, and one properly containing Z/seed is a strictly larger
// cyclic group on it.)
inline MaximalityResult maximal_even_subgroup(const DivisionAlgebraDescriptor& D, long long seed_j)
{
    if (!cyclic_embeds_in_algebra(seed_j, D).embeds)
        throw std::invalid_argument("maximal_even_subgroup: the seed group does not embed");
    MaximalityResult res;
    res.maximal = GroupId::cyclic(seed_j);
    res.seed_is_maximal = true;
    for (const GroupId& cand : even_order_candidates(D.degree)) {
        if (cand.order <= seed_j) continue;
        EmbedDecision dec = cyclic_embeds_in_algebra(cand.order, D);
        res.checks.push_back({cand.order, dec.embeds, dec.reason});
        if (dec.embeds && res.seed_is_maximal) {
            res.seed_is_maximal = false;
            res.maximal = cand;
        }
    }
    return res;
}

// Finite subgroups of the unit group of a CM cyclotomic field are bounded by
// the torsion of the ring of integers, which is cyclic.
inline GroupId cm_automorphism_group(const FieldDescriptor& E)
{
    if (E.kind() != FieldKind::Cyclotomic)
        throw std::invalid_argument("cm_automorphism_group: E must be cyclotomic");
    return GroupId::cyclic(torsion_subgroup_order(unit_group_shape(E)));
}

enum class GCondition { AllOddPrimes, GEquals3, GAtLeast5WithSafePrime };

inline const char* g_condition_display(GCondition c)
{
    switch (c) {
    case GCondition::AllOddPrimes: return "all odd primes g";
    case GCondition::GEquals3: return "g = 3";
    case GCondition::GAtLeast5WithSafePrime: return "g >= 5 and 2g+1 prime";
    }
    return "?";
}

struct ClassificationRow {
    GroupId group;
    GCondition condition;
};

// Realizable automorphism groups of simple polarized abelian varieties of odd
// prime dimension g over finite fields.
inline std::vector<ClassificationRow> classify(long long g)
{
    if (g < 3 || g % 2 == 0 || !is_probable_prime(Int(g)))
        throw std::invalid_argument("classify: g must be an odd prime");
    std::vector<ClassificationRow> rows;
    for (const GroupId& cand : even_order_candidates(g)) {
        GCondition cond = GCondition::AllOddPrimes;
        if (cand.order > 6) cond = g == 3 ? GCondition::GEquals3 : GCondition::GAtLeast5WithSafePrime;
        rows.push_back({cand, cond});
    }
    // sanity: the candidate list must agree with the closed three-branch form
    std::vector<long long> expect{2, 4, 6};
    if (g == 3) {
        expect.push_back(14);
        expect.push_back(18);
    } else if (is_probable_prime(Int(2 * g + 1))) {
        expect.push_back(4 * g + 2);
    }
    if (rows.size() != expect.size())
        throw std::logic_error("classify: candidate enumeration disagrees with the closed form");
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].group.order != expect[i])
            throw std::logic_error("classify: candidate enumeration disagrees with the closed form");
    return rows;
}

struct ClosedClassification {
    std::vector<ClassificationRow> rows;
    std::string commentary;
};

// Dimension-3 case over an algebraically closed field of positive
// characteristic; the list coincides with the finite-field g = 3 column.
inline ClosedClassification classify_closed()
{
    ClosedClassification out;
    out.rows = classify(3);
    out.commentary =
        "over an algebraically closed base of characteristic p, the endomorphism algebra of a "
        "simple 3-fold is Q, a totally real cubic field, an imaginary quadratic field, a CM sextic "
        "field, or a degree-3 division algebra over an imaginary quadratic field (the rational "
        "quaternion algebra ramified at p and infinity needs dimension >= 5); the field cases bound "
        "torsion by degree counting and the division case is the same even-order candidate list, so "
        "the list equals the finite-field g = 3 classification";
    return out;
}

enum class Verdict { PASS, FAIL, AXIOM };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    default: return "AXIOM";
    }
}

struct CertStep {
    std::string name;
    std::string claim;
    Verdict verdict;
    std::string evidence;
};

// Machine-checked replay of one realizability construction: every arithmetic
// claim is recomputed and PASS/FAIL'd; the classical existence inputs
// (maximal order, Waterhouse representative, polarization averaging, base
// change) are recorded as AXIOM steps.
struct WitnessCertificate {
    std::string witness_id;
    long long g = 0;
    std::vector<CertStep> steps;
    bool overall = false;

    void finalize()
    {
        overall = true;
        for (const auto& s : steps)
            if (s.verdict == Verdict::FAIL) overall = false;
    }
};

namespace detail {

struct CertBuilder {
    WitnessCertificate cert;

    void check(const std::string& name, const std::string& claim, bool ok, const std::string& evidence)
    {
        cert.steps.push_back({name, claim, ok ? Verdict::PASS : Verdict::FAIL, evidence});
    }
    void axiom(const std::string& name, const std::string& claim, const std::string& evidence)
    {
        cert.steps.push_back({name, claim, Verdict::AXIOM, evidence});
    }
};

inline std::string invariants_display(const std::vector<PlaceInvariant>& invs)
{
    std::string s = "{";
    bool first = true;
    for (const auto& pi : invs) {
        if (!first) s += ", ";
        first = false;
        s += place_display(pi) + ": " + to_string(pi.value);
    }
    return s + "}";
}

inline std::vector<Rat> above_p_values(const std::vector<PlaceInvariant>& invs)
{
    std::vector<Rat> v;
    for (const auto& pi : invs)
        if (pi.kind == PlaceKind::FiniteAboveP) v.push_back(pi.value);
    std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
    return v;
}

struct QuadraticWitnessParams {
    std::string id;
    Int b;
    Int q;
    Int expected_d_field; // squarefree d of the expected center
    long long expected_g;
    long long target;     // order of the realized cyclic group
    bool closed = false;
    std::string side_condition; // non-empty for g-parameterized witnesses
    bool analogy_note = false;  // construction instantiated "by the same argument"
};

inline WitnessCertificate run_quadratic_witness(const QuadraticWitnessParams& P)
{
    CertBuilder cb;
    cb.cert.witness_id = P.id;
    cb.cert.g = P.expected_g;

    if (!P.side_condition.empty())
        cb.check("side_condition", P.side_condition, true, "g = " + std::to_string(P.expected_g));

    std::optional<WeilNumber> w;
    try {
        w = WeilNumber::quadratic(P.b, P.q);
        cb.check("weil_number",
                 "t^2 + " + to_dec(P.b) + "t + " + to_dec(P.q) + " defines a " + to_dec(P.q) + "-Weil number",
                 true,
                 "monic irreducible, discriminant " + to_dec(w->discriminant()) +
                     " < 0, constant term q: both roots have modulus sqrt(q)");
    } catch (const std::exception& e) {
        cb.check("weil_number", "the quadratic defines a Weil number", false, e.what());
        cb.cert.finalize();
        return cb.cert;
    }

    FieldDescriptor expected_K = FieldDescriptor::imag_quadratic(P.expected_d_field);
    FieldDescriptor K = center_field(*w);
    cb.check("center_field", "Q(pi) = " + expected_K.display(), K == expected_K,
             "squarefree part of the discriminant: " + K.display());

    auto invs = local_invariants(*w);
    auto above = above_p_values(invs);
    Rat hi(P.expected_g + 1, 2 * P.expected_g), lo(P.expected_g - 1, 2 * P.expected_g);
    bool inv_ok = above.size() == 2 && above[0] == hi && above[1] == lo;
    cb.check("local_invariants",
             "the invariants at the two places above p = " + to_dec(w->p) + " are {" + to_string(hi) + ", " +
                 to_string(lo) + "}, 0 elsewhere",
             inv_ok, invariants_display(invs));

    long long d = division_index(invs);
    cb.check("division_index", "the least common denominator of the invariants is d = " +
                                   std::to_string(P.expected_g),
             d == P.expected_g, "d = " + std::to_string(d));

    long long g = dimension(*w);
    cb.check("dimension", "d e = 2g with e = 2 gives g = " + std::to_string(P.expected_g),
             g == P.expected_g,
             "g = " + std::to_string(g) + "; the Frobenius characteristic polynomial h^d has degree " +
                 std::to_string(frobenius_char_poly(*w).degree()) + " = 2g");

    std::optional<DivisionAlgebraDescriptor> D;
    try {
        EndoAlgebra alg = classify_endo(*w);
        bool ok = alg.shape == EndoShape::DivisionAlgebraOverImagQuadratic;
        std::string notes;
        for (const auto& n : alg.notes) notes += (notes.empty() ? "" : "; ") + n;
        cb.check("endo_classification",
                 "End^0 is a central division algebra of degree g over the imaginary quadratic center", ok,
                 notes);
        if (ok) D = DivisionAlgebraDescriptor::from_endo(alg);
    } catch (const std::exception& e) {
        cb.check("endo_classification", "End^0 is of division type", false, e.what());
    }

    if (D) {
        long long K_torsion = torsion_subgroup_order(unit_group_shape(K));
        if (K_torsion % P.target == 0) {
            cb.check("target_embedding",
                     "zeta_" + std::to_string(P.target) + " lies in the ring of integers of the center", true,
                     "unit torsion of " + K.display() + " has order " + std::to_string(K_torsion));
        } else {
            EmbedDecision dec = cyclic_embeds_in_algebra(P.target, *D);
            cb.check("target_embedding",
                     "Q(zeta_" + std::to_string(P.target) + ") embeds into D over the center", dec.embeds,
                     dec.reason);
        }

        cb.axiom("maximal_order",
                 "D contains a maximal order O containing the ring of integers of Q(zeta_" +
                     std::to_string(P.target) + ")",
                 "maximal orders exist in any finite-dimensional semisimple Q-algebra and can be chosen "
                 "to contain a given order");
        cb.axiom("waterhouse_representative",
                 "some X' isogenous to X has End(X') = O, so Aut(X') = O^x",
                 "Honda-Tate gives a simple variety X of the computed dimension with Frobenius pi; "
                 "Waterhouse: every maximal order in its endomorphism algebra occurs as the endomorphism "
                 "ring of a variety in the isogeny class");
        cb.axiom("polarization_averaging",
                 "X' carries a polarization fixed by the order-" + std::to_string(P.target) +
                     " cyclic subgroup",
                 "average an ample line bundle over the finite group; the product is ample and invariant");
        if (P.closed)
            cb.axiom("base_change",
                     "after base change to the algebraic closure, X' stays simple and its endomorphism "
                     "ring does not grow",
                     "End over the closure is an order containing the already-maximal End(X'), hence equal "
                     "to it; simplicity is preserved for this isogeny class");

        try {
            MaximalityResult mx = maximal_even_subgroup(*D, P.target);
            std::string ev;
            for (const auto& c : mx.checks) {
                if (!ev.empty()) ev += "; ";
                ev += "Z/" + std::to_string(c.candidate_order) + (c.embeds ? " embeds: " : " blocked: ") +
                      c.reason;
            }
            if (mx.checks.empty()) ev = "no strictly larger candidate exists for g = " + std::to_string(g);
            if (P.analogy_note)
                ev += " [instantiated by the same argument as the model construction: the splitting test "
                      "runs at the characteristic p = " + to_dec(w->p) + "]";
            cb.check("maximality",
                     "Z/" + std::to_string(P.target) + " is a maximal finite subgroup of D^x",
                     mx.seed_is_maximal, ev);
        } catch (const std::exception& e) {
            cb.check("maximality",
                     "Z/" + std::to_string(P.target) + " is a maximal finite subgroup of D^x", false,
                     e.what());
        }
    }

    cb.cert.finalize();
    cb.check("conclusion",
             "Aut(X', L') = Z/" + std::to_string(P.target) + " for the polarized variety (X', L')",
             cb.cert.overall,
             cb.cert.overall ? "all arithmetic steps verified; classical existence steps recorded as axioms"
                             : "a previous step failed");
    cb.cert.finalize();
    return cb.cert;
}

struct ZetaWitnessParams {
    std::string id;
    long long m;
    Int p;
    long long a;
    long long expected_conductor;
    long long expected_g;
    long long target;
    std::string side_condition;
};

inline WitnessCertificate run_zeta_witness(const ZetaWitnessParams& P)
{
    CertBuilder cb;
    cb.cert.witness_id = P.id;
    cb.cert.g = P.expected_g;

    if (!P.side_condition.empty())
        cb.check("side_condition", P.side_condition, true, "g = " + std::to_string(P.expected_g));

    WeilNumber w = WeilNumber::zeta(P.m, P.p, P.a);
    cb.check("weil_number",
             "pi = " + to_dec(P.p) + "^" + std::to_string(P.a / 2) + " * zeta_" + std::to_string(P.m) +
                 " is a " + to_dec(w.q) + "-Weil number",
             weil_functional_equation(w.h, w.q),
             "h = " + w.h.to_string() + ", degree " + std::to_string(w.h.degree()) +
                 "; every root is sqrt(q) times a root of unity");

    FieldDescriptor expected_E = FieldDescriptor::cyclotomic(P.expected_conductor);
    FieldDescriptor E = center_field(w);
    cb.check("center_field", "Q(pi) = " + expected_E.display() + " of degree 2g", E == expected_E && E.degree() == 2 * P.expected_g,
             E.display() + ", degree " + std::to_string(E.degree()));

    auto invs = local_invariants(w);
    bool all_zero = true;
    for (const auto& pi : invs) all_zero = all_zero && pi.value.num == 0;
    cb.check("local_invariants",
             "every local invariant vanishes (no real embeddings; (1/2)[K_v:Q_p] is an integer above p)",
             all_zero, invariants_display(invs));

    long long d = division_index(invs);
    cb.check("division_index", "d = 1, so End^0 = Q(pi)", d == 1, "d = " + std::to_string(d));

    long long g = dimension(w);
    cb.check("dimension", "2g = [Q(pi) : Q] gives g = " + std::to_string(P.expected_g), g == P.expected_g,
             "g = " + std::to_string(g));

    try {
        EndoAlgebra alg = classify_endo(w);
        cb.check("endo_classification", "End^0 is a CM-field of degree 2g",
                 alg.shape == EndoShape::CMField, alg.notes.empty() ? "" : alg.notes.back());
    } catch (const std::exception& e) {
        cb.check("endo_classification", "End^0 is a CM-field of degree 2g", false, e.what());
    }

    UnitGroupShape shape = unit_group_shape(E);
    cb.check("target_embedding",
             "zeta_" + std::to_string(P.target) + " lies in the unit torsion of the ring of integers",
             shape.torsion_order % P.target == 0,
             "unit group is Z^" + std::to_string(shape.rank) + " x Z/" + std::to_string(shape.torsion_order));

    cb.axiom("maximal_order", "the ring of integers of " + E.display() + " is the maximal order of End^0",
             "rings of integers of cyclotomic fields are generated by the root of unity and are maximal");
    cb.axiom("waterhouse_representative", "some X' isogenous to X has End(X') equal to that maximal order",
             "Honda-Tate gives a simple variety X of the computed dimension with Frobenius pi; "
             "Waterhouse: every maximal order in its endomorphism algebra occurs as the endomorphism ring "
             "of a variety in the isogeny class");
    cb.axiom("polarization_averaging",
             "X' carries a polarization fixed by the order-" + std::to_string(P.target) + " cyclic subgroup",
             "average an ample line bundle over the finite group; the product is ample and invariant");

    GroupId aut = cm_automorphism_group(E);
    cb.check("maximality",
             "the maximal finite subgroup of the unit group is cyclic of order " + std::to_string(P.target),
             aut == GroupId::cyclic(P.target),
             "torsion extraction from Z^" + std::to_string(shape.rank) + " x Z/" +
                 std::to_string(shape.torsion_order) +
                 " (as abstract groups the torsion subgroup is Z/" + std::to_string(shape.torsion_order) +
                 "; the classical argument names the product of the sign subgroups with the root-of-unity "
                 "group inside the unit lattice, and both readings give the same cyclic bound)");

    cb.cert.finalize();
    cb.check("conclusion",
             "Aut(X', L') = Z/" + std::to_string(P.target) + " for the polarized variety (X', L')",
             cb.cert.overall,
             cb.cert.overall ? "all arithmetic steps verified; classical existence steps recorded as axioms"
                             : "a previous step failed");
    cb.cert.finalize();
    return cb.cert;
}

} // namespace detail

inline std::vector<std::string> witness_ids()
{
    return {"1", "2", "3", "4", "5", "6", "alt3", "alt4", "alt5",
            "closed1", "closed2", "closed3", "closed4", "closed5"};
}

inline bool witness_takes_g(const std::string& id) { return id == "6" || id == "alt3"; }

// side-condition validation for the g-parameterized witnesses
inline void validate_witness_g(const std::string& id, long long g)
{
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("witness " + id + ": " + why);
    };
    if (g < 5 || g % 2 == 0 || !is_probable_prime(Int(g)))
        bad("g = " + std::to_string(g) + " must be an odd prime >= 5");
    bool safe = is_probable_prime(Int(2 * g + 1));
    if (id == "6" && !safe) bad("2g+1 = " + std::to_string(2 * g + 1) + " must be prime");
    if (id == "alt3" && safe) bad("2g+1 = " + std::to_string(2 * g + 1) + " must be composite");
}

// Replays one realizability construction. g applies to the parameterized
// witnesses only (id 6: 2g+1 prime, default 5; alt3: 2g+1 composite, default 7).
inline WitnessCertificate verify_witness(const std::string& id, std::optional<long long> g_opt = std::nullopt)
{
    using detail::QuadraticWitnessParams;
    using detail::ZetaWitnessParams;

    auto quadratic_by_index = [&](int idx, bool closed) {
        static const struct {
            const char* b;
            const char* q;
            long long d;
            long long target;
        } table[5] = {
            {"5", "125", -19, 2},
            {"10", "125", -1, 4},
            {"19", "6859", -3, 6},
            {"44", "1331", -7, 14},
            {"7", "343", -3, 18},
        };
        const auto& t = table[idx - 1];
        QuadraticWitnessParams P;
        P.id = (closed ? "closed" : "") + std::to_string(idx);
        P.b = Int(t.b);
        P.q = Int(t.q);
        P.expected_d_field = t.d;
        P.expected_g = 3;
        P.target = t.target;
        P.closed = closed;
        P.analogy_note = idx == 5 || (closed && idx >= 2);
        return detail::run_quadratic_witness(P);
    };

    if (id == "1" || id == "2" || id == "3" || id == "4" || id == "5")
        return quadratic_by_index(id[0] - '0', false);
    if (id.rfind("closed", 0) == 0 && id.size() == 7 && id[6] >= '1' && id[6] <= '5')
        return quadratic_by_index(id[6] - '0', true);

    if (id == "6") {
        long long g = g_opt.value_or(5);
        validate_witness_g(id, g);
        ZetaWitnessParams P;
        P.id = id;
        P.m = 4 * g + 2;
        P.p = 2 * g + 1;
        P.a = 2;
        P.expected_conductor = 2 * g + 1;
        P.expected_g = g;
        P.target = 4 * g + 2;
        P.side_condition = "g >= 5 is an odd prime and 2g+1 = " + std::to_string(2 * g + 1) + " is prime";
        return detail::run_zeta_witness(P);
    }
    if (id == "alt3") {
        long long g = g_opt.value_or(7);
        validate_witness_g(id, g);
        QuadraticWitnessParams P;
        P.id = id;
        P.b = int_pow(7, (g - 1) / 2);
        P.q = int_pow(7, g);
        P.expected_d_field = -3;
        P.expected_g = g;
        P.target = 6;
        P.side_condition =
            "g >= 5 is an odd prime and 2g+1 = " + std::to_string(2 * g + 1) + " is composite";
        return detail::run_quadratic_witness(P);
    }
    if (id == "alt4") {
        ZetaWitnessParams P{"alt4", 14, 7, 2, 7, 3, 14, ""};
        return detail::run_zeta_witness(P);
    }
    if (id == "alt5") {
        ZetaWitnessParams P{"alt5", 18, 3, 2, 9, 3, 18, ""};
        return detail::run_zeta_witness(P);
    }
    throw std::invalid_argument("verify_witness: unknown id '" + id + "'");
}

} // namespace weilaut
