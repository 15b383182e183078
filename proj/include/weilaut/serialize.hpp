#pragma once

#include "weilaut/amitsur.hpp"
#include "weilaut/classify.hpp"
#include "weilaut/weil.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON report builders. Schema conventions, kept stable across releases:
// big integers and rationals are decimal strings ("125", "2/3"), structurally
// small quantities (degrees, orders, conductors) are JSON numbers, and every
// report carries its command name.
namespace weilaut::json {

using ordered = nlohmann::ordered_json;

inline ordered rat_json(const Rat& r) { return to_string(r); }

inline ordered poly_json(const IntPoly& h)
{
    ordered a = ordered::array();
    for (const Int& c : h.coeffs()) a.push_back(to_dec(c));
    return a;
}

inline ordered field_json(const FieldDescriptor& F)
{
    ordered j;
    switch (F.kind()) {
    case FieldKind::Rational: j["kind"] = "rational"; break;
    case FieldKind::RealQuadratic:
        j["kind"] = "real_quadratic";
        j["d"] = to_dec(F.quadratic_d());
        break;
    case FieldKind::ImagQuadratic:
        j["kind"] = "imag_quadratic";
        j["d"] = to_dec(F.quadratic_d());
        break;
    case FieldKind::Cyclotomic:
        j["kind"] = "cyclotomic";
        j["conductor"] = F.conductor();
        break;
    }
    j["degree"] = F.degree();
    j["display"] = F.display();
    return j;
}

inline ordered invariant_json(const PlaceInvariant& pi)
{
    ordered j;
    j["place"] = place_display(pi);
    j["value"] = rat_json(pi.value);
    j["local_degree"] = pi.local_degree;
    return j;
}

inline ordered weil_report(const WeilNumber& w)
{
    ordered j;
    j["command"] = "weil";
    j["q"] = to_dec(w.q);
    j["p"] = to_dec(w.p);
    j["a"] = w.a;
    j["poly"] = poly_json(w.h);
    j["form"] = w.form == WeilForm::Quadratic ? "quadratic" : "zeta";
    if (w.form == WeilForm::ZetaPower) j["zeta_m"] = w.zeta_m;
    j["valid"] = true;
    j["center"] = field_json(center_field(w));
    auto invs = local_invariants(w);
    ordered arr = ordered::array();
    for (const auto& pi : invs) arr.push_back(invariant_json(pi));
    j["invariants"] = arr;
    long long d = division_index(invs);
    long long e = center_field(w).degree();
    j["d"] = d;
    j["e"] = e;
    j["g"] = d * e / 2;
    auto flags = commutativity_flags(w);
    j["commutative"] = flags.is_commutative;
    j["supersingular_rational"] = flags.is_supersingular_rational;
    try {
        EndoAlgebra alg = classify_endo(w);
        j["shape"] = alg.shape == EndoShape::CMField ? "cm_field" : "division_algebra_over_imag_quadratic";
        j["albert_type"] = "IV";
    } catch (const ClassificationContradictionError&) {
        throw;
    } catch (const std::exception&) {
        j["shape"] = "unclassified";
    }
    return j;
}

inline ordered trace_json(const std::vector<TraceEntry>& trace)
{
    ordered arr = ordered::array();
    for (const auto& t : trace) {
        ordered e;
        e["q"] = t.q;
        e["p"] = t.p;
        e["clause"] = t.clause;
        e["ok"] = t.ok;
        e["note"] = t.note;
        arr.push_back(e);
    }
    return arr;
}

inline ordered amitsur_report(const GmrPresentation& g, const EmbedResult& res)
{
    ordered j;
    j["command"] = "amitsur";
    j["m"] = g.m;
    j["r"] = g.r;
    j["s"] = g.s;
    j["t"] = g.t;
    j["n"] = g.n;
    j["group"] = g.display();
    j["cyclic"] = g.is_cyclic();
    j["c1"] = condition_C1(g);
    j["c2"] = condition_C2(g);
    ordered pd = ordered::array();
    if (g.m > 1)
        for (const auto& [p, e] : factorize(Int(g.m))) {
            PrimeData x = prime_data(g, to_long_checked(p, "p | m"));
            ordered o;
            o["p"] = x.p;
            o["alpha"] = x.alpha;
            o["n_p"] = x.n_p;
            o["delta_p"] = x.delta_p;
            pd.push_back(o);
        }
    j["prime_data"] = pd;
    j["embeddable"] = res.embeddable;
    j["via"] = res.via;
    j["trace"] = trace_json(res.trace);
    return j;
}

inline ordered classify_report(long long g, const std::vector<ClassificationRow>& rows)
{
    ordered j;
    j["command"] = "classify";
    j["mode"] = "finite";
    j["g"] = g;
    ordered arr = ordered::array();
    for (const auto& r : rows) {
        ordered o;
        o["group"] = r.group.display();
        o["group_order"] = r.group.order;
        o["g_condition"] = g_condition_display(r.condition);
        arr.push_back(o);
    }
    j["rows"] = arr;
    return j;
}

inline ordered classify_closed_report(const ClosedClassification& c)
{
    ordered j;
    j["command"] = "classify";
    j["mode"] = "closed";
    ordered arr = ordered::array();
    for (const auto& r : c.rows) {
        ordered o;
        o["group"] = r.group.display();
        o["group_order"] = r.group.order;
        arr.push_back(o);
    }
    j["rows"] = arr;
    j["commentary"] = c.commentary;
    return j;
}

inline ordered certificate_json(const WitnessCertificate& c)
{
    ordered j;
    j["witness_id"] = c.witness_id;
    j["g"] = c.g;
    ordered arr = ordered::array();
    for (const auto& s : c.steps) {
        ordered o;
        o["name"] = s.name;
        o["claim"] = s.claim;
        o["verdict"] = verdict_name(s.verdict);
        o["evidence"] = s.evidence;
        arr.push_back(o);
    }
    j["steps"] = arr;
    j["overall"] = c.overall;
    return j;
}

inline ordered witness_report(const std::vector<WitnessCertificate>& certs)
{
    ordered j;
    j["command"] = "witness";
    ordered arr = ordered::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    j["certificates"] = arr;
    return j;
}

} // namespace weilaut::json
