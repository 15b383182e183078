#pragma once

#include "weilaut/serialize.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace weilaut::cli {

// Exit codes: 0 success, 1 domain-negative result (not a Weil number, not
// embeddable), 2 usage error, 3 witness certificate failure.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::vector<Int> parse_coeff_list(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty coefficient in list");
        out.emplace_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

inline std::string render_text_weil(const json::ordered& j)
{
    std::ostringstream os;
    os << "q = " << j["q"].get<std::string>() << " = " << j["p"].get<std::string>() << "^" << j["a"]
       << "\n";
    os << "minimal polynomial: coefficients (constant first) [";
    bool first = true;
    for (const auto& c : j["poly"]) {
        if (!first) os << ", ";
        first = false;
        os << c.get<std::string>();
    }
    os << "]\n";
    os << "valid q-Weil number: yes\n";
    os << "center Q(pi) = " << j["center"]["display"].get<std::string>()
       << "  (degree e = " << j["e"] << ")\n";
    os << "local invariants:\n";
    for (const auto& inv : j["invariants"])
        os << "  " << inv["place"].get<std::string>() << " : " << inv["value"].get<std::string>()
           << "  (local degree " << inv["local_degree"] << ")\n";
    os << "index d = " << j["d"] << ", e = " << j["e"] << ", g = " << j["g"] << "\n";
    os << "shape: " << j["shape"].get<std::string>() << "\n";
    os << "commutative: " << (j["commutative"].get<bool>() ? "yes" : "no")
       << ", supersingular with rational Frobenius: "
       << (j["supersingular_rational"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

inline std::string render_text_amitsur(const json::ordered& j)
{
    std::ostringstream os;
    os << j["group"].get<std::string>() << "\n";
    os << "m = " << j["m"] << ", r = " << j["r"] << ", s = " << j["s"] << ", t = " << j["t"]
       << ", n = " << j["n"] << "\n";
    os << "C1: " << (j["c1"].get<bool>() ? "holds" : "fails")
       << ", C2: " << (j["c2"].get<bool>() ? "holds" : "fails") << "\n";
    for (const auto& pd : j["prime_data"])
        os << "p = " << pd["p"] << ": alpha = " << pd["alpha"] << ", n_p = " << pd["n_p"]
           << ", delta_p = " << pd["delta_p"] << "\n";
    os << "verdict: " << (j["embeddable"].get<bool>() ? "EMBEDDABLE" : "NOT EMBEDDABLE") << " (via "
       << j["via"].get<std::string>() << ")\n";
    os << "trace:\n";
    for (const auto& t : j["trace"]) {
        os << "  [" << (t["ok"].get<bool>() ? "ok" : "fail") << "] " << t["clause"].get<std::string>();
        if (t["q"].get<long long>() != 0) os << " q=" << t["q"];
        if (t["p"].get<long long>() != 0) os << " p=" << t["p"];
        os << ": " << t["note"].get<std::string>() << "\n";
    }
    return os.str();
}

inline std::string render_text_classify(const json::ordered& j)
{
    std::ostringstream os;
    if (j["mode"] == "finite")
        os << "realizable automorphism groups, dimension g = " << j["g"] << " over finite fields:\n";
    else
        os << "realizable automorphism groups, dimension 3 over algebraically closed fields of "
              "characteristic p > 0:\n";
    for (const auto& r : j["rows"]) {
        os << "  " << r["group"].get<std::string>();
        if (r.contains("g_condition")) os << "  [" << r["g_condition"].get<std::string>() << "]";
        os << "\n";
    }
    if (j.contains("commentary")) os << "note: " << j["commentary"].get<std::string>() << "\n";
    return os.str();
}

inline std::string render_csv_classify(const json::ordered& j)
{
    std::ostringstream os;
    os << "group_order,g_condition\n";
    for (const auto& r : j["rows"]) {
        os << r["group_order"];
        os << "," << (r.contains("g_condition") ? r["g_condition"].get<std::string>() : "g = 3");
        os << "\n";
    }
    return os.str();
}

inline std::string render_text_certificate(const WitnessCertificate& c)
{
    std::ostringstream os;
    os << "witness " << c.witness_id << " (g = " << c.g << ")\n";
    for (const auto& s : c.steps) {
        os << "  [" << verdict_name(s.verdict) << "] " << s.name << ": " << s.claim << "\n";
        if (!s.evidence.empty()) os << "      " << s.evidence << "\n";
    }
    os << "overall: " << (c.overall ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace detail

inline CliResult run(const std::vector<std::string>& args)
{
    CLI::App app{"exact-arithmetic verifier for automorphism groups of simple polarized abelian "
                 "varieties of odd prime dimension over finite fields"};
    app.require_subcommand(0, 1);

    std::string format = "text";

    auto* weil = app.add_subcommand("weil", "analyze a q-Weil number");
    std::string weil_q, weil_poly, weil_p;
    long long weil_zeta = 0, weil_a = 0;
    weil->add_option("--q", weil_q, "prime power q");
    weil->add_option("--poly", weil_poly, "minimal polynomial, comma-separated coefficients, constant first");
    weil->add_option("--zeta", weil_zeta, "m for pi = p^(a/2) * zeta_m");
    weil->add_option("--p", weil_p, "prime p (zeta form)");
    weil->add_option("--a", weil_a, "even exponent a (zeta form)");
    weil->add_option("--format", format, "text | json");

    auto* ami = app.add_subcommand("amitsur", "embeddability of G_{m,r} in a division ring");
    long long ami_m = 0, ami_r = 0;
    ami->add_option("--m", ami_m, "m")->required();
    ami->add_option("--r", ami_r, "r")->required();
    ami->add_option("--format", format, "text | json");

    auto* cls = app.add_subcommand("classify", "list realizable automorphism groups");
    long long cls_g = 0;
    bool cls_closed = false;
    cls->add_option("--g", cls_g, "odd prime dimension");
    cls->add_flag("--closed", cls_closed, "dimension-3 algebraically closed case");
    cls->add_option("--format", format, "text | json | csv");

    auto* wit = app.add_subcommand("witness", "verify realizability constructions");
    std::string wit_id;
    bool wit_all = false;
    long long wit_g = 0;
    wit->add_option("--id", wit_id, "witness id (1..6, alt3, alt4, alt5, closed1..closed5)");
    wit->add_flag("--all", wit_all, "verify every applicable witness");
    wit->add_option("--g", wit_g, "dimension for the g-parameterized witnesses");
    wit->add_option("--format", format, "text | json");

    CliResult res;
    std::vector<const char*> argv;
    argv.push_back("weilaut");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.out = os.str();
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    }

    if (format != "text" && format != "json" && format != "csv") {
        res.err = "usage error: unknown format '" + format + "'\n";
        res.exit_code = 2;
        return res;
    }
    if (format == "csv" && !cls->parsed()) {
        res.err = "usage error: csv output is only available for classify\n";
        res.exit_code = 2;
        return res;
    }

    try {
        if (weil->parsed()) {
            const bool have_poly = !weil_poly.empty();
            const bool have_zeta = weil->count("--zeta") > 0;
            if (have_poly == have_zeta) {
                res.err = "usage error: give exactly one of --poly or --zeta\n";
                res.exit_code = 2;
                return res;
            }
            WeilNumber w;
            try {
                if (have_poly) {
                    if (weil_q.empty()) {
                        res.err = "usage error: --poly requires --q\n";
                        res.exit_code = 2;
                        return res;
                    }
                    w = WeilNumber::from_poly(detail::parse_coeff_list(weil_poly), Int(weil_q));
                } else {
                    if (weil_p.empty() || weil_a == 0) {
                        res.err = "usage error: --zeta requires --p and --a\n";
                        res.exit_code = 2;
                        return res;
                    }
                    w = WeilNumber::zeta(weil_zeta, Int(weil_p), weil_a);
                    if (!weil_q.empty() && Int(weil_q) != w.q) {
                        res.err = "usage error: --q disagrees with p^a\n";
                        res.exit_code = 2;
                        return res;
                    }
                }
            } catch (const NotWeilNumberError& e) {
                res.out = std::string(e.what()) + "\n";
                res.exit_code = 1;
                return res;
            }
            json::ordered j = json::weil_report(w);
            res.out = format == "json" ? j.dump(2) + "\n" : detail::render_text_weil(j);
            return res;
        }

        if (ami->parsed()) {
            if (ami_m < 1 || std::gcd(((ami_r % ami_m) + ami_m) % ami_m, ami_m) != 1) {
                res.err = "usage error: need m >= 1 and gcd(m, r) = 1\n";
                res.exit_code = 2;
                return res;
            }
            GmrPresentation g = GmrPresentation::make(ami_m, ami_r);
            EmbedResult er = embeddable_in_division_ring(g);
            json::ordered j = json::amitsur_report(g, er);
            res.out = format == "json" ? j.dump(2) + "\n" : detail::render_text_amitsur(j);
            res.exit_code = er.embeddable ? 0 : 1;
            return res;
        }

        if (cls->parsed()) {
            if (cls_closed == (cls->count("--g") > 0)) {
                res.err = "usage error: give exactly one of --g or --closed\n";
                res.exit_code = 2;
                return res;
            }
            json::ordered j;
            if (cls_closed) {
                j = json::classify_closed_report(classify_closed());
            } else {
                try {
                    j = json::classify_report(cls_g, classify(cls_g));
                } catch (const std::invalid_argument& e) {
                    res.err = std::string("usage error: ") + e.what() + "\n";
                    res.exit_code = 2;
                    return res;
                }
            }
            if (format == "json")
                res.out = j.dump(2) + "\n";
            else if (format == "csv")
                res.out = detail::render_csv_classify(j);
            else
                res.out = detail::render_text_classify(j);
            return res;
        }

        if (wit->parsed()) {
            if (wit_id.empty() == !wit_all) {
                res.err = "usage error: give exactly one of --id or --all\n";
                res.exit_code = 2;
                return res;
            }
            std::optional<long long> g_opt;
            if (wit->count("--g") > 0) g_opt = wit_g;
            std::vector<WitnessCertificate> certs;
            std::vector<std::string> skipped;
            if (wit_all) {
                for (const std::string& id : witness_ids()) {
                    if (witness_takes_g(id) && g_opt) {
                        try {
                            validate_witness_g(id, *g_opt);
                        } catch (const std::invalid_argument& e) {
                            skipped.push_back(std::string(e.what()) + " (skipped)");
                            continue;
                        }
                        certs.push_back(verify_witness(id, g_opt));
                    } else if (witness_takes_g(id)) {
                        certs.push_back(verify_witness(id));
                    } else {
                        certs.push_back(verify_witness(id));
                    }
                }
            } else {
                try {
                    certs.push_back(verify_witness(wit_id, g_opt));
                } catch (const std::invalid_argument& e) {
                    res.err = std::string("usage error: ") + e.what() + "\n";
                    res.exit_code = 2;
                    return res;
                }
            }
            bool all_pass = true;
            for (const auto& c : certs) all_pass = all_pass && c.overall;
            if (format == "json") {
                res.out = json::witness_report(certs).dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (const auto& c : certs) os << detail::render_text_certificate(c) << "\n";
                for (const auto& s : skipped) os << "note: " << s << "\n";
                os << (all_pass ? "all certificates PASS" : "certificate FAILURE") << "\n";
                res.out = os.str();
            }
            res.exit_code = all_pass ? 0 : 3;
            return res;
        }

        res.out = app.help();
        return res;
    } catch (const std::invalid_argument& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    }
}

} // namespace weilaut::cli
