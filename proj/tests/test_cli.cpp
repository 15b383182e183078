#include "weilaut/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

using weilaut::cli::CliResult;
using weilaut::cli::run;

TEST_CASE("cli: weil subcommand")
{
    auto r = run({"weil", "--q", "125", "--poly", "125,5,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Q(sqrt(-19))") != std::string::npos);
    CHECK(r.out.find("g = 3") != std::string::npos);
    CHECK(r.out.find("division_algebra_over_imag_quadratic") != std::string::npos);

    auto zeta = run({"weil", "--zeta", "22", "--p", "11", "--a", "2"});
    CHECK(zeta.exit_code == 0);
    CHECK(zeta.out.find("Q(zeta_11)") != std::string::npos);
    CHECK(zeta.out.find("g = 5") != std::string::npos);
    CHECK(zeta.out.find("cm_field") != std::string::npos);

    auto bad = run({"weil", "--q", "125", "--poly", "125,30,1"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("not a 125-Weil number") != std::string::npos);

    // degenerate supersingular data: pi = -2 over F_4 and pi = -11 over F_121
    auto ss = run({"weil", "--q", "4", "--poly", "2,1"});
    CHECK(ss.exit_code == 0);
    CHECK(ss.out.find("supersingular with rational Frobenius: yes") != std::string::npos);
    CHECK(ss.out.find("unclassified") != std::string::npos);
    CHECK(run({"weil", "--q", "121", "--poly", "11,1"}).exit_code == 0);

    CHECK(run({"weil", "--q", "125"}).exit_code == 2);
    CHECK(run({"weil", "--poly", "1,1"}).exit_code == 2); // --poly without --q
    CHECK(run({"weil", "--q", "125", "--poly", "125,5,1", "--zeta", "4", "--p", "2", "--a", "2"}).exit_code == 2);
    CHECK(run({"weil", "--q", "12", "--poly", "12,1,1"}).exit_code == 2);
    CHECK(run({"weil", "--q", "125", "--poly", "125,5,1", "--format", "csv"}).exit_code == 2);
    CHECK(run({"weil", "--zeta", "22", "--p", "11", "--a", "2", "--q", "120"}).exit_code == 2);
}

TEST_CASE("cli: amitsur subcommand")
{
    auto q8 = run({"amitsur", "--m", "4", "--r", "3"});
    CHECK(q8.exit_code == 0);
    CHECK(q8.out.find("EMBEDDABLE") != std::string::npos);
    CHECK(q8.out.find("via (1)") != std::string::npos);

    auto no = run({"amitsur", "--m", "18", "--r", "7"});
    CHECK(no.exit_code == 1);
    CHECK(no.out.find("NOT EMBEDDABLE") != std::string::npos);

    auto cyc = run({"amitsur", "--m", "6", "--r", "1"});
    CHECK(cyc.exit_code == 0);
    CHECK(cyc.out.find("via cyclic") != std::string::npos);

    CHECK(run({"amitsur", "--m", "6", "--r", "3"}).exit_code == 2); // gcd != 1
    CHECK(run({"amitsur", "--m", "6"}).exit_code == 2);
}

TEST_CASE("cli: classify subcommand")
{
    auto g3 = run({"classify", "--g", "3"});
    CHECK(g3.exit_code == 0);
    CHECK(g3.out.find("Z/14") != std::string::npos);
    CHECK(g3.out.find("Z/18") != std::string::npos);

    auto g11 = run({"classify", "--g", "11", "--format", "csv"});
    CHECK(g11.exit_code == 0);
    CHECK(g11.out.rfind("group_order,g_condition\n", 0) == 0);
    CHECK(g11.out.find("46,g >= 5 and 2g+1 prime") != std::string::npos);

    auto closed = run({"classify", "--closed"});
    CHECK(closed.exit_code == 0);
    CHECK(closed.out.find("Z/18") != std::string::npos);
    CHECK(closed.out.find("Z/22") == std::string::npos);

    CHECK(run({"classify", "--g", "9"}).exit_code == 2);
    CHECK(run({"classify", "--g", "3", "--closed"}).exit_code == 2);
    CHECK(run({"classify"}).exit_code == 2);
}

TEST_CASE("cli: witness subcommand")
{
    auto w1 = run({"witness", "--id", "1"});
    CHECK(w1.exit_code == 0);
    CHECK(w1.out.find("overall: PASS") != std::string::npos);

    auto all5 = run({"witness", "--all", "--g", "5"});
    CHECK(all5.exit_code == 0);
    CHECK(all5.out.find("all certificates PASS") != std::string::npos);
    CHECK(all5.out.find("witness 6") != std::string::npos);
    CHECK(all5.out.find("skipped") != std::string::npos); // alt3 does not apply at g = 5

    CHECK(run({"witness", "--id", "6", "--g", "9"}).exit_code == 2);
    CHECK(run({"witness", "--id", "42"}).exit_code == 2);
    CHECK(run({"witness"}).exit_code == 2);
    CHECK(run({"witness", "--id", "1", "--all"}).exit_code == 2);

    // --all output ordering is fixed by id
    auto all = run({"witness", "--all", "--format", "json"});
    auto j = nlohmann::ordered_json::parse(all.out);
    std::vector<std::string> ids;
    for (const auto& c : j["certificates"]) ids.push_back(c["witness_id"].get<std::string>());
    CHECK(ids == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "alt3", "alt4", "alt5",
                                          "closed1", "closed2", "closed3", "closed4", "closed5"});
}

TEST_CASE("cli: determinism")
{
    const std::vector<std::vector<std::string>> invocations = {
        {"weil", "--q", "125", "--poly", "125,5,1", "--format", "json"},
        {"amitsur", "--m", "14", "--r", "9", "--format", "json"},
        {"classify", "--g", "5", "--format", "json"},
        {"witness", "--id", "3", "--format", "json"},
        {"classify", "--g", "3", "--format", "csv"},
        {"witness", "--all"},
    };
    for (const auto& argv : invocations) {
        auto a = run(argv);
        auto b = run(argv);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("cli: json outputs parse and round-trip")
{
    const std::vector<std::vector<std::string>> invocations = {
        {"weil", "--q", "125", "--poly", "125,5,1", "--format", "json"},
        {"weil", "--zeta", "14", "--p", "7", "--a", "2", "--format", "json"},
        {"amitsur", "--m", "4", "--r", "3", "--format", "json"},
        {"classify", "--g", "3", "--format", "json"},
        {"classify", "--closed", "--format", "json"},
        {"witness", "--id", "6", "--g", "11", "--format", "json"},
    };
    for (const auto& argv : invocations) {
        auto r = run(argv);
        REQUIRE((r.exit_code == 0 || r.exit_code == 1));
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
        CHECK(parsed.contains("command"));
    }

    // certificate steps keep their stable field names
    auto w = run({"witness", "--id", "closed3", "--format", "json"});
    auto j = nlohmann::ordered_json::parse(w.out);
    const auto& step = j["certificates"][0]["steps"][0];
    CHECK(step.contains("name"));
    CHECK(step.contains("claim"));
    CHECK(step.contains("verdict"));
    CHECK(step.contains("evidence"));
    CHECK(j["certificates"][0].contains("overall"));
}

TEST_CASE("cli: exit codes stay within the contract")
{
    const std::vector<std::pair<std::vector<std::string>, int>> table = {
        {{"weil", "--q", "125", "--poly", "125,5,1"}, 0},
        {{"weil", "--q", "125", "--poly", "125,30,1"}, 1},
        {{"weil", "--q", "125"}, 2},
        {{"amitsur", "--m", "18", "--r", "13"}, 1},
        {{"classify", "--g", "23"}, 0},
        {{"witness", "--all"}, 0},
        {{"witness", "--id", "6", "--g", "15"}, 2},
    };
    for (const auto& [argv, expect] : table) {
        auto r = run(argv);
        INFO(argv[0]);
        CHECK(r.exit_code == expect);
    }
}
