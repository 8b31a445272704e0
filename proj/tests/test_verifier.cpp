#include "oracles.hpp"

#include <qcrank/report.hpp>
#include <qcrank/verifier.hpp>

#include <doctest.h>

#include <json.hpp>

#include <set>

using namespace qcrank;

namespace {
std::vector<mpz_class> ints(std::vector<long> c) { return {c.begin(), c.end()}; }

Check stub(std::string id, std::function<Outcome(Exponent)> run)
{
    Check c;
    c.id = std::move(id);
    c.anchor = "stub";
    c.default_order = 30;
    c.run = std::move(run);
    return c;
}
} // namespace

TEST_CASE("generating series")
{
    CHECK(c_series(4).coefficients(0, 4) == ints({1, -1, 2, -1, 5}));
    CHECK((c_series(4) - Series::monomial(2, 1, 4)).coeff(1) == -3);
    CHECK(a_series(5).coefficients(0, 5) == ints({1, 3, 7, 16, 32, 61}));
    CHECK(a_series(200).coefficients(0, 200) == oracle::a_by_convolution(200));
    CHECK(p_series(300).coefficients(0, 300) == oracle::partition_counts(300));
    CHECK(c5n4_series(10).coeff(0) == 5);
    CHECK(c5n4_series(10) == dissect(c_series(54), 5, 4));
    CHECK(c_series(40, mpz_class(5)) == reduce_mod(c_series(40), 5));
}

TEST_CASE("theta_convolution against direct shifted sums")
{
    const int N = 500;
    Series base = a_series(N);
    oracle::Poly dense = oracle::a_by_convolution(N);

    struct Case {
        ShiftFamily family;
        Weight w;
        std::int64_t scale;
        bool bilateral;
    };
    const std::vector<Case> cases = {
        {ShiftFamily::pentagonal, weights::alternating, 1, true},
        {ShiftFamily::pentagonal_indexed, weights::pentagonal_sign, 2, false},
        {ShiftFamily::triangular, weights::jacobi, 1, false},
        {ShiftFamily::triangular, weights::unit, 3, false},
        {ShiftFamily::squares, weights::alternating, 1, true},
        {ShiftFamily::squares, weights::unit, 5, true},
        {ShiftFamily::ramanujan_quadratic, weights::ramanujan, 1, true},
        {ShiftFamily::pentagonal, weights::one_minus_6k, 2, true},
        {ShiftFamily::pentagonal, weights::one_minus_k, 1, true},
    };
    for (const auto& c : cases) {
        auto exp = [&](std::int64_t k) { return family_exponent(c.family, k); };
        auto terms = c.bilateral ? oracle::bilateral_terms(N / c.scale, exp, c.w)
                                 : oracle::unilateral_terms(N / c.scale, exp, c.w);
        Series got = theta_convolution(base, c.family, c.w, c.scale);
        CHECK(got.order() == N);
        CHECK(got.coefficients(0, N) == oracle::shifted_sum(dense, terms, c.scale));

        Series unit = theta_convolution(Series::one(N), c.family, c.w, c.scale);
        CHECK(unit == weighted_theta(c.family, c.w, c.scale, N));
    }

    // a * sum (-1)^k (2k+1) q^{k(k+1)/2} = f1^3 * f2^2 / f1^3 = f2^2
    Series f2sq = pow(euler_product(2, N), 2);
    CHECK(theta_convolution(base, ShiftFamily::triangular, weights::jacobi, 1) == f2sq);

    Series modular = theta_convolution(a_series(N, mpz_class(4)), ShiftFamily::squares,
                                       weights::alternating, 1);
    CHECK(modular.modulus() == mpz_class(4));
}

TEST_CASE("determinant")
{
    const Exponent N = 20;
    auto k = [&](long c) { return Series::monomial(c, 0, N); };
    CHECK(determinant({{k(7)}}) == k(7));
    CHECK(determinant({{k(1), k(2)}, {k(3), k(4)}}) == k(-2));
    CHECK(determinant({{k(2), k(0), k(1)}, {k(1), k(3), k(2)}, {k(1), k(1), k(2)}}) == k(6));
    CHECK(determinant({{k(2), k(0), k(1)}, {k(1), k(3), k(2)}, {k(1), k(1), k(1)}}).is_zero());

    Series q = Series::monomial(1, 1, N);
    CHECK(determinant({{k(1), q}, {q, k(1)}}) == Series::from_terms({{0, 1}, {2, -1}}, N));
    CHECK_THROWS(determinant({}));
    CHECK_THROWS(determinant({{k(1), k(2)}}));
}

TEST_CASE("catalogue")
{
    const Registry& reg = Registry::catalogue();
    std::set<std::string> ids;
    for (const auto& c : reg.checks()) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.default_order >= kMinCheckOrder);
        CHECK(!c.anchor.empty());
        CHECK(!c.description.empty());
        CHECK(reg.find(c.id) == &c);
    }
    for (const char* id :
         {"cgen_bruteforce", "thm1", "quint_support", "lemma1a", "lemma1b", "ramanujan_quint",
          "circulant_D", "mdl_delta", "cor_mod5", "thm3", "thm8", "thm4_m1", "thm4_m2", "thm4_m3",
          "thm4_m4", "cor5_periodicity", "thm6", "cor7", "rk_basis_identity", "c5n4_convolutions",
          "cor2a_dissection", "a_theta_convolutions", "theta_identities", "a_oracles", "cor1a",
          "cor2e", "cor3b_printed", "cor4d_printed", "cor5_jacobi_d", "cor6d", "gauss_sq_cors",
          "tri_cors", "ram_theta_cor", "weighted_pent_cor_a", "weighted_pent_cor_b",
          "cor5b_dissection", "big_10n9"})
        CHECK_MESSAGE(ids.count(id) == 1, id);
    CHECK(reg.find("nosuch") == nullptr);
    CHECK(reg.find("cgen_bruteforce")->requires_bruteforce);
    CHECK(reg.find("cor4b_printed")->expects_counterexample);
    CHECK(!reg.find("cor4b")->expects_counterexample);
}

TEST_CASE("running catalogued checks")
{
    for (auto [id, order] : std::vector<std::pair<const char*, Exponent>>{
             {"thm1", 300}, {"thm3", 200}, {"thm4_m1", 20000}, {"cgen_bruteforce", 30}}) {
        CheckResult r = run_check(id, order);
        CHECK_MESSAGE(r.status == CheckStatus::pass, id, " ", r.note);
        CHECK(r.order_used == order);
        CHECK(r.id == id);
        CHECK(!r.first_failure);
        CHECK(r.runtime_ms >= 0);
    }
    CHECK(run_check("thm1").order_used == 300);

    CheckResult printed = run_check("cor4c_printed");
    CHECK(printed.status == CheckStatus::pass);
    CHECK(printed.note.find("q^2") != std::string::npos);

    CHECK_THROWS_AS(run_check("nosuch"), UnknownCheck);
    CHECK_THROWS_AS(run_check("thm1", 19), std::invalid_argument);
    CHECK(run_check("thm1", 20).status == CheckStatus::pass);
}

TEST_CASE("failures and exceptions become results")
{
    Registry reg({stub("wrong",
                       [](Exponent) {
                           Outcome o;
                           o.passed = false;
                           o.failure = FirstFailure{7, "1", "2"};
                           return o;
                       }),
                  stub("silent", [](Exponent) { return Outcome{false, std::nullopt, ""}; }),
                  stub("boom", [](Exponent) -> Outcome { throw std::runtime_error("kaput"); }),
                  stub("fine", [](Exponent n) { return Outcome{true, std::nullopt, std::to_string(n)}; })});

    CheckResult w = reg.run("wrong");
    CHECK(w.status == CheckStatus::fail);
    REQUIRE(w.first_failure);
    CHECK(w.first_failure->index == 7);
    CHECK(w.first_failure->expected == "1");
    CHECK(w.first_failure->actual == "2");

    CHECK(reg.run("silent").first_failure.has_value());

    CheckResult b = reg.run("boom");
    CHECK(b.status == CheckStatus::fail);
    REQUIRE(b.first_failure);
    CHECK(b.first_failure->actual.find("kaput") != std::string::npos);

    CHECK(reg.run("fine").note == "30");
    CHECK(reg.run("fine", 44).note == "44");

    CHECK_THROWS(Registry({stub("x", {}), stub("x", {})}));
}

TEST_CASE("run_many keeps input order and does not depend on jobs")
{
    const std::vector<std::string> ids = {"thm3", "cor1a", "lemma1a", "h_f1sq_2diss", "cor4b_printed",
                                          "theta_identities", "thm8"};
    auto serial = Registry::catalogue().run_many(ids, std::nullopt, 1);
    auto parallel = Registry::catalogue().run_many(ids, std::nullopt, 4);
    REQUIRE(serial.size() == ids.size());
    REQUIRE(parallel.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(serial[i].id == ids[i]);
        CHECK(parallel[i].id == ids[i]);
        CHECK(serial[i].status == parallel[i].status);
        CHECK(serial[i].note == parallel[i].note);
        CHECK(serial[i].status == CheckStatus::pass);
    }
    CHECK_THROWS_AS(Registry::catalogue().run_many({"thm3", "nosuch"}, std::nullopt, 2), UnknownCheck);
}

TEST_CASE("report round trip")
{
    ReportDocument doc;
    doc.order_override = 500;
    doc.wall_clock_ms = 12.5;
    CheckResult a;
    a.id = "x";
    a.anchor = "somewhere";
    a.status = CheckStatus::pass;
    a.order_used = 500;
    a.note = "fine";
    a.runtime_ms = 3;
    CheckResult b = a;
    b.id = "y";
    b.status = CheckStatus::fail;
    b.first_failure = FirstFailure{4, "123456789012345678901234567890", "0"};
    doc.checks = {a, b};
    CHECK(!doc.overall_pass());

    std::string text = render_report(doc);
    auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["overall"] == "fail");
    CHECK(j["orders"]["per_check"]["y"] == 500);
    CHECK(j["checks"][0]["first_failure"].is_null());
    CHECK(j["checks"][1]["first_failure"]["expected"] == "123456789012345678901234567890");

    j["future_field"] = {1, 2, 3};
    j["checks"][0]["extra"] = true;
    ReportDocument back = parse_report(j.dump());
    CHECK(back.tool_version == kToolVersion);
    CHECK(back.order_override == std::optional<Exponent>(500));
    REQUIRE(back.checks.size() == 2);
    CHECK(back.checks[1].id == "y");
    CHECK(back.checks[1].status == CheckStatus::fail);
    CHECK(back.checks[1].first_failure->index == 4);
    CHECK(back.checks[0].note == "fine");
    CHECK(render_report(back) == text);

    doc.checks = {a};
    CHECK(doc.overall_pass());
    CHECK_THROWS(parse_report("{not json"));
}
