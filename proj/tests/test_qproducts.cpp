#include "oracles.hpp"

#include <qcrank/qproducts.hpp>
#include <qcrank/verifier.hpp>

#include <doctest.h>

using namespace qcrank;

namespace {
std::vector<mpz_class> ints(std::vector<long> c) { return {c.begin(), c.end()}; }
} // namespace

TEST_CASE("pentagonal ceiling formula")
{
    const std::vector<std::int64_t> want = {0, 1, 2, 5, 7, 12, 15, 22, 26};
    for (std::int64_t k = 0; k < 9; ++k)
        CHECK(pentagonal(k) == want[static_cast<std::size_t>(k)]);
    for (std::int64_t n = 1; n <= 50; ++n) {
        CHECK(pentagonal(2 * n) - pentagonal(2 * n - 1) == n);
        CHECK(pentagonal(2 * n) == n * (3 * n + 1) / 2);
        CHECK(pentagonal(2 * n - 1) == n * (3 * n - 1) / 2);
    }
    CHECK_THROWS(pentagonal(-1));
    CHECK(triangular(0) == 0);
    CHECK(triangular(4) == 10);
}

TEST_CASE("figurate tables")
{
    FigurateTable a(ShiftFamily::pentagonal, 100), b(ShiftFamily::pentagonal_indexed, 100);
    CHECK(a.values() == b.values());
    CHECK(a.contains(22));
    CHECK(!a.contains(23));
    CHECK_THROWS_AS(a.contains(101), std::out_of_range);

    FigurateTable t(ShiftFamily::triangular, 30);
    CHECK(t.values() == std::vector<std::int64_t>{0, 1, 3, 6, 10, 15, 21, 28});
    FigurateTable r(ShiftFamily::ramanujan_quadratic, 40);
    CHECK(r.values() == std::vector<std::int64_t>{0, 1, 5, 8, 16, 21, 33, 40});

    std::vector<std::int64_t> ks;
    for_each_index(ShiftFamily::squares, 4, [&](std::int64_t k, std::int64_t) { ks.push_back(k); });
    CHECK(ks == std::vector<std::int64_t>{0, 1, -1, 2, -2});
}

TEST_CASE("euler products")
{
    CHECK(euler_product(1, 12) ==
          Series::from_terms({{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}}, 12));

    Series f1 = euler_product(1, 400);
    FigurateTable omega(ShiftFamily::pentagonal, 400);
    std::vector<std::int64_t> support;
    for (const auto& [e, c] : f1.terms()) {
        support.push_back(e);
        CHECK(abs(c) == 1);
    }
    CHECK(support == omega.values());

    for (int delta : {1, 2, 5, 7, 10, 14})
        CHECK(euler_product(delta, 200).coefficients(0, 200) == oracle::euler_dense(delta, 200));

    CHECK(euler_product(3, 20, mpz_class(2)).coeff(3) == 1);
    CHECK_THROWS(euler_product(0, 10));
}

TEST_CASE("qpochhammer and triple product")
{
    // (q;q) from the product form
    CHECK(qpochhammer(1, 1, 80) == euler_product(1, 80));
    // (q;q^2)(q^2;q^2) = (q;q)
    CHECK(qpochhammer(1, 2, 80) * qpochhammer(2, 2, 80) == euler_product(1, 80));

    for (std::int64_t m : {2, 5, 10, 50})
        for (std::int64_t a = 1; a < m; a += (m > 10 ? 7 : 1))
            CHECK(triple_product(a, m, 300).coeff(0) == 1);

    // a = m/2: (q^a;q^m)^2 (q^m;q^m)
    Series tp = triple_product(5, 10, 200);
    Series direct = pow(qpochhammer(5, 10, 200), 2) * euler_product(10, 200);
    CHECK(tp == direct);

    // Jacobi triple product: (q;q^2)^2 (q^2;q^2) = sum (-1)^n q^{n^2}
    CHECK(triple_product(1, 2, 150) == theta(ThetaKind::gauss_squares, 150));

    CHECK_THROWS(triple_product(0, 5, 10));
    CHECK_THROWS(triple_product(5, 5, 10));
}

TEST_CASE("eta quotients")
{
    CHECK(eta_expand(EtaQuotientSpec{{1, -3}, {2, 2}}, 3).coefficients(0, 3) ==
          ints({1, 3, 7, 16}));

    Series distinct = eta_expand(EtaQuotientSpec{{1, -1}, {2, 1}}, 7);
    CHECK(distinct.coefficients(0, 7) == ints({1, 1, 1, 2, 2, 3, 4, 5}));
    CHECK(eta_expand(EtaQuotientSpec{{1, -1}, {2, 1}}, 150).coefficients(0, 150) ==
          oracle::distinct_partition_counts(150));

    std::map<int, int> spec = {{1, 4}, {3, -2}, {4, 1}, {6, 3}};
    CHECK(eta_expand(EtaQuotientSpec{{1, 4}, {3, -2}, {4, 1}, {6, 3}}, 200).coefficients(0, 200) ==
          oracle::eta_dense(spec, 200));

    Series f1 = euler_product(1, 150), f2 = euler_product(2, 150), f5 = euler_product(5, 150);
    CHECK(eta_expand(EtaQuotientSpec{{1, 2}, {2, -1}, {5, 3}}, 150) ==
          pow(f1, 2) * invert(f2) * pow(f5, 3));

    Series s = eta_expand(EtaQuotientSpec({{1, 1}}, -2), 10);
    CHECK(s.valuation() == -2);
    CHECK(s.order() == 10);
    CHECK(s.coeff(-1) == -1);
    CHECK(s.coeff(10) == euler_product(1, 12).coeff(12));

    CHECK(eta_expand(EtaQuotientSpec{}, 5) == Series::one(5));
    CHECK(eta_expand(EtaQuotientSpec{{1, -1}}, 30, mpz_class(5)) ==
          reduce_mod(eta_expand(EtaQuotientSpec{{1, -1}}, 30), 5));
}

TEST_CASE("theta series")
{
    CHECK(theta(ThetaKind::gauss_squares, 10) ==
          Series::from_terms({{0, 1}, {1, -2}, {4, 2}, {9, -2}}, 10));
    CHECK(theta(ThetaKind::jacobi_cubes, 10) ==
          Series::from_terms({{0, 1}, {1, -3}, {3, 5}, {6, -7}, {10, 9}}, 10));
    CHECK(theta(ThetaKind::triangular, 10) ==
          Series::from_terms({{0, 1}, {1, 1}, {3, 1}, {6, 1}, {10, 1}}, 10));

    const Exponent N = 300;
    Series f1 = euler_product(1, N), f2 = euler_product(2, N);
    Series minus = eta_expand(EtaQuotientSpec{{1, -1}, {2, 1}}, N);
    CHECK(theta(ThetaKind::gauss_squares, N) * minus == f1);
    CHECK(theta(ThetaKind::triangular, N) == pow(f2, 2) * invert(f1));
    CHECK(theta(ThetaKind::jacobi_cubes, N) == pow(f1, 3));
    CHECK(theta(ThetaKind::weighted_pentagonal, N) == pow(f1, 5) * pow(f2, -2));
    CHECK(theta(ThetaKind::ramanujan_quadratic, N) == pow(f2, 5) * pow(f1, -2));
    // (q;q)^3 / (-q;q)^2 = f1^5 / f2^2
    CHECK(theta(ThetaKind::pentagonal_6n_minus_1, N) == -(pow(f1, 5) * pow(f2, -2)));
    CHECK(pow(f1, 3) * pow(minus, -2) == pow(f1, 5) * pow(f2, -2));

    for (ThetaKind k : all_theta_kinds())
        CHECK(theta_kind_from_name(theta_name(k)) == k);
    CHECK_THROWS(theta_kind_from_name("nope"));
}

TEST_CASE("nu2 weighted product inverts the Euler product")
{
    // prod (1 + q^n)^{nu2(2n)} = 1 / (q;q)
    const Exponent N = 60;
    Series prod = Series::one(N);
    for (std::int64_t n = 1; n <= N; ++n) {
        std::int64_t v = 1;
        for (std::int64_t m = n; m % 2 == 0; m /= 2)
            ++v;
        Series factor = Series::from_terms({{0, 1}, {n, 1}}, N);
        prod = prod * pow(factor, v);
    }
    CHECK(prod == p_series(N));
}

TEST_CASE("eta spec parser")
{
    EtaQuotientSpec s = parse_eta_spec("1:-3,2:2");
    CHECK(s == EtaQuotientSpec{{1, -3}, {2, 2}});
    CHECK(s.exponent_of(2) == 2);
    CHECK(s.exponent_of(7) == 0);

    CHECK(parse_eta_spec(" 2 : 2 ; 1:-3 ; qshift = -8") == EtaQuotientSpec({{1, -3}, {2, 2}}, -8));
    CHECK(parse_eta_spec("1:1,qshift=3").q_shift == 3);

    for (const char* text : {"1:-3,2:2", "5:1;qshift=-8", "1:2,2:-1,4:7"})
        CHECK(parse_eta_spec(parse_eta_spec(text).to_string()) == parse_eta_spec(text));

    auto position = [](const char* text) -> std::optional<std::size_t> {
        try {
            parse_eta_spec(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::nullopt;
    };
    CHECK(position("1:-3,2:x") == std::optional<std::size_t>(7));
    CHECK(position("0:1") == std::optional<std::size_t>(0));
    CHECK(position("1:1,1:2").has_value());
    CHECK(position("1-3").has_value());
    CHECK(position("").has_value());
    CHECK(position("1:1;qshift=").has_value());
}
