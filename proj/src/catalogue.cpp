#include "qcrank/crank.hpp"
#include "qcrank/verifier.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace qcrank {
namespace {

using Mod = std::optional<mpz_class>;
using Factors = std::initializer_list<std::pair<std::int64_t, std::int64_t>>;

// ---------------------------------------------------------------------------
// shared inputs

// Base series are reused by many checks at the same order and ring.
template <class Build>
Series cached(const char* tag, Exponent order, const Mod& m, Build build)
{
    static std::mutex mutex;
    static std::map<std::string, Series> store;
    std::string key = std::string(tag) + "/" + std::to_string(order) + "/" +
                      (m ? m->get_str() : std::string("Z"));
    {
        std::lock_guard lock(mutex);
        if (auto it = store.find(key); it != store.end())
            return it->second;
    }
    Series s = build();
    std::lock_guard lock(mutex);
    return store.emplace(key, std::move(s)).first->second;
}

Series a_cached(Exponent order, const Mod& m)
{
    return cached("a", order, m, [&] { return a_series(order, m); });
}

Series c5_cached(Exponent order, const Mod& m)
{
    return cached("c5", order, m, [&] { return c5n4_series(order, m); });
}

Series eta(Factors f, Exponent order, Mod m = std::nullopt, Exponent shift = 0)
{
    return eta_expand(EtaQuotientSpec(f, shift), order, std::move(m));
}

Series eta_q(Factors f, Exponent shift, Exponent order, Mod m = std::nullopt)
{
    return eta_expand(EtaQuotientSpec(f, shift), order, std::move(m));
}

Series tp(std::int64_t a, std::int64_t m, Exponent order)
{
    return triple_product(a, m, order);
}

std::string str(const mpz_class& v) { return v.get_str(); }

bool odd(const mpz_class& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

bool divisible(const mpz_class& v, unsigned long m)
{
    return mpz_divisible_ui_p(v.get_mpz_t(), m) != 0;
}

// ---------------------------------------------------------------------------
// outcome helpers

Outcome pass(std::string note = {}) { return Outcome{true, std::nullopt, std::move(note)}; }

Outcome fail(std::int64_t index, std::string expected, std::string actual, std::string note = {})
{
    return Outcome{false, FirstFailure{index, std::move(expected), std::move(actual)},
                   std::move(note)};
}

Outcome expect_equal(const Series& lhs, const Series& rhs, Exponent upto)
{
    if (auto d = first_difference(lhs, rhs, upto))
        return fail(d->index, str(d->rhs), str(d->lhs));
    return pass();
}

Outcome expect_zero(const Series& s, Exponent upto)
{
    return expect_equal(s, Series::zero(s.order(), s.modulus()), upto);
}

Outcome both(Outcome a, const Outcome& b)
{
    if (!a.passed)
        return a;
    if (!b.passed)
        return b;
    if (!b.note.empty())
        a.note += (a.note.empty() ? "" : "; ") + b.note;
    return a;
}

/*
 * Walks the coefficients s[stride*n + offset] for n = 0, 1, ... up to the
 * order of s, skipping n where `applies` is false, and reports the first one
 * where `holds` fails.
 */
Outcome along(const Series& s, Exponent stride, Exponent offset,
              const std::function<bool(Exponent)>& applies,
              const std::function<bool(Exponent, const mpz_class&)>& holds,
              const std::string& expected)
{
    Exponent tested = 0;
    for (Exponent n = 0; stride * n + offset <= s.order(); ++n) {
        if (!applies(n))
            continue;
        Exponent e = stride * n + offset;
        mpz_class v = s.coeff(e);
        if (!holds(n, v))
            return fail(e, expected, str(v));
        ++tested;
    }
    return pass(std::to_string(tested) + " coefficients tested");
}

auto every = [](Exponent) { return true; };

std::function<bool(Exponent)> residue_in(std::int64_t m, std::set<std::int64_t> rs)
{
    return [m, rs = std::move(rs)](Exponent n) { return rs.count(n % m) > 0; };
}

std::function<bool(Exponent, const mpz_class&)> divisible_by(unsigned long m)
{
    return [m](Exponent, const mpz_class& v) { return divisible(v, m); };
}

auto is_even = [](Exponent, const mpz_class& v) { return !odd(v); };

// odd(v) <=> n in set
std::function<bool(Exponent, const mpz_class&)> odd_iff(std::function<bool(Exponent)> member)
{
    return [member = std::move(member)](Exponent n, const mpz_class& v) {
        return odd(v) == member(n);
    };
}

std::function<bool(Exponent)> in_table(std::shared_ptr<FigurateTable> t, std::int64_t mult = 1,
                                       std::int64_t add = 0)
{
    return [t = std::move(t), mult, add](Exponent n) {
        Exponent x = n - add;
        return x >= 0 && x % mult == 0 && t->contains(x / mult);
    };
}

std::shared_ptr<FigurateTable> omegas(Exponent bound)
{
    return std::make_shared<FigurateTable>(ShiftFamily::pentagonal, bound);
}

std::shared_ptr<FigurateTable> deltas(Exponent bound)
{
    return std::make_shared<FigurateTable>(ShiftFamily::triangular, bound);
}

// Pass iff the wrapped statement is refuted; the witness goes in the note.
Outcome expect_counterexample(const Outcome& o)
{
    if (o.passed)
        return fail(-1, "a counterexample", "statement held at every tested index");
    std::ostringstream note;
    note << "statement refuted at q^" << o.failure->index << " (value " << o.failure->actual
         << ", expected " << o.failure->expected << ")";
    return pass(note.str());
}

Check make(std::string id, std::string description, std::string anchor, Exponent order,
           std::function<Outcome(Exponent)> run, Mod modulus = std::nullopt)
{
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.anchor = std::move(anchor);
    c.default_order = order;
    c.modulus = std::move(modulus);
    c.run = std::move(run);
    return c;
}

// ---------------------------------------------------------------------------
// crank generating function and mod-5 consequences

Outcome run_cgen(Exponent n_max)
{
    Series c = c_series(n_max);
    Series p = p_series(n_max);
    for (int n = 0; n <= n_max; ++n) {
        CrankTally t = crank_tally(static_cast<int>(n));
        if (t.c_even + t.c_odd != p.coeff(n))
            return fail(n, "p(n) = " + str(p.coeff(n)), "c_e + c_o = " + str(t.c_even + t.c_odd));
        if (t.c_diff != c.coeff(n))
            return fail(n, str(c.coeff(n)), str(t.c_diff));
    }
    return pass("partitions enumerated for n <= " + std::to_string(n_max));
}

Outcome run_thm1(Exponent N)
{
    Series c = c_series(N);
    Series lhs = residue_component(c, 5, 4);
    Series rhs = eta_q({{5, 2}, {25, 1}, {50, 2}, {10, -4}}, 4, N).scaled(5);
    Outcome out = expect_equal(lhs, rhs, N);
    if (!out.passed)
        return out;
    if (rhs.coeff(4) != 5)
        return fail(4, "5", str(rhs.coeff(4)));
    for (Exponent e = 4; e <= std::min<Exponent>(N, 45); e += 5) {
        CrankTally t = crank_tally(static_cast<int>(e));
        if (t.c_diff != rhs.coeff(e))
            return fail(e, "crank tally " + str(t.c_diff), str(rhs.coeff(e)));
    }
    return pass("right side matches crank tallies on 5n+4 <= 45");
}

Outcome run_quint_support(Exponent N)
{
    Series f1 = euler_product(1, N);
    Series f1c = eta({{1, 3}}, N);
    for (int r : {3, 4})
        if (auto o = expect_zero(residue_component(f1, 5, r), N); !o.passed)
            return o;
    for (int r : {2, 4})
        if (auto o = expect_zero(residue_component(f1c, 5, r), N); !o.passed)
            return o;
    if (residue_component(f1c, 5, 3).is_zero())
        return fail(-1, "some triangular number = 3 mod 5", "none found");
    return pass("triangular numbers avoid residues 2 and 4 mod 5 but do reach 3");
}

Outcome run_ramanujan_quint(Exponent N)
{
    Series x = divide(mul(qpochhammer(15, 25, N), qpochhammer(10, 25, N)),
                      mul(qpochhammer(20, 25, N), qpochhammer(5, 25, N)));
    Series y = divide(Series::one(N), x);
    Series inner = x - Series::monomial(1, 1, N) - y.shifted(2).truncated(N);
    return expect_equal(mul(euler_product(25, N), inner), euler_product(1, N), N);
}

Outcome run_lemma1a(Exponent N)
{
    Series a = divide(mul(qpochhammer(20, 50, N), qpochhammer(30, 50, N)),
                      mul(qpochhammer(10, 50, N), qpochhammer(40, 50, N)));
    Series b = divide(Series::one(N), a);
    Series inner = mul(a, a) + b.shifted(6).truncated(N).scaled(2) -
                   a.shifted(2).truncated(N).scaled(2) + mul(b, b).shifted(8).truncated(N) -
                   Series::monomial(1, 4, N);
    return expect_equal(mul(eta({{50, 2}}, N), inner), eta({{2, 2}}, N), N);
}

Outcome run_lemma1b(Exponent N)
{
    Series x = divide(mul(qpochhammer(15, 25, N), qpochhammer(10, 25, N)),
                      mul(qpochhammer(20, 25, N), qpochhammer(5, 25, N)));
    Series y = divide(Series::one(N), x);
    Series x2 = mul(x, x), y2 = mul(y, y);
    Series inner = mul(x2, x) - y2.shifted(5).truncated(N).scaled(3) -
                   x2.shifted(1).truncated(N).scaled(3) - mul(y2, y).shifted(6).truncated(N) +
                   Series::monomial(5, 3, N);
    return expect_equal(mul(eta({{25, 3}}, N), inner), eta({{1, 3}}, N), N);
}

// g_s: residue classes of f2^2 mod 5, h_s: those of f1^3.
struct Components {
    std::vector<Series> g, h;
};

Components components(Exponent N)
{
    Components c;
    Series f2sq = eta({{2, 2}}, N), f1c = eta({{1, 3}}, N);
    for (int s = 0; s < 5; ++s) {
        c.g.push_back(residue_component(f2sq, 5, s));
        c.h.push_back(residue_component(f1c, 5, s));
    }
    return c;
}

std::vector<std::vector<Series>> circulant(const std::vector<Series>& g)
{
    std::vector<std::vector<Series>> m(5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            m[i].push_back(g[((i - j) % 5 + 5) % 5]);
    return m;
}

Outcome run_circulant(Exponent N)
{
    Components c = components(N);
    return expect_equal(determinant(circulant(c.g)), eta({{10, 12}, {50, -2}}, N), N);
}

Series delta4(const Series& a0, const Series& a1, const Series& a2, const Series& a3,
              const Series& a4)
{
    return determinant({{a1, a0, a4, a3}, {a2, a1, a0, a4}, {a3, a2, a1, a0}, {a4, a3, a2, a1}});
}

Outcome run_mdl_delta(Exponent N)
{
    Components c = components(N);
    const auto& g = c.g;
    const auto& h = c.h;
    auto m = [](const Series& a, const Series& b) { return mul(a, b); };

    // rank-one update form of the 4x4 determinant
    Series abs_a = m(m(g[0], g[2]), g[3]) + m(m(g[0], g[1]), g[4]).scaled(2) -
                   m(m(g[0], g[0]), g[0]) - m(m(g[1], g[1]), g[3]) - m(m(g[2], g[4]), g[4]);
    std::vector<std::vector<Series>> M = {
        {m(g[0], g[2]) - m(g[1], g[1]), m(g[1], g[0]) - m(g[4], g[2]), m(g[1], g[4]) - m(g[0], g[0])},
        {m(g[1], g[0]) - m(g[4], g[2]), m(g[3], g[2]) - m(g[0], g[0]), m(g[0], g[4]) - m(g[1], g[3])},
        {m(g[1], g[4]) - m(g[0], g[0]), m(g[0], g[4]) - m(g[1], g[3]), m(g[0], g[3]) - m(g[4], g[4])}};
    std::vector<Series> v = {g[1], g[2], g[3]};
    Series quad = Series::zero(N);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            quad = quad + m(m(v[i], M[i][j]), v[j]);
    Series delta = delta4(g[0], g[1], g[2], g[3], g[4]);
    if (auto o = expect_equal(delta, m(g[4], abs_a) - quad, N); !o.passed)
        return o;

    // Cramer column for the residue-4 component of f1^3 / f2^2
    auto a = circulant(g);
    for (int i = 0; i < 5; ++i)
        a[i][4] = h[i];
    Series d4 = determinant(a);
    for (int s : {2, 4})
        if (!h[s].is_zero())
            return fail(-1, "h_" + std::to_string(s) + " = 0", "nonzero");
    Series expansion = m(h[0], delta) + m(h[1], delta4(g[1], g[2], g[3], g[4], g[0])) +
                       m(h[3], delta4(g[3], g[4], g[0], g[1], g[2]));
    if (auto o = expect_equal(d4, expansion, N); !o.passed)
        return o;
    Series p4 = residue_component(eta({{1, 3}, {2, -2}}, N), 5, 4);
    return expect_equal(m(p4, determinant(circulant(g))), d4, N);
}

Outcome run_cor_mod5(Exponent N)
{
    const mpz_class five = 5;
    Series c = c_series(N, five), p = p_series(N, five);
    Series two_inv = Series::monomial(3, 0, N, five);  // 2 * 3 = 1 mod 5
    Series ce = mul(two_inv, p + c), co = mul(two_inv, p - c);
    for (const Series* s : {&c, &ce, &co})
        if (auto o = expect_zero(residue_component(*s, 5, 4), N); !o.passed)
            return o;

    Series cx = c_series(N), px = p_series(N);
    for (Exponent n = 0; n <= N; ++n) {
        mpz_class pn = px.coeff(n), cn = cx.coeff(n);
        if (odd(pn + cn) || abs(cn) > pn)
            return fail(n, "(p + C)/2 a non-negative integer no larger than p",
                        "p = " + str(pn) + ", C = " + str(cn));
    }
    return pass();
}

Outcome run_thm3(Exponent N)
{
    Series s = eta({{2, 3}, {10, 1}, {1, -1}, {5, -3}}, N) -
               eta_q({{1, 1}, {10, 5}, {2, -1}, {5, -5}}, 1, N);
    return expect_equal(s, Series::one(N), N);
}

Outcome run_thm8(Exponent N)
{
    Series s = eta({{2, 7}, {7, 1}, {1, -7}, {14, -1}}, N) -
               eta_q({{7, 4}, {1, -4}}, 1, N).scaled(7) +
               eta_q({{14, 7}, {1, -3}, {2, -1}, {7, -3}}, 3, N).scaled(7);
    return expect_equal(s, Series::one(N), N);
}

// ---------------------------------------------------------------------------
// a(n) modulo powers of two

struct Clause {
    int value;
    std::vector<std::int64_t> residues;  // of the omega index, mod 2^m
};

std::vector<Clause> clauses(int m)
{
    std::vector<Clause> c = {{1, {-1, 0}}};
    if (m >= 2)
        c.push_back({3, {-2, 1}});
    if (m >= 3) {
        c.push_back({5, {-m - 1, m}});
        c.push_back({7, {-3, 2}});
    }
    if (m >= 4) {
        c.push_back({9, {-8, 7}});
        c.push_back({11, {-7, 6}});
        c.push_back({13, {-4, 3}});
        c.push_back({15, {-6, 5}});
    }
    return c;
}

Outcome run_thm4(int m, Exponent N)
{
    const std::int64_t M = std::int64_t(1) << m;
    std::vector<int> value_of(M, -1);
    for (const auto& c : clauses(m))
        for (auto r : c.residues) {
            auto rr = ((r % M) + M) % M;
            if (value_of[rr] != -1)
                return fail(-1, "residue classes partition Z/" + std::to_string(M),
                            "residue " + std::to_string(rr) + " claimed twice");
            value_of[rr] = c.value;
        }
    for (std::int64_t r = 0; r < M; ++r)
        if (value_of[r] == -1)
            return fail(-1, "residue classes partition Z/" + std::to_string(M),
                        "residue " + std::to_string(r) + " unclaimed");

    Series a = a_cached(N, mpz_class(M));
    auto table = omegas(N);
    for (Exponent n = 0; n <= N; ++n) {
        bool zero = a.coeff(n) == 0;
        if (zero == table->contains(n))
            return fail(n, table->contains(n) ? "nonzero mod " + std::to_string(M) : "0",
                        str(a.coeff(n)));
    }
    std::int64_t k = 0;
    for (; pentagonal(k) <= N; ++k) {
        Exponent e = pentagonal(k);
        int want = value_of[k % M];
        if (a.coeff(e) != want)
            return fail(e, std::to_string(want), str(a.coeff(e)));
    }
    return pass(std::to_string(k) + " omega indices, " + std::to_string(k / M) +
                " full periods mod " + std::to_string(M));
}

Outcome run_cor5_periodicity(Exponent N)
{
    Series a = a_cached(N, mpz_class(16));
    for (int m = 1; m <= 4; ++m) {
        const std::int64_t M = std::int64_t(1) << m;
        for (std::int64_t k = 0; pentagonal(k + M) <= N; ++k) {
            mpz_class lo = a.coeff(pentagonal(k)), hi = a.coeff(pentagonal(k + M));
            if ((hi - lo) % M != 0)
                return fail(pentagonal(k + M), str(lo % M) + " mod " + std::to_string(M),
                            str(hi % M));
        }
    }
    return pass();
}

// ---------------------------------------------------------------------------
// a(7n+2)

struct EtaTerm {
    std::int64_t coefficient;
    Factors factors;
    Exponent shift;
};

Outcome run_thm6(Exponent N)
{
    const EtaTerm terms[] = {
        {1024, {{2, 8}, {14, 18}, {1, -20}, {7, -7}}, 8},
        {1344, {{2, 9}, {14, 11}, {1, -21}}, 6},
        {-1024, {{2, 16}, {14, 10}, {1, -24}, {7, -3}}, 5},
        {72, {{2, 10}, {7, 7}, {14, 4}, {1, -22}}, 4},
        {-320, {{2, 17}, {7, 4}, {14, 3}, {1, -25}}, 3},
        {-40, {{2, 11}, {7, 14}, {1, -23}, {14, -3}}, 2},
        {56, {{2, 18}, {7, 11}, {1, -26}, {14, -4}}, 1},
        {1, {{2, 12}, {7, 21}, {1, -24}, {14, -10}}, 0},
    };
    Series rhs = Series::zero(N);
    for (const auto& t : terms)
        rhs = rhs + eta_q(t.factors, t.shift, N).scaled(7 * t.coefficient);
    Series lhs = dissect(a_series(7 * N + 2), 7, 2);
    return expect_equal(lhs, rhs, N);
}

Outcome run_cor7(Exponent N)
{
    Series a = a_series(7 * N + 2, mpz_class(7));
    return expect_zero(dissect(a, 7, 2), N);
}

Outcome run_rk_basis(Exponent N)
{
    const Exponent W = N + 10;
    Series L = dissect(a_series(7 * W + 2), 7, 2);
    Series lhs = mul(eta_q({{1, 20}, {7, 7}, {2, -8}, {14, -18}}, -8, W), L);

    Series t = eta_q({{2, 1}, {7, 7}, {1, -1}, {14, -7}}, -2, W);
    Series ab = eta_q({{2, 8}, {7, 4}, {1, -4}, {14, -8}}, -3, W) - t.scaled(4);
    auto poly = [&](std::initializer_list<long> coeffs) {
        std::optional<Series> acc;
        Series power = Series::one(W);
        for (long c : coeffs) {
            Series term = power.scaled(c);
            acc = acc ? *acc + term : term;
            power = mul(power, t);
        }
        return *acc;
    };
    Series rhs = poly({7168, -19264, -8456, 1288, 7}) + mul(ab, poly({-7168, -2240, 392}));
    return expect_equal(lhs, rhs, N);
}

// ---------------------------------------------------------------------------
// shifted sums of C(5n+4)

Series conv(const Series& base, ShiftFamily family, const Weight& w, std::int64_t scale)
{
    return theta_convolution(base, family, w, scale);
}

Outcome run_c5_convolutions(Exponent N)
{
    Series c5 = c5n4_series(N);
    Outcome o = expect_equal(c5, eta({{1, 2}, {5, 1}, {10, 2}, {2, -4}}, N).scaled(5), N);
    return both(o, expect_equal(conv(c5, ShiftFamily::pentagonal, weights::alternating, 5),
                                eta({{1, 2}, {5, 2}, {10, 2}, {2, -4}}, N).scaled(5), N));
}

Outcome run_cor2a_dissection(Exponent N)
{
    Series a = eta({{1, 2}, {5, 2}, {10, 2}, {2, -4}}, 2 * N + 1);
    Series rhs = eta({{2, 1}, {5, 8}, {20, 1}, {1, -4}, {4, -1}, {10, -3}}, N).scaled(-2) +
                 eta_q({{4, 2}, {5, 3}, {20, 2}, {1, -3}, {2, -1}, {10, -1}}, 1, N).scaled(2) +
                 eta_q({{2, 1}, {5, 3}, {20, 6}, {1, -3}, {4, -2}, {10, -3}}, 3, N).scaled(2);
    return expect_equal(dissect(a, 2, 1), rhs, N);
}

Outcome run_big_10n9(Exponent N)
{
    const EtaTerm terms[] = {
        {17, {{4, 38}, {10, 4}, {2, -20}, {20, -6}}, 0},
        {617, {{4, 31}, {5, 5}, {1, -1}, {2, -16}, {20, -3}}, 1},
        {6448, {{4, 34}, {10, 2}, {2, -18}, {20, -2}}, 2},
        {37948, {{4, 27}, {5, 5}, {20, 1}, {1, -1}, {2, -14}, {10, -2}}, 3},
        {57143, {{4, 30}, {20, 2}, {2, -16}}, 4},
        {110960, {{4, 23}, {5, 5}, {20, 5}, {1, -1}, {2, -12}, {10, -4}}, 5},
        {-331248, {{4, 26}, {20, 6}, {2, -14}, {10, -2}}, 6},
        {-346100, {{4, 19}, {5, 5}, {20, 9}, {1, -1}, {2, -10}, {10, -6}}, 7},
        {422490, {{4, 22}, {20, 10}, {2, -12}, {10, -4}}, 8},
        {453450, {{4, 15}, {5, 5}, {20, 13}, {1, -1}, {2, -8}, {10, -8}}, 9},
        {471600, {{4, 18}, {20, 14}, {2, -10}, {10, -6}}, 10},
        {-367500, {{4, 11}, {5, 5}, {20, 17}, {1, -1}, {2, -6}, {10, -10}}, 11},
        {-1736450, {{4, 14}, {20, 18}, {2, -8}, {10, -8}}, 12},
        {-5000, {{4, 7}, {5, 5}, {20, 21}, {1, -1}, {2, -4}, {10, -12}}, 13},
        {1630000, {{4, 10}, {20, 22}, {2, -6}, {10, -10}}, 14},
        {162500, {{4, 3}, {5, 5}, {20, 25}, {1, -1}, {2, -2}, {10, -14}}, 15},
        {-466875, {{4, 6}, {20, 26}, {2, -4}, {10, -12}}, 16},
        {-46875, {{5, 5}, {20, 29}, {1, -1}, {4, -1}, {10, -16}}, 17},
        {-100000, {{4, 2}, {20, 30}, {2, -2}, {10, -14}}, 18},
        {46875, {{20, 34}, {4, -2}, {10, -16}}, 20},
    };
    Series inner = Series::zero(N);
    for (const auto& t : terms)
        inner = inner + eta_q(t.factors, t.shift, N).scaled(t.coefficient);
    Series rhs = mul(eta({{5, 2}, {1, -10}, {2, -4}}, N), inner).scaled(-10);
    Series a = eta({{1, 2}, {5, 6}, {2, -4}}, 10 * N + 9);
    return expect_equal(dissect(a, 10, 9), rhs, N);
}

// ---------------------------------------------------------------------------
// helper identities

Outcome identity(Series lhs, Series rhs, Exponent N) { return expect_equal(lhs, rhs, N); }

Check helper(std::string id, std::string anchor, Exponent order,
             std::function<Outcome(Exponent)> run, Mod modulus = std::nullopt)
{
    return make(std::move(id), "auxiliary product identity", std::move(anchor), order,
                std::move(run), std::move(modulus));
}

std::vector<Check> helpers()
{
    const mpz_class two = 2;
    std::vector<Check> out;
    out.push_back(helper("h_f2sq_over_f1sq_2diss",
                         "f2^2/f1^2 = f8^5/(f2^3 f16^2) + 2q f4^2 f16^2/(f2^3 f8)", 400,
                         [](Exponent N) {
                             return identity(eta({{2, 2}, {1, -2}}, N),
                                             eta({{8, 5}, {2, -3}, {16, -2}}, N) +
                                                 eta_q({{4, 2}, {16, 2}, {2, -3}, {8, -1}}, 1, N)
                                                     .scaled(2),
                                             N);
                         }));
    out.push_back(helper("h_f4p5_mod2", "f4^5/(f1^3 f8^2) = f1 (mod 2)", 2000,
                         [two](Exponent N) {
                             return identity(eta({{4, 5}, {1, -3}, {8, -2}}, N, two),
                                             euler_product(1, N, two), N);
                         },
                         two));
    out.push_back(helper("h_f2c_f1c_mod2", "f2^3/f1^3 = f2^2/f1 (mod 2)", 2000,
                         [two](Exponent N) {
                             return identity(eta({{2, 3}, {1, -3}}, N, two),
                                             eta({{2, 2}, {1, -1}}, N, two), N);
                         },
                         two));
    out.push_back(helper("h_f2c_f1c_3n1",
                         "sum_n [q^(3n+1)] f2^3/f1^3 q^n = 3 f2^4 f3^5/(f1^8 f6)", 400,
                         [](Exponent N) {
                             return identity(dissect(eta({{2, 3}, {1, -3}}, 3 * N + 2), 3, 1),
                                             eta({{2, 4}, {3, 5}, {1, -8}, {6, -1}}, N).scaled(3),
                                             N);
                         }));
    out.push_back(helper("h_f2c_f1c_3n2",
                         "sum_n [q^(3n+2)] f2^3/f1^3 q^n = 6 f2^3 f3^2 f6^2/f1^7", 400,
                         [](Exponent N) {
                             return identity(dissect(eta({{2, 3}, {1, -3}}, 3 * N + 2), 3, 2),
                                             eta({{2, 3}, {3, 2}, {6, 2}, {1, -7}}, N).scaled(6),
                                             N);
                         }));
    out.push_back(helper("h_f2sqf3_2diss",
                         "f2^2 f3/f1^3 = f4^6 f6^3/(f2^7 f12^2) + 3q f4^2 f6 f12^2/f2^5", 400,
                         [](Exponent N) {
                             return identity(eta({{2, 2}, {3, 1}, {1, -3}}, N),
                                             eta({{4, 6}, {6, 3}, {2, -7}, {12, -2}}, N) +
                                                 eta_q({{4, 2}, {6, 1}, {12, 2}, {2, -5}}, 1, N)
                                                     .scaled(3),
                                             N);
                         }));
    out.push_back(helper("h_f2sqf5_mod2", "f2^2 f5/f1^3 = f4^2/f2 + q f20^2/f10 (mod 2)", 2000,
                         [two](Exponent N) {
                             return identity(eta({{2, 2}, {5, 1}, {1, -3}}, N, two),
                                             eta({{4, 2}, {2, -1}}, N, two) +
                                                 eta_q({{20, 2}, {10, -1}}, 1, N, two),
                                             N);
                         },
                         two));
    out.push_back(helper("cor5b_dissection",
                         "f1^2/f2 = f25^2/f50 - 2q (q^15,q^35,q^50;q^50) + 2q^4 (q^5,q^45,q^50;q^50)",
                         400, [](Exponent N) {
                             return identity(eta({{1, 2}, {2, -1}}, N),
                                             eta({{25, 2}, {50, -1}}, N) -
                                                 tp(15, 50, N).shifted(1).truncated(N).scaled(2) +
                                                 tp(5, 50, N).shifted(4).truncated(N).scaled(2),
                                             N);
                         }));
    out.push_back(helper("h_f1sq_2diss", "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8", 400,
                         [](Exponent N) {
                             return identity(eta({{1, 2}}, N),
                                             eta({{2, 1}, {8, 5}, {4, -2}, {16, -2}}, N) -
                                                 eta_q({{2, 1}, {16, 2}, {8, -1}}, 1, N).scaled(2),
                                             N);
                         }));
    out.push_back(helper("h_f1p4_2diss", "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2", 400,
                         [](Exponent N) {
                             return identity(eta({{1, 4}}, N),
                                             eta({{4, 10}, {2, -2}, {8, -4}}, N) -
                                                 eta_q({{2, 2}, {8, 4}, {4, -2}}, 1, N).scaled(4),
                                             N);
                         }));
    out.push_back(helper(
        "h_cor5d_reduction",
        "odd part of f1^2 f5^4 f10^2/f2^4 = odd part of f1^2 f5^4 (mod 2)", 2000, [two](Exponent N) {
            return identity(dissect(eta({{1, 2}, {5, 4}, {10, 2}, {2, -4}}, 2 * N + 1, two), 2, 1),
                            dissect(eta({{1, 2}, {5, 4}}, 2 * N + 1, two), 2, 1), N);
        },
        two));
    out.push_back(helper("h_f2sq_2diss", "f2^2 = f4 f16^5/(f8^2 f32^2) - 2q^2 f4 f32^2/f16", 400,
                         [](Exponent N) {
                             return identity(eta({{2, 2}}, N),
                                             eta({{4, 1}, {16, 5}, {8, -2}, {32, -2}}, N) -
                                                 eta_q({{4, 1}, {32, 2}, {16, -1}}, 2, N).scaled(2),
                                             N);
                         }));
    out.push_back(helper("h_f1f4p5_mod2", "f1 f4^5/(f2^2 f8^2) = f1 (mod 2)", 2000,
                         [two](Exponent N) {
                             return identity(eta({{1, 1}, {4, 5}, {2, -2}, {8, -2}}, N, two),
                                             euler_product(1, N, two), N);
                         },
                         two));
    out.push_back(helper("h_f1sq_over_f2_2diss", "f1^2/f2 = f8^5/(f4^2 f16^2) - 2q f16^2/f8", 400,
                         [](Exponent N) {
                             return identity(eta({{1, 2}, {2, -1}}, N),
                                             eta({{8, 5}, {4, -2}, {16, -2}}, N) -
                                                 eta_q({{16, 2}, {8, -1}}, 1, N).scaled(2),
                                             N);
                         }));
    out.push_back(helper("h_f2f10_diss",
                         "f2 f10 = (q^20,q^30,q^50;q^50)^2 - q^2 f10 f50 - q^4 (q^10,q^40,q^50;q^50)^2",
                         400, [](Exponent N) {
                             Series u = tp(20, 50, N), v = tp(10, 50, N);
                             return identity(eta({{2, 1}, {10, 1}}, N),
                                             mul(u, u) - eta_q({{10, 1}, {50, 1}}, 2, N) -
                                                 mul(v, v).shifted(4).truncated(N),
                                             N);
                         }));
    out.push_back(helper("h_f1f5_diss",
                         "f1 f5 = (q^10,q^15,q^25;q^25)^2 - q f5 f25 - q^2 (q^5,q^20,q^25;q^25)^2",
                         400, [](Exponent N) {
                             Series u = tp(10, 25, N), v = tp(5, 25, N);
                             return identity(eta({{1, 1}, {5, 1}}, N),
                                             mul(u, u) - eta_q({{5, 1}, {25, 1}}, 1, N) -
                                                 mul(v, v).shifted(2).truncated(N),
                                             N);
                         }));
    return out;
}

// ---------------------------------------------------------------------------
// catalogue entries for the shifted-sum congruences

struct ShiftedSum {
    bool on_a;  // base a(n), otherwise C(5n+4)
    ShiftFamily family;
    Weight weight;
    std::int64_t scale;
    unsigned long modulus;  // 0 for exact integers
};

Series shifted_sum(const ShiftedSum& s, Exponent N)
{
    Mod m = s.modulus ? Mod(mpz_class(s.modulus)) : std::nullopt;
    Series base = s.on_a ? a_cached(N, m) : c5_cached(N, m);
    return conv(base, s.family, s.weight, s.scale);
}

Check congruence(std::string id, std::string anchor, ShiftedSum sum, Exponent order,
                 std::function<Outcome(const Series&)> verdict, bool counterexample = false)
{
    Mod m = sum.modulus ? Mod(mpz_class(sum.modulus)) : std::nullopt;
    Check c = make(
        std::move(id), sum.on_a ? "shifted sum of a(n)" : "shifted sum of C(5n+4)",
        std::move(anchor), order,
        [sum = std::move(sum), verdict = std::move(verdict), counterexample](Exponent N) {
            Outcome o = verdict(shifted_sum(sum, N));
            return counterexample ? expect_counterexample(o) : o;
        },
        m);
    c.expects_counterexample = counterexample;
    return c;
}

std::vector<Check> shifted_sum_checks()
{
    using F = ShiftFamily;
    namespace w = weights;
    const Exponent NC = 2000, NA = 4000, NZ = 1000;
    std::vector<Check> out;

    // C(5n+4) against pentagonal shifts
    out.push_back(congruence(
        "cor1a", "n even: sum_k C(5(n-w_k)+4) odd iff n in {20 w_j}",
        {false, F::pentagonal, w::unit, 1, 2}, NC, [](const Series& s) {
            return along(s, 2, 0, every, odd_iff(in_table(omegas(s.order()), 10)),
                         "odd iff n in {20 w_j}");
        }));
    out.push_back(congruence(
        "cor1b", "n = 0 mod 8: sum_k C(5(n-5w_k)+4) odd iff n in {8 D_j}",
        {false, F::pentagonal, w::unit, 5, 2}, NC, [](const Series& s) {
            return along(s, 8, 0, every, odd_iff(in_table(deltas(s.order()), 1)),
                         "odd iff n in {8 D_j}");
        }));
    out.push_back(congruence(
        "cor1c", "n = 4 mod 8: sum_k C(5(n-5w_k)+4) odd iff n in {40 D_j + 4}",
        {false, F::pentagonal, w::unit, 5, 2}, NC, [](const Series& s) {
            return along(s, 8, 4, every, odd_iff(in_table(deltas(s.order()), 5)),
                         "odd iff n in {40 D_j + 4}");
        }));
    out.push_back(congruence("cor2a", "n odd: sum_k C(5(n-5w_k)+4) even",
                             {false, F::pentagonal, w::unit, 5, 2}, NC, [](const Series& s) {
                                 return along(s, 2, 1, every, is_even, "even");
                             }));
    out.push_back(congruence("cor2b", "n = 6 mod 8: sum_k C(5(n-5w_k)+4) even",
                             {false, F::pentagonal, w::unit, 5, 2}, NC, [](const Series& s) {
                                 return along(s, 8, 6, every, is_even, "even");
                             }));
    out.push_back(congruence("cor2c", "n = 5 mod 8: sum_k (-1)^k C(5(n-5w_k)+4) = 0 (mod 25)",
                             {false, F::pentagonal, w::alternating, 5, 25}, NC,
                             [](const Series& s) {
                                 return along(s, 8, 5, every, divisible_by(25), "0 mod 25");
                             }));
    out.push_back(congruence(
        "cor2d", "n != 0 mod 5: sum_k (-1)^k C(5(10n+4-10w_k)+4) = 0 (mod 25)",
        {false, F::pentagonal, w::alternating, 10, 25}, NC, [](const Series& s) {
            return along(s, 10, 4, [](Exponent n) { return n % 5 != 0; }, divisible_by(25),
                         "0 mod 25");
        }));
    out.push_back(congruence(
        "cor2e", "n != 2 mod 5: sum_k (-1)^k C(5(10n+9-10w_k)+4) = 0 (mod 25)",
        {false, F::pentagonal, w::alternating, 10, 25}, NC, [](const Series& s) {
            return along(s, 10, 9, [](Exponent n) { return n % 5 != 2; }, divisible_by(25),
                         "0 mod 25");
        }));

    // a(n) against pentagonal shifts
    out.push_back(congruence("cor3a", "sum_k a(2n-w_k) odd iff n in {w_j}",
                             {true, F::pentagonal, w::unit, 1, 2}, NA, [](const Series& s) {
                                 return along(s, 2, 0, every,
                                              odd_iff(in_table(omegas(s.order()))),
                                              "odd iff n in {w_j}");
                             }));
    out.push_back(congruence("cor3b", "sum_k a(n-2w_k) odd iff n in {D_j}",
                             {true, F::pentagonal, w::unit, 2, 2}, NA, [](const Series& s) {
                                 return along(s, 1, 0, every,
                                              odd_iff(in_table(deltas(s.order()))),
                                              "odd iff n in {D_j}");
                             }));
    out.push_back(congruence(
        "cor3b_printed", "refutes: sum_k a(2n+1-2w_k) even iff n in {D_j}",
        {true, F::pentagonal, w::unit, 2, 2}, NA,
        [](const Series& s) {
            auto member = in_table(deltas(s.order()));
            return along(
                s, 2, 1, every,
                [member](Exponent n, const mpz_class& v) { return !odd(v) == member(n); },
                "even iff n in {D_j}");
        },
        true));
    out.push_back(congruence("cor3c", "sum_k a(2n-5w_k) odd iff n in {D_j}",
                             {true, F::pentagonal, w::unit, 5, 2}, NA, [](const Series& s) {
                                 return along(s, 2, 0, every,
                                              odd_iff(in_table(deltas(s.order()))),
                                              "odd iff n in {D_j}");
                             }));
    out.push_back(congruence("cor3d", "sum_k a(2n+1-5w_k) odd iff n in {5 D_j}",
                             {true, F::pentagonal, w::unit, 5, 2}, NA, [](const Series& s) {
                                 return along(s, 2, 1, every,
                                              odd_iff(in_table(deltas(s.order()), 5)),
                                              "odd iff n in {5 D_j}");
                             }));
    out.push_back(congruence("cor4a", "sum_{k>=0} (-1)^k a(2n+1-w_k) even",
                             {true, F::pentagonal_indexed, w::alternating, 1, 2}, NA,
                             [](const Series& s) { return along(s, 2, 1, every, is_even, "even"); }));
    for (bool printed : {false, true}) {
        Weight wt = printed ? Weight(w::unit) : Weight(w::alternating);
        std::string sfx = printed ? "_printed" : "";
        std::string sign = printed ? "" : "(-1)^k ";
        std::string pre = printed ? "refutes: " : "";
        out.push_back(congruence(
            "cor4b" + sfx, pre + "sum_k " + sign + "a(3n+1-2w_k) = 0 (mod 3)",
            {true, F::pentagonal, wt, 2, 3}, NA,
            [](const Series& s) { return along(s, 3, 1, every, divisible_by(3), "0 mod 3"); },
            printed));
        out.push_back(congruence(
            "cor4c" + sfx, pre + "sum_k " + sign + "a(3n+2-2w_k) = 0 (mod 6)",
            {true, F::pentagonal, wt, 2, 6}, NA,
            [](const Series& s) { return along(s, 3, 2, every, divisible_by(6), "0 mod 6"); },
            printed));
        out.push_back(congruence(
            "cor4d" + sfx, pre + "sum_k " + sign + "a(2n+1-3w_k) = 0 (mod 3)",
            {true, F::pentagonal, wt, 3, 3}, NA,
            [](const Series& s) { return along(s, 2, 1, every, divisible_by(3), "0 mod 3"); },
            printed));
    }

    // triangular shifts
    out.push_back(congruence(
        "cor5_jacobi_a", "n = 1,3 mod 5: sum_k (-1)^k (2k+1) C(5(n-D_k)+4) = 0 (mod 25)",
        {false, F::triangular, w::jacobi, 1, 25}, NC, [](const Series& s) {
            return along(s, 1, 0, residue_in(5, {1, 3}), divisible_by(25), "0 mod 25");
        }));
    out.push_back(congruence(
        "cor5_jacobi_b", "n = 2,3 mod 5: sum_k (-1)^k (2k+1) C(5(n-2D_k)+4) = 0",
        {false, F::triangular, w::jacobi, 2, 0}, NZ, [](const Series& s) {
            return both(expect_zero(residue_component(s, 5, 2), s.order()),
                        expect_zero(residue_component(s, 5, 3), s.order()));
        }));
    out.push_back(congruence("cor5_jacobi_c", "n != 0 mod 5: sum_k C(5(n-2D_k)+4) even",
                             {false, F::triangular, w::unit, 2, 2}, NC, [](const Series& s) {
                                 return along(s, 1, 0, [](Exponent n) { return n % 5 != 0; },
                                              is_even, "even");
                             }));
    out.push_back(congruence("cor5_jacobi_d", "n odd: sum_k C(5(n-5D_k)+4) even",
                             {false, F::triangular, w::unit, 5, 2}, NC, [](const Series& s) {
                                 return along(s, 2, 1, every, is_even, "even");
                             }));
    out.push_back(congruence("cor6a", "sum_k (-1)^k (2k+1) a(2n+1-D_k) = 0",
                             {true, F::triangular, w::jacobi, 1, 0}, NZ, [](const Series& s) {
                                 return expect_zero(residue_component(s, 2, 1), s.order());
                             }));
    out.push_back(congruence("cor6b", "sum_k a(4n-D_k) odd iff n in {w_j}",
                             {true, F::triangular, w::unit, 1, 2}, NA, [](const Series& s) {
                                 return along(s, 4, 0, every,
                                              odd_iff(in_table(omegas(s.order()))),
                                              "odd iff n in {w_j}");
                             }));
    out.push_back(congruence("cor6c", "sum_k a(4n+2-D_k) even",
                             {true, F::triangular, w::unit, 1, 2}, NA,
                             [](const Series& s) { return along(s, 4, 2, every, is_even, "even"); }));
    out.push_back(congruence("cor6d", "n != 1 mod 5: sum_k a(5n+2-2D_k) even",
                             {true, F::triangular, w::unit, 2, 2}, NA, [](const Series& s) {
                                 return along(s, 5, 2, [](Exponent n) { return n % 5 != 1; },
                                              is_even, "even");
                             }));

    // squares, triangular and quadratic shifts of C(5n+4)
    out.push_back(make(
        "gauss_sq_cors", "shifted sums of C(5n+4)",
        "n = 4 mod 5: sum_{k in Z} (-1)^k C(5(n-s k^2)+4) = 0 (mod 25), s = 1, 2", NC,
        [](Exponent N) {
            Outcome o = pass();
            for (int scale : {1, 2}) {
                Series s = shifted_sum({false, F::squares, w::alternating, scale, 25}, N);
                o = both(o, along(s, 5, 4, every, divisible_by(25), "0 mod 25"));
            }
            return o;
        },
        mpz_class(25)));
    out.push_back(make(
        "tri_cors", "shifted sums of C(5n+4)",
        "n = 6,8 mod 10: sum_k C(5(n-D_k)+4) even; n odd: sum_k C(5(n-5D_k)+4) even", NC,
        [](Exponent N) {
            Series s1 = shifted_sum({false, F::triangular, w::unit, 1, 2}, N);
            Series s5 = shifted_sum({false, F::triangular, w::unit, 5, 2}, N);
            return both(along(s1, 1, 0, residue_in(10, {6, 8}), is_even, "even"),
                        along(s5, 2, 1, every, is_even, "even"));
        },
        mpz_class(2)));
    out.push_back(congruence(
        "ram_theta_cor", "n = 1,3 mod 5: sum_{k in Z} (-1)^k (3k+1) C(5(n-3k^2-2k)+4) = 0",
        {false, F::ramanujan_quadratic, w::ramanujan, 1, 0}, NZ, [](const Series& s) {
            return both(expect_zero(residue_component(s, 5, 1), s.order()),
                        expect_zero(residue_component(s, 5, 3), s.order()));
        }));
    out.push_back(congruence(
        "weighted_pent_cor_a", "n = 2,3 mod 5: sum_{k in Z} (1-k) C(5(n-w_k)+4) = 0 (mod 25)",
        {false, F::pentagonal, w::one_minus_k, 1, 25}, NC, [](const Series& s) {
            return along(s, 1, 0, residue_in(5, {2, 3}), divisible_by(25), "0 mod 25");
        }));
    out.push_back(make(
        "weighted_pent_cor_b", "shifted sums of C(5n+4)",
        "n = 9 mod 10: sum_{k in Z} (1-k) C(5(n-5w_k)+4) = 0 (mod 25) and "
        "sum_{k in Z} (1-6k) C(5(n-5w_k)+4) = 0 (mod 50)",
        NC,
        [](Exponent N) {
            Series lin = shifted_sum({false, F::pentagonal, w::one_minus_k, 5, 50}, N);
            Series six = shifted_sum({false, F::pentagonal, w::one_minus_6k, 5, 50}, N);
            return both(along(lin, 10, 9, every, divisible_by(25), "0 mod 25"),
                        along(six, 10, 9, every, divisible_by(50), "0 mod 50"));
        },
        mpz_class(50)));
    return out;
}

// ---------------------------------------------------------------------------
// cross-checks on the generating functions themselves

Outcome run_a_theta(Exponent N)
{
    Series a = a_series(N);
    Outcome o = pass();
    for (std::int64_t s : {1, 2, 3, 5}) {
        Series lhs = conv(a, ShiftFamily::pentagonal, weights::alternating, s);
        Series rhs = mul(eta({{1, -3}, {2, 2}}, N), euler_product(s, N));
        o = both(o, expect_equal(lhs, rhs, N));
    }
    return both(o, expect_equal(conv(a, ShiftFamily::triangular, weights::jacobi, 1),
                                eta({{2, 2}}, N), N));
}

Outcome run_theta_identities(Exponent N)
{
    const std::pair<ThetaKind, EtaQuotientSpec> table[] = {
        {ThetaKind::gauss_squares, {{1, 2}, {2, -1}}},
        {ThetaKind::triangular, {{2, 2}, {1, -1}}},
        {ThetaKind::jacobi_cubes, {{1, 3}}},
        {ThetaKind::weighted_pentagonal, {{1, 5}, {2, -2}}},
        {ThetaKind::ramanujan_quadratic, {{2, 5}, {1, -2}}},
        {ThetaKind::pentagonal_6n_minus_1, {{1, 5}, {2, -2}}},
    };
    Outcome o = pass();
    for (const auto& [kind, spec] : table) {
        Series rhs = eta_expand(spec, N);
        if (kind == ThetaKind::pentagonal_6n_minus_1)
            rhs = rhs.negated();
        o = both(o, expect_equal(theta(kind, N), rhs, N));
    }
    return o;
}

Outcome run_a_oracles(Exponent n_max)
{
    Series a = a_series(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (auto which : all_interpretations()) {
            mpz_class v = a_oracle(n, which);
            if (v != a.coeff(n))
                return fail(n, str(a.coeff(n)),
                            std::string(interpretation_name(which)) + " counts " + str(v));
        }
    for (int n = 0; n <= std::min<Exponent>(n_max, 8); ++n)
        for (auto which : all_interpretations()) {
            auto objs = colored_objects(n, which);
            if (mpz_class(objs.size()) != a.coeff(n))
                return fail(n, str(a.coeff(n)),
                            "generated " + std::to_string(objs.size()) + " " +
                                std::string(interpretation_name(which)) + " objects");
        }
    return pass();
}

} // namespace

std::vector<Check> build_catalogue()
{
    std::vector<Check> out;
    auto add = [&](Check c) { out.push_back(std::move(c)); };

    Check cgen = make("cgen_bruteforce", "crank generating function against enumeration",
                      "sum_n (c_e(n) - c_o(n)) q^n = 2q + (q;q)/(-q;q)^2, c_e + c_o = p", 45,
                      run_cgen);
    cgen.requires_bruteforce = true;
    add(std::move(cgen));
    add(make("thm1", "residue class 4 mod 5 of the crank difference",
             "sum_n C(5n+4) q^(5n+4) = 5 q^4 f5^2 f25 f50^2 / f10^4", 300, run_thm1));
    add(make("quint_support", "residue classes missed by f1 and f1^3",
             "f1 has no terms on 3,4 mod 5; f1^3 has none on 2,4 mod 5", 2000,
             run_quint_support));
    add(make("lemma1a", "quintisection of f2^2",
             "f2^2 = f50^2 (A^2 - 2q^2 A - q^4 + 2q^6 B + q^8 B^2), "
             "A = (q^20,q^30;q^50)/(q^10,q^40;q^50), B = 1/A",
             300, run_lemma1a));
    add(make("lemma1b", "quintisection of f1^3",
             "f1^3 = f25^3 (X^3 - 3q X^2 + 5q^3 - 3q^5 Y^2 - q^6 Y^3), "
             "X = (q^10,q^15;q^25)/(q^5,q^20;q^25), Y = 1/X",
             300, run_lemma1b));
    add(make("ramanujan_quint", "quintisection of f1", "f1 = f25 (X - q - q^2 / X)", 300,
             run_ramanujan_quint));
    add(make("circulant_D", "circulant determinant of the components of f2^2",
             "det[g_(i-j mod 5)] = f10^12 / f50^2, f2^2 = g0 + ... + g4 by residue mod 5", 150,
             run_circulant));
    add(make("mdl_delta", "Cramer numerator for residue 4 of f1^3/f2^2",
             "4x4 minor = g4 |A| - v^T M v; D4 = h0 d(g0..) + h1 d(g1..) + h3 d(g3..); P4 D = D4",
             150, run_mdl_delta));
    add(make("cor_mod5", "crank counts on 5n+4 modulo 5",
             "C(5n+4) = c_e(5n+4) = c_o(5n+4) = 0 (mod 5); (p + C)/2 in Z, >= 0", 2000,
             run_cor_mod5, mpz_class(5)));
    add(make("thm3", "level 10 eta-quotient identity",
             "f2^3 f10/(f1 f5^3) - q f1 f10^5/(f2 f5^5) = 1", 500, run_thm3));
    add(make("thm8", "level 14 eta-quotient identity",
             "f2^7 f7/(f1^7 f14) - 7q f7^4/f1^4 + 7q^3 f14^7/(f1^3 f2 f7^3) = 1", 500, run_thm8));
    for (int m = 1; m <= 4; ++m) {
        std::string M = std::to_string(1 << m);
        add(make("thm4_m" + std::to_string(m), "a(n) modulo " + M,
                 "a(n) = 0 (mod " + M + ") off {w_k}; a(w_k) mod " + M +
                     " fixed by k mod " + M,
                 20000, [m](Exponent N) { return run_thm4(m, N); }, mpz_class(1 << m)));
    }
    add(make("cor5_periodicity", "periodicity of a(w_k)",
             "a(w_(k+2^m)) = a(w_k) (mod 2^m), m = 1..4", 20000, run_cor5_periodicity,
             mpz_class(16)));
    add(make("thm6", "generating function of a(7n+2)",
             "sum_n a(7n+2) q^n = 7 (eight eta-quotient terms)", 120, run_thm6));
    add(make("cor7", "a(7n+2) modulo 7", "a(7n+2) = 0 (mod 7)", 10000, run_cor7, mpz_class(7)));
    add(make("rk_basis_identity", "a(7n+2) in the t, AB basis",
             "f1 sum a(7n+2) q^n = p1(t) + AB p2(t), p1 = 7168 - 19264t - 8456t^2 + 1288t^3 + "
             "7t^4, p2 = -7168 - 2240t + 392t^2",
             80, run_rk_basis));

    add(make("c5n4_convolutions", "C(5n+4) generating function",
             "sum C(5n+4) q^n = 5 f1^2 f5 f10^2/f2^4; "
             "sum_k (-1)^k C(5(n-5w_k)+4) = 5 [q^n] f1^2 f5^2 f10^2/f2^4",
             300, run_c5_convolutions));
    add(make("cor2a_dissection", "odd part of f1^2 f5^2 f10^2/f2^4",
             "sum_n [q^(2n+1)] f1^2 f5^2 f10^2/f2^4 q^n = three eta-quotient terms", 300,
             run_cor2a_dissection));
    add(make("a_theta_convolutions", "a(n) times theta series",
             "a f_s = f2^2 f_s/f1^3 (s = 1,2,3,5); a f1^3 = f2^2", 300, run_a_theta));
    add(make("theta_identities", "theta series as products",
             "each sparse theta series equals its eta-quotient", 300, run_theta_identities));
    Check oracles = make("a_oracles", "combinatorial models of a(n)",
                         "three coloured-partition counts equal [q^n] (-q;q)^2/(q;q)", 30,
                         run_a_oracles);
    oracles.requires_bruteforce = true;
    add(std::move(oracles));

    for (auto& c : shifted_sum_checks())
        add(std::move(c));
    for (auto& c : helpers())
        add(std::move(c));
    add(make("big_10n9", "generating function of A(10n+9)",
             "sum_n [q^(10n+9)] f1^2 f5^6/f2^4 q^n = -10 f5^2/(f1^10 f2^4) (twenty terms)", 40,
             run_big_10n9));
    return out;
}

} // namespace qcrank
