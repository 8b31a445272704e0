#include "qcrank/verifier.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace qcrank {

Series c_series(Exponent order, std::optional<mpz_class> modulus)
{
    // (q;q)/(-q;q)^2 = f1^3 / f2^2
    Series main = eta_expand(EtaQuotientSpec{{1, 3}, {2, -2}}, order, modulus);
    return add(main, Series::monomial(2, 1, order, modulus));
}

Series a_series(Exponent order, std::optional<mpz_class> modulus)
{
    return eta_expand(EtaQuotientSpec{{1, -3}, {2, 2}}, order, std::move(modulus));
}

Series p_series(Exponent order, std::optional<mpz_class> modulus)
{
    return eta_expand(EtaQuotientSpec{{1, -1}}, order, std::move(modulus));
}

Series c5n4_series(Exponent order, std::optional<mpz_class> modulus)
{
    return dissect(c_series(5 * order + 4, std::move(modulus)), 5, 4);
}

Series theta_convolution(const Series& base, ShiftFamily family, const Weight& weight,
                         std::int64_t scale)
{
    Series t = weighted_theta(family, weight, scale, base.order() - base.valuation(),
                              base.modulus());
    return mul(base, t);
}

std::string_view status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

Series determinant(const std::vector<std::vector<Series>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        throw std::invalid_argument("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant needs a square matrix");
    if (n == 1)
        return m[0][0];

    std::optional<Series> acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero() && acc)
            continue;
        std::vector<std::vector<Series>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Series> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Series term = mul(m[0][j], determinant(minor));
        if (j % 2 == 1)
            term = term.negated();
        acc = acc ? add(*acc, term) : term;
    }
    return *acc;
}

// ---------------------------------------------------------------------------

Registry::Registry(std::vector<Check> checks) : checks_(std::move(checks))
{
    for (std::size_t i = 0; i < checks_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (checks_[i].id == checks_[j].id)
                throw std::logic_error("duplicate check id " + checks_[i].id);
}

const Registry& Registry::catalogue()
{
    static const Registry registry(build_catalogue());
    return registry;
}

const Check* Registry::find(std::string_view id) const
{
    for (const auto& c : checks_)
        if (c.id == id)
            return &c;
    return nullptr;
}

CheckResult Registry::run(std::string_view id, std::optional<Exponent> order) const
{
    const Check* check = find(id);
    if (!check)
        throw UnknownCheck(std::string(id));
    Exponent n = order.value_or(check->default_order);
    if (n < kMinCheckOrder)
        throw std::invalid_argument("order " + std::to_string(n) + " is below the minimum of " +
                                    std::to_string(kMinCheckOrder));

    CheckResult result;
    result.id = check->id;
    result.anchor = check->anchor;
    result.order_used = n;
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome out = check->run(n);
        result.status = out.passed ? CheckStatus::pass : CheckStatus::fail;
        result.first_failure = std::move(out.failure);
        result.note = std::move(out.note);
        if (!out.passed && !result.first_failure)
            result.first_failure = FirstFailure{-1, "check to hold", "failed without witness"};
    } catch (const std::exception& e) {
        result.status = CheckStatus::fail;
        result.first_failure = FirstFailure{-1, "no exception", e.what()};
    }
    result.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

std::vector<CheckResult> Registry::run_many(const std::vector<std::string>& ids,
                                            std::optional<Exponent> order, unsigned jobs) const
{
    for (const auto& id : ids)
        if (!find(id))
            throw UnknownCheck(id);
    std::vector<CheckResult> results(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++)
            results[i] = run(ids[i], order);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ids.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return results;
}

} // namespace qcrank
