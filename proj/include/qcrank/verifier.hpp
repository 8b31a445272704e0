#pragma once

#include "qcrank/qproducts.hpp"
#include "qcrank/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcrank {

/// sum C(n) q^n = 2q + (q;q)_inf / (-q;q)_inf^2, with C(n) = c_e(n) - c_o(n).
Series c_series(Exponent order, std::optional<mpz_class> modulus = std::nullopt);

/// sum a(n) q^n = (-q;q)_inf^2 / (q;q)_inf.
Series a_series(Exponent order, std::optional<mpz_class> modulus = std::nullopt);

/// sum p(n) q^n = 1 / (q;q)_inf.
Series p_series(Exponent order, std::optional<mpz_class> modulus = std::nullopt);

/// sum C(5n+4) q^n.
Series c5n4_series(Exponent order, std::optional<mpz_class> modulus = std::nullopt);

/// sum_n (sum_k w(k) base(n - scale * exponent(k))) q^n, formed as base times
/// the sparse theta series in q^scale. Same order and ring as `base`.
Series theta_convolution(const Series& base, ShiftFamily family, const Weight& weight,
                         std::int64_t scale);

enum class CheckStatus { pass, fail, skipped };

std::string_view status_name(CheckStatus s);

struct FirstFailure {
    std::int64_t index;
    std::string expected;
    std::string actual;
};

struct Outcome {
    bool passed = true;
    std::optional<FirstFailure> failure;
    std::string note;
};

struct CheckResult {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::skipped;
    Exponent order_used = 0;
    std::optional<FirstFailure> first_failure;
    std::string note;
    double runtime_ms = 0;
};

/*
 * One catalogued verification. `run` receives the order to work at; its
 * meaning is per check (the coefficient bound for series identities, the
 * largest n for brute-force checks).
 *
 * Checks marked `expects_counterexample` document a statement that does not
 * hold as written: they pass when a counterexample is found and the note
 * names it.
 */
struct Check {
    std::string id;
    std::string description;
    std::string anchor;
    Exponent default_order = 0;
    std::optional<mpz_class> modulus;
    bool requires_bruteforce = false;
    bool expects_counterexample = false;
    std::function<Outcome(Exponent order)> run;
};

class UnknownCheck : public std::invalid_argument {
public:
    explicit UnknownCheck(const std::string& id)
        : std::invalid_argument("unknown check id '" + id + "'"), id_(id)
    {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

inline constexpr Exponent kMinCheckOrder = 20;

class Registry {
public:
    /// The full catalogue.
    static const Registry& catalogue();

    explicit Registry(std::vector<Check> checks);

    const std::vector<Check>& checks() const { return checks_; }
    const Check* find(std::string_view id) const;

    /// Runs one check; throws UnknownCheck, or std::invalid_argument when the
    /// order is below kMinCheckOrder. Exceptions thrown by the check itself
    /// become a failed result.
    CheckResult run(std::string_view id, std::optional<Exponent> order = std::nullopt) const;

    /// Runs the given ids on up to `jobs` threads; results keep input order.
    std::vector<CheckResult> run_many(const std::vector<std::string>& ids,
                                      std::optional<Exponent> order, unsigned jobs) const;

private:
    std::vector<Check> checks_;
};

inline CheckResult run_check(std::string_view id, std::optional<Exponent> order = std::nullopt)
{
    return Registry::catalogue().run(id, order);
}

/// Catalogue construction; defined in catalogue.cpp.
std::vector<Check> build_catalogue();

/// Series determinant by cofactor expansion along the first row.
Series determinant(const std::vector<std::vector<Series>>& m);

} // namespace qcrank
