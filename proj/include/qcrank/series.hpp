#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrank {

using Exponent = std::int64_t;

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings.
class ModulusMismatch : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Leading coefficient is not a unit.
class NotInvertible : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/// Requested exponent lies beyond the truncation order.
class BeyondTruncation : public SeriesError {
public:
    using SeriesError::SeriesError;
};

/*
 * Truncated Laurent series
 *
 *     q^v * (c_0 + c_1 q + ... + c_{N-v} q^{N-v}) + O(q^{N+1})
 *
 * over Z, or over Z/mZ when a modulus is set. v is the valuation and N the
 * truncation order: the coefficient of q^e is known exactly for every e <= N
 * (zero below v) and unknown above N.
 *
 * The representation is canonical: c_0 is non-zero, so two series are
 * structurally equal iff they are the same truncated series. The zero series
 * stores nothing and reports valuation N + 1.
 *
 * Residues are kept in 0..m-1. Moduli below 2^63 use machine words, larger
 * ones use GMP integers.
 *
 * Values are immutable once built; every operation returns a new series.
 */
class Series {
public:
    /// Zero series truncated at order 0 over Z.
    Series();

    static Series zero(Exponent order, std::optional<mpz_class> modulus = std::nullopt);
    static Series one(Exponent order, std::optional<mpz_class> modulus = std::nullopt);
    static Series monomial(const mpz_class& c, Exponent e, Exponent order,
                           std::optional<mpz_class> modulus = std::nullopt);

    /// coeffs[i] is the coefficient of q^(valuation + i); missing tail entries
    /// up to `order` are zero. Throws if coeffs reach past `order`.
    static Series from_coefficients(Exponent valuation, const std::vector<mpz_class>& coeffs,
                                    Exponent order,
                                    std::optional<mpz_class> modulus = std::nullopt);

    /// Sparse constructor: (exponent, coefficient) terms, repeated exponents
    /// accumulate, terms above `order` are dropped.
    static Series from_terms(const std::vector<std::pair<Exponent, mpz_class>>& terms,
                             Exponent order,
                             std::optional<mpz_class> modulus = std::nullopt);

    Exponent valuation() const { return valuation_; }
    Exponent order() const { return order_; }
    const std::optional<mpz_class>& modulus() const { return modulus_; }
    bool is_zero() const { return size() == 0; }
    std::size_t size() const;
    std::size_t nonzero_count() const;

    /// Coefficient of q^e. Zero below the valuation; throws BeyondTruncation
    /// above the order.
    mpz_class coeff(Exponent e) const;

    /// Coefficients of q^from .. q^to inclusive (to <= order).
    std::vector<mpz_class> coefficients(Exponent from, Exponent to) const;

    /// Nonzero terms as (exponent, coefficient) pairs, ascending.
    std::vector<std::pair<Exponent, mpz_class>> terms() const;

    /// Forget everything above `order` (must not exceed the current order).
    Series truncated(Exponent order) const;

    /// q^s * this.
    Series shifted(Exponent s) const;

    Series negated() const;
    Series scaled(const mpz_class& c) const;

    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const;

private:
    template <class Ring> friend struct Kernel;

    bool word_backed() const;
    void canonicalize();

    Exponent valuation_ = 1;
    Exponent order_ = 0;
    std::optional<mpz_class> modulus_;
    std::vector<mpz_class> big_;
    std::vector<std::uint64_t> word_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

/// Cauchy product. The factor with fewer nonzero terms drives the outer loop,
/// which makes products with Euler factors O(N * sqrt(N)).
Series mul(const Series& a, const Series& b);

Series invert(const Series& a);

/// a / b without materialising 1/b; sparse in b.
Series divide(const Series& a, const Series& b);

Series pow(const Series& a, std::int64_t k);

/// q -> q^k.
Series subst_qk(const Series& a, std::int64_t k);

/// sum_n a[m n + r] q^n.
Series dissect(const Series& a, std::int64_t m, std::int64_t r);

/// Series whose coefficients are those of `a` on exponents == r (mod m),
/// kept in place.
Series residue_component(const Series& a, std::int64_t m, std::int64_t r);

Series reduce_mod(const Series& a, const mpz_class& m);

inline mpz_class coeff_at(const Series& a, Exponent e) { return a.coeff(e); }

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return a.negated(); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const mpz_class& c, const Series& a) { return a.scaled(c); }

struct Mismatch {
    Exponent index;
    mpz_class lhs;
    mpz_class rhs;
};

/// First exponent e <= upto where a and b differ. Throws if `upto` exceeds
/// either order or the moduli differ.
std::optional<Mismatch> first_difference(const Series& a, const Series& b, Exponent upto);

} // namespace qcrank
