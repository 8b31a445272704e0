#pragma once

#include "qcrank/series.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcrank {

/// Generalized pentagonal number 1/2 * ceil(k/2) * ceil((3k+1)/2):
/// 0, 1, 2, 5, 7, 12, 15, 22, 26, ...  Even k = 2n gives n(3n+1)/2, odd
/// k = 2n-1 gives n(3n-1)/2.
std::int64_t pentagonal(std::int64_t k);

/// k(k+1)/2.
std::int64_t triangular(std::int64_t k);

/// Exponents bilateral sums are taken over.
enum class ShiftFamily {
    pentagonal,          ///< k in Z, k(3k-1)/2: every generalized pentagonal number once
    pentagonal_indexed,  ///< k >= 0, pentagonal(k): the same set, indexed by the ceiling formula
    triangular,          ///< k >= 0, k(k+1)/2
    squares,             ///< k in Z, k^2 (k and -k emitted separately)
    ramanujan_quadratic, ///< k in Z, 3k^2 + 2k
};

/// Exponent of index k within a family.
std::int64_t family_exponent(ShiftFamily family, std::int64_t k);

/// Cached sorted list of the exponents of a family up to a bound. Immutable
/// once built.
class FigurateTable {
public:
    FigurateTable(ShiftFamily family, std::int64_t bound);

    bool contains(std::int64_t x) const;
    const std::vector<std::int64_t>& values() const { return values_; }
    std::int64_t bound() const { return bound_; }

private:
    std::int64_t bound_;
    std::vector<std::int64_t> values_;
};

/// Visit (k, exponent) for every index of `family` whose exponent is <= bound,
/// in the order k = 0, 1, -1, 2, -2, ... (bilateral) or 0, 1, 2, ...
void for_each_index(ShiftFamily family, std::int64_t bound,
                    const std::function<void(std::int64_t k, std::int64_t exponent)>& visit);

using Weight = std::function<mpz_class(std::int64_t k)>;

/// sum_k w(k) q^{scale * exponent(k)}, truncated at `order`.
Series weighted_theta(ShiftFamily family, const Weight& weight, std::int64_t scale,
                      Exponent order, std::optional<mpz_class> modulus = std::nullopt);

namespace weights {
mpz_class unit(std::int64_t k);
mpz_class alternating(std::int64_t k);        ///< (-1)^k
mpz_class pentagonal_sign(std::int64_t k);    ///< (-1)^{k(k+1)/2}
mpz_class jacobi(std::int64_t k);             ///< (-1)^k (2k+1)
mpz_class ramanujan(std::int64_t k);          ///< (-1)^k (3k+1)
mpz_class one_minus_6k(std::int64_t k);
mpz_class one_minus_k(std::int64_t k);
} // namespace weights

/// (q^delta; q^delta)_inf to order N, built from its pentagonal support.
Series euler_product(std::int64_t delta, Exponent order,
                     std::optional<mpz_class> modulus = std::nullopt);

/// prod_{n>=0} (1 - q^{a + m n}) to order N.
Series qpochhammer(std::int64_t a, std::int64_t m, Exponent order,
                   std::optional<mpz_class> modulus = std::nullopt);

/// (q^a; q^m)_inf (q^{m-a}; q^m)_inf (q^m; q^m)_inf, 0 < a < m.
Series triple_product(std::int64_t a, std::int64_t m, Exponent order,
                      std::optional<mpz_class> modulus = std::nullopt);

/// q^shift * prod (q^delta; q^delta)_inf^exponent.
struct EtaQuotientSpec {
    std::vector<std::pair<std::int64_t, std::int64_t>> factors; ///< (delta, exponent), delta ascending
    std::int64_t q_shift = 0;

    EtaQuotientSpec() = default;
    EtaQuotientSpec(std::initializer_list<std::pair<std::int64_t, std::int64_t>> f,
                    std::int64_t shift = 0);

    std::int64_t exponent_of(std::int64_t delta) const;

    /// Text form `1:-3,2:2;qshift=-8`.
    std::string to_string() const;

    friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses `delta:exponent[,delta:exponent...][;qshift=s]` (a `,qshift=s` item
/// is accepted as well). Whitespace is ignored.
EtaQuotientSpec parse_eta_spec(std::string_view text);

/// Largest order eta_expand accepts once the shift is folded in.
inline constexpr Exponent kOrderCap = Exponent(1) << 40;

Series eta_expand(const EtaQuotientSpec& spec, Exponent order,
                  std::optional<mpz_class> modulus = std::nullopt);

enum class ThetaKind {
    gauss_squares,         ///< 1 + 2 sum_{n>=1} (-1)^n q^{n^2} = (q;q)/(-q;q)
    triangular,            ///< sum_{n>=0} q^{n(n+1)/2} = (q^2;q^2)^2/(q;q)
    jacobi_cubes,          ///< sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2} = (q;q)^3
    weighted_pentagonal,   ///< sum_{n in Z} (1-6n) q^{n(3n-1)/2} = (q;q)^5/(q^2;q^2)^2
    ramanujan_quadratic,   ///< sum_{n in Z} (-1)^n (3n+1) q^{3n^2+2n} = (q^2;q^2)^5/(q;q)^2
    pentagonal_6n_minus_1, ///< sum_{n in Z} (6n-1) q^{n(3n-1)/2} = -(q;q)^3/(-q;q)^2
};

std::string_view theta_name(ThetaKind kind);
ThetaKind theta_kind_from_name(std::string_view name);
const std::vector<ThetaKind>& all_theta_kinds();

Series theta(ThetaKind kind, Exponent order, std::optional<mpz_class> modulus = std::nullopt);

} // namespace qcrank
