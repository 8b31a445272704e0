#include "qcrank/qproducts.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace qcrank {

std::int64_t pentagonal(std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("pentagonal: index must be non-negative");
    // ceil(k/2) * ceil((3k+1)/2) / 2
    return ((k + 1) / 2) * ((3 * k + 2) / 2) / 2;
}

std::int64_t triangular(std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("triangular: index must be non-negative");
    return k * (k + 1) / 2;
}

std::int64_t family_exponent(ShiftFamily family, std::int64_t k)
{
    switch (family) {
    case ShiftFamily::pentagonal:
        return k * (3 * k - 1) / 2;
    case ShiftFamily::pentagonal_indexed:
        return pentagonal(k);
    case ShiftFamily::triangular:
        return triangular(k);
    case ShiftFamily::squares:
        return k * k;
    case ShiftFamily::ramanujan_quadratic:
        return 3 * k * k + 2 * k;
    }
    throw std::invalid_argument("unknown shift family");
}

namespace {

bool bilateral(ShiftFamily family)
{
    return family == ShiftFamily::pentagonal || family == ShiftFamily::squares ||
           family == ShiftFamily::ramanujan_quadratic;
}

} // namespace

void for_each_index(ShiftFamily family, std::int64_t bound,
                    const std::function<void(std::int64_t, std::int64_t)>& visit)
{
    if (bound < 0)
        return;
    if (!bilateral(family)) {
        for (std::int64_t k = 0;; ++k) {
            std::int64_t e = family_exponent(family, k);
            if (e > bound)
                return;
            visit(k, e);
        }
    }
    visit(0, family_exponent(family, 0));
    // All bilateral families here are convex quadratics with minimum at 0 for
    // |k| >= 1, so once both k and -k are past the bound nothing returns.
    for (std::int64_t k = 1;; ++k) {
        std::int64_t ep = family_exponent(family, k);
        std::int64_t en = family_exponent(family, -k);
        if (ep > bound && en > bound)
            return;
        if (ep <= bound)
            visit(k, ep);
        if (en <= bound)
            visit(-k, en);
    }
}

FigurateTable::FigurateTable(ShiftFamily family, std::int64_t bound) : bound_(bound)
{
    for_each_index(family, bound, [&](std::int64_t, std::int64_t e) { values_.push_back(e); });
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool FigurateTable::contains(std::int64_t x) const
{
    if (x > bound_)
        throw std::out_of_range("FigurateTable: " + std::to_string(x) + " exceeds table bound " +
                                std::to_string(bound_));
    return std::binary_search(values_.begin(), values_.end(), x);
}

Series weighted_theta(ShiftFamily family, const Weight& weight, std::int64_t scale,
                      Exponent order, std::optional<mpz_class> modulus)
{
    if (scale < 1)
        throw std::invalid_argument("weighted_theta: scale must be positive");
    std::vector<std::pair<Exponent, mpz_class>> terms;
    if (order >= 0)
        for_each_index(family, order / scale, [&](std::int64_t k, std::int64_t e) {
            terms.emplace_back(scale * e, weight(k));
        });
    return Series::from_terms(terms, order, std::move(modulus));
}

namespace weights {

mpz_class unit(std::int64_t) { return 1; }
mpz_class alternating(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }
mpz_class pentagonal_sign(std::int64_t k) { return ((k * (k + 1) / 2) % 2 == 0) ? 1 : -1; }
mpz_class jacobi(std::int64_t k) { return alternating(k) * (2 * k + 1); }
mpz_class ramanujan(std::int64_t k) { return alternating(k) * (3 * k + 1); }
mpz_class one_minus_6k(std::int64_t k) { return mpz_class(1 - 6 * k); }
mpz_class one_minus_k(std::int64_t k) { return mpz_class(1 - k); }

} // namespace weights

Series euler_product(std::int64_t delta, Exponent order, std::optional<mpz_class> modulus)
{
    if (delta < 1)
        throw std::invalid_argument("euler_product: delta must be positive");
    return weighted_theta(ShiftFamily::pentagonal_indexed, weights::pentagonal_sign, delta, order,
                          std::move(modulus));
}

Series qpochhammer(std::int64_t a, std::int64_t m, Exponent order,
                   std::optional<mpz_class> modulus)
{
    if (a < 1 || m < 1)
        throw std::invalid_argument("qpochhammer: need a >= 1 and m >= 1");
    if (order < 0)
        return Series::zero(order, std::move(modulus));
    std::vector<mpz_class> c(static_cast<std::size_t>(order + 1), mpz_class(0));
    c[0] = 1;
    std::int64_t top = 0; // highest possibly-nonzero exponent so far
    for (std::int64_t e = a; e <= order; e += m) {
        top = std::min<std::int64_t>(order, top + e);
        for (std::int64_t i = top; i >= e; --i)
            c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - e)];
    }
    return Series::from_coefficients(0, c, order, std::move(modulus));
}

Series triple_product(std::int64_t a, std::int64_t m, Exponent order,
                      std::optional<mpz_class> modulus)
{
    if (m < 2 || a <= 0 || a >= m)
        throw std::invalid_argument("triple_product: need 0 < a < m");
    return mul(mul(qpochhammer(a, m, order, modulus), qpochhammer(m - a, m, order, modulus)),
               euler_product(m, order, modulus));
}

// ---------------------------------------------------------------------------

EtaQuotientSpec::EtaQuotientSpec(std::initializer_list<std::pair<std::int64_t, std::int64_t>> f,
                                 std::int64_t shift)
    : factors(f), q_shift(shift)
{
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].first < 1)
            throw std::invalid_argument("EtaQuotientSpec: delta must be positive");
        if (i > 0 && factors[i].first == factors[i - 1].first)
            throw std::invalid_argument("EtaQuotientSpec: repeated delta " +
                                        std::to_string(factors[i].first));
    }
}

std::int64_t EtaQuotientSpec::exponent_of(std::int64_t delta) const
{
    for (const auto& [d, r] : factors)
        if (d == delta)
            return r;
    return 0;
}

std::string EtaQuotientSpec::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i)
        os << (i ? "," : "") << factors[i].first << ":" << factors[i].second;
    if (q_shift != 0)
        os << ";qshift=" << q_shift;
    return os.str();
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
{}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    EtaQuotientSpec parse()
    {
        EtaQuotientSpec spec;
        std::map<std::int64_t, std::int64_t> seen;
        bool have_shift = false;
        skip_ws();
        if (pos_ == text_.size())
            throw ParseError("empty eta-quotient spec", pos_);
        for (;;) {
            skip_ws();
            if (peek_word("qshift")) {
                std::size_t at = pos_;
                pos_ += 6;
                skip_ws();
                expect('=');
                if (have_shift)
                    throw ParseError("qshift given twice", at);
                spec.q_shift = integer();
                have_shift = true;
            } else {
                std::size_t at = pos_;
                std::int64_t delta = integer();
                if (delta < 1)
                    throw ParseError("delta must be a positive integer", at);
                skip_ws();
                expect(':');
                std::int64_t exponent = integer();
                if (seen.count(delta))
                    throw ParseError("delta " + std::to_string(delta) + " repeated", at);
                seen[delta] = exponent;
            }
            skip_ws();
            if (pos_ == text_.size())
                break;
            if (text_[pos_] == ',' || text_[pos_] == ';') {
                ++pos_;
                continue;
            }
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        if (seen.empty() && !have_shift)
            throw ParseError("no factors", 0);
        for (const auto& [d, r] : seen)
            spec.factors.emplace_back(d, r);
        return spec;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::int64_t integer()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string_view digits = text_.substr(start, pos_ - start);
        if (!digits.empty() && digits.front() == '+')
            digits.remove_prefix(1);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("expected an integer", start);
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

EtaQuotientSpec parse_eta_spec(std::string_view text) { return SpecParser(text).parse(); }

Series eta_expand(const EtaQuotientSpec& spec, Exponent order, std::optional<mpz_class> modulus)
{
    if (order > kOrderCap || order < -kOrderCap || spec.q_shift > kOrderCap ||
        spec.q_shift < -kOrderCap)
        throw SeriesError("eta_expand: order bookkeeping exceeds the configured cap");
    const Exponent inner = order - spec.q_shift;
    if (inner > kOrderCap)
        throw SeriesError("eta_expand: order bookkeeping exceeds the configured cap");
    if (inner < 0)
        return Series::zero(order, std::move(modulus));

    Series acc = Series::one(inner, modulus);
    for (const auto& [delta, exponent] : spec.factors) {
        if (exponent == 0)
            continue;
        Series f = euler_product(delta, inner, modulus);
        for (std::int64_t i = 0; i < (exponent > 0 ? exponent : -exponent); ++i)
            acc = exponent > 0 ? mul(acc, f) : divide(acc, f);
    }
    return acc.shifted(spec.q_shift);
}

// ---------------------------------------------------------------------------

namespace {

struct ThetaInfo {
    ThetaKind kind;
    std::string_view name;
    ShiftFamily family;
    mpz_class (*weight)(std::int64_t);
};

mpz_class six_k_minus_1(std::int64_t k) { return mpz_class(6 * k - 1); }

const ThetaInfo kThetas[] = {
    {ThetaKind::gauss_squares, "gauss_squares", ShiftFamily::squares, weights::alternating},
    {ThetaKind::triangular, "triangular", ShiftFamily::triangular, weights::unit},
    {ThetaKind::jacobi_cubes, "jacobi_cubes", ShiftFamily::triangular, weights::jacobi},
    {ThetaKind::weighted_pentagonal, "weighted_pentagonal", ShiftFamily::pentagonal,
     weights::one_minus_6k},
    {ThetaKind::ramanujan_quadratic, "ramanujan_quadratic", ShiftFamily::ramanujan_quadratic,
     weights::ramanujan},
    {ThetaKind::pentagonal_6n_minus_1, "pentagonal_6n_minus_1", ShiftFamily::pentagonal,
     six_k_minus_1},
};

const ThetaInfo& info(ThetaKind kind)
{
    for (const auto& t : kThetas)
        if (t.kind == kind)
            return t;
    throw std::invalid_argument("unknown theta kind");
}

} // namespace

std::string_view theta_name(ThetaKind kind) { return info(kind).name; }

ThetaKind theta_kind_from_name(std::string_view name)
{
    for (const auto& t : kThetas)
        if (t.name == name)
            return t.kind;
    throw std::invalid_argument("unknown theta kind '" + std::string(name) + "'");
}

const std::vector<ThetaKind>& all_theta_kinds()
{
    static const std::vector<ThetaKind> kinds = [] {
        std::vector<ThetaKind> v;
        for (const auto& t : kThetas)
            v.push_back(t.kind);
        return v;
    }();
    return kinds;
}

Series theta(ThetaKind kind, Exponent order, std::optional<mpz_class> modulus)
{
    const auto& t = info(kind);
    return weighted_theta(t.family, t.weight, 1, order, std::move(modulus));
}

} // namespace qcrank
