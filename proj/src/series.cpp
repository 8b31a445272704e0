#include "qcrank/series.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace qcrank {

namespace {

// Moduli below this bound are stored as machine words.
const mpz_class kWordLimit = mpz_class(1) << 63;

Exponent floor_div(Exponent a, Exponent b)
{
    Exponent q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Exponent ceil_div(Exponent a, Exponent b) { return -floor_div(-a, b); }

struct IntRing {
    using value_type = mpz_class;

    value_type from(const mpz_class& x) const { return x; }
    mpz_class to_mpz(const value_type& x) const { return x; }
    bool is_zero(const value_type& x) const { return sgn(x) == 0; }
    void addmul(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void add(value_type& acc, const value_type& x) const { acc += x; }
    void sub(value_type& acc, const value_type& x) const { acc -= x; }
    void normalize(value_type&) const {}
    value_type neg(const value_type& x) const { return -x; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    std::optional<value_type> inverse(const value_type& x) const
    {
        if (x == 1 || x == -1)
            return x;
        return std::nullopt;
    }
};

// Residues mod a large modulus; accumulation is lazy and normalize() brings a
// value back to 0..m-1.
struct BigModRing {
    using value_type = mpz_class;
    mpz_class m;

    value_type from(const mpz_class& x) const
    {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        return r;
    }
    mpz_class to_mpz(const value_type& x) const { return x; }
    bool is_zero(const value_type& x) const { return sgn(x) == 0; }
    void addmul(value_type& acc, const value_type& a, const value_type& b) const
    {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    void add(value_type& acc, const value_type& x) const { acc += x; }
    void sub(value_type& acc, const value_type& x) const { acc -= x; }
    void normalize(value_type& x) const
    {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    value_type neg(const value_type& x) const { return from(-x); }
    value_type mul(const value_type& a, const value_type& b) const { return from(a * b); }
    std::optional<value_type> inverse(const value_type& x) const
    {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
            return std::nullopt;
        return r;
    }
};

struct WordRing {
    using value_type = std::uint64_t;
    std::uint64_t m;

    value_type from(const mpz_class& x) const
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
        return r.get_ui();
    }
    mpz_class to_mpz(const value_type& x) const { return mpz_class(static_cast<unsigned long>(x)); }
    bool is_zero(const value_type& x) const { return x == 0; }
    void addmul(value_type& acc, const value_type& a, const value_type& b) const
    {
        acc = static_cast<value_type>(
            (static_cast<unsigned __int128>(a) * b + acc) % m);
    }
    void add(value_type& acc, const value_type& x) const
    {
        acc = acc >= m - x ? acc - (m - x) : acc + x;
    }
    void sub(value_type& acc, const value_type& x) const
    {
        acc = acc >= x ? acc - x : acc + (m - x);
    }
    void normalize(value_type&) const {}
    value_type neg(const value_type& x) const { return x == 0 ? 0 : m - x; }
    value_type mul(const value_type& a, const value_type& b) const
    {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % m);
    }
    std::optional<value_type> inverse(const value_type& x) const
    {
        mpz_class r;
        mpz_class xm(static_cast<unsigned long>(x)), mm(static_cast<unsigned long>(m));
        if (mpz_invert(r.get_mpz_t(), xm.get_mpz_t(), mm.get_mpz_t()) == 0)
            return std::nullopt;
        return r.get_ui();
    }
};

template <class F>
decltype(auto) dispatch(const std::optional<mpz_class>& modulus, F&& f)
{
    if (!modulus)
        return f(IntRing{});
    if (*modulus < kWordLimit)
        return f(WordRing{modulus->get_ui()});
    return f(BigModRing{*modulus});
}

void require_same_ring(const Series& a, const Series& b, const char* op)
{
    if (a.modulus() != b.modulus())
        throw ModulusMismatch(std::string(op) + ": operands have different coefficient rings");
}

void require_valid_modulus(const std::optional<mpz_class>& modulus)
{
    if (modulus && *modulus < 2)
        throw SeriesError("modulus must be at least 2");
}

} // namespace

template <class Ring>
struct Kernel {
    using V = typename Ring::value_type;

    static std::vector<V>& data(Series& s)
    {
        if constexpr (std::is_same_v<V, std::uint64_t>)
            return s.word_;
        else
            return s.big_;
    }

    static const std::vector<V>& data(const Series& s)
    {
        if constexpr (std::is_same_v<V, std::uint64_t>)
            return s.word_;
        else
            return s.big_;
    }

    static Series make(Exponent valuation, Exponent order,
                       const std::optional<mpz_class>& modulus, std::vector<V> coeffs)
    {
        Series s;
        s.valuation_ = valuation;
        s.order_ = order;
        s.modulus_ = modulus;
        data(s) = std::move(coeffs);
        s.canonicalize();
        return s;
    }

    static V at(const Series& s, Exponent e)
    {
        const auto& d = data(s);
        if (e < s.valuation_ || e - s.valuation_ >= static_cast<Exponent>(d.size()))
            return V(0);
        return d[static_cast<std::size_t>(e - s.valuation_)];
    }

    static Series from_mpz(const Ring& ring, Exponent valuation, Exponent order,
                           const std::optional<mpz_class>& modulus,
                           const std::vector<mpz_class>& coeffs)
    {
        std::vector<V> out;
        out.reserve(coeffs.size());
        for (const auto& c : coeffs)
            out.push_back(ring.from(c));
        return make(valuation, order, modulus, std::move(out));
    }

    static Series add(const Ring& ring, const Series& a, const Series& b, bool subtract)
    {
        Exponent order = std::min(a.order_, b.order_);
        Exponent valuation = std::min(a.valuation_, b.valuation_);
        if (valuation > order)
            return Series::zero(order, a.modulus_);
        std::vector<V> out(static_cast<std::size_t>(order - valuation + 1), V(0));
        const auto& da = data(a);
        for (std::size_t i = 0; i < da.size(); ++i) {
            Exponent e = a.valuation_ + static_cast<Exponent>(i);
            if (e > order)
                break;
            out[static_cast<std::size_t>(e - valuation)] = da[i];
        }
        const auto& db = data(b);
        for (std::size_t i = 0; i < db.size(); ++i) {
            Exponent e = b.valuation_ + static_cast<Exponent>(i);
            if (e > order)
                break;
            auto& slot = out[static_cast<std::size_t>(e - valuation)];
            if (subtract)
                ring.sub(slot, db[i]);
            else
                ring.add(slot, db[i]);
        }
        for (auto& x : out)
            ring.normalize(x);
        return make(valuation, order, a.modulus_, std::move(out));
    }

    static Series mul(const Ring& ring, const Series& a, const Series& b)
    {
        Exponent valuation = a.valuation_ + b.valuation_;
        Exponent order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
        if (a.is_zero() || b.is_zero() || valuation > order)
            return Series::zero(order, a.modulus_);

        const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
        const auto& sparse = a_sparser ? data(a) : data(b);
        const auto& dense = a_sparser ? data(b) : data(a);
        const std::size_t len = static_cast<std::size_t>(order - valuation + 1);

        std::vector<V> out(len, V(0));
        for (std::size_t i = 0; i < sparse.size() && i < len; ++i) {
            if (ring.is_zero(sparse[i]))
                continue;
            const V& x = sparse[i];
            const std::size_t span = std::min(dense.size(), len - i);
            V* dst = out.data() + i;
            for (std::size_t j = 0; j < span; ++j) {
                if constexpr (std::is_same_v<V, std::uint64_t>) {
                    ring.addmul(dst[j], x, dense[j]);
                } else {
                    if (!ring.is_zero(dense[j]))
                        ring.addmul(dst[j], x, dense[j]);
                }
            }
        }
        for (auto& x : out)
            ring.normalize(x);
        return make(valuation, order, a.modulus_, std::move(out));
    }

    // x = a / b via x_n = (a_n - sum_{i>=1} b_i x_{n-i}) / b_0, sparse in b.
    static Series divide(const Ring& ring, const Series& a, const Series& b)
    {
        if (b.is_zero())
            throw NotInvertible("division by a series with no known nonzero coefficient");
        const auto& db = data(b);
        auto inv = ring.inverse(db.front());
        if (!inv)
            throw NotInvertible("leading coefficient " + ring.to_mpz(db.front()).get_str() +
                                " is not a unit");

        Exponent valuation = a.valuation_ - b.valuation_;
        Exponent order = std::min(a.order_ - b.valuation_,
                                  b.order_ - 2 * b.valuation_ + a.valuation_);
        if (valuation > order)
            return Series::zero(order, a.modulus_);

        const std::size_t len = static_cast<std::size_t>(order - valuation + 1);
        std::vector<std::pair<std::size_t, V>> tail;
        for (std::size_t i = 1; i < db.size() && i < len; ++i)
            if (!ring.is_zero(db[i]))
                tail.emplace_back(i, db[i]);

        const auto& da = data(a);
        std::vector<V> out(len, V(0));
        for (std::size_t n = 0; n < len; ++n) {
            V acc = n < da.size() ? da[n] : V(0);
            V neg_sum(0);
            for (const auto& [i, bi] : tail) {
                if (i > n)
                    break;
                ring.addmul(neg_sum, bi, out[n - i]);
            }
            ring.normalize(neg_sum);
            ring.sub(acc, neg_sum);
            ring.normalize(acc);
            out[n] = ring.mul(acc, *inv);
        }
        return make(valuation, order, a.modulus_, std::move(out));
    }

    static Series scale(const Ring& ring, const Series& a, const mpz_class& c)
    {
        V k = ring.from(c);
        std::vector<V> out = data(a);
        for (auto& x : out)
            x = ring.mul(x, k);
        return make(a.valuation_, a.order_, a.modulus_, std::move(out));
    }

    static Series negate(const Ring& ring, const Series& a)
    {
        std::vector<V> out = data(a);
        for (auto& x : out)
            x = ring.neg(x);
        return make(a.valuation_, a.order_, a.modulus_, std::move(out));
    }

    static Series subst(const Series& a, std::int64_t k)
    {
        Exponent valuation = k * a.valuation_;
        Exponent order = k * a.order_;
        if (a.is_zero())
            return Series::zero(order, a.modulus_);
        const auto& d = data(a);
        std::vector<V> out(static_cast<std::size_t>(order - valuation + 1), V(0));
        for (std::size_t i = 0; i < d.size(); ++i)
            out[i * static_cast<std::size_t>(k)] = d[i];
        return make(valuation, order, a.modulus_, std::move(out));
    }

    static Series section(const Series& a, std::int64_t m, std::int64_t r, bool reindex)
    {
        if (!reindex) {
            std::vector<V> out = data(a);
            for (std::size_t i = 0; i < out.size(); ++i) {
                Exponent e = a.valuation_ + static_cast<Exponent>(i);
                if (((e - r) % m + m) % m != 0)
                    out[i] = V(0);
            }
            return make(a.valuation_, a.order_, a.modulus_, std::move(out));
        }
        Exponent lo = ceil_div(a.valuation_ - r, m);
        Exponent hi = floor_div(a.order_ - r, m);
        if (lo > hi)
            return Series::zero(hi, a.modulus_);
        std::vector<V> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (Exponent n = lo; n <= hi; ++n)
            out.push_back(at(a, m * n + r));
        return make(lo, hi, a.modulus_, std::move(out));
    }

    static std::size_t nonzeros(const Ring& ring, const Series& a)
    {
        const auto& d = data(a);
        return static_cast<std::size_t>(
            std::count_if(d.begin(), d.end(), [&](const V& x) { return !ring.is_zero(x); }));
    }
};

// ---------------------------------------------------------------------------

Series::Series() = default;

bool Series::word_backed() const { return modulus_ && *modulus_ < kWordLimit; }

void Series::canonicalize()
{
    auto trim = [this](auto& v, auto is_zero) {
        std::size_t lead = 0;
        while (lead < v.size() && is_zero(v[lead]))
            ++lead;
        if (lead == v.size()) {
            v.clear();
            valuation_ = order_ + 1;
            return;
        }
        if (lead > 0) {
            v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lead));
            valuation_ += static_cast<Exponent>(lead);
        }
    };
    if (word_backed())
        trim(word_, [](std::uint64_t x) { return x == 0; });
    else
        trim(big_, [](const mpz_class& x) { return sgn(x) == 0; });
}

std::size_t Series::size() const { return word_backed() ? word_.size() : big_.size(); }

std::size_t Series::nonzero_count() const
{
    return dispatch(modulus_, [&](auto ring) {
        return Kernel<decltype(ring)>::nonzeros(ring, *this);
    });
}

Series Series::zero(Exponent order, std::optional<mpz_class> modulus)
{
    require_valid_modulus(modulus);
    Series s;
    s.order_ = order;
    s.valuation_ = order + 1;
    s.modulus_ = std::move(modulus);
    return s;
}

Series Series::one(Exponent order, std::optional<mpz_class> modulus)
{
    return monomial(1, 0, order, std::move(modulus));
}

Series Series::monomial(const mpz_class& c, Exponent e, Exponent order,
                        std::optional<mpz_class> modulus)
{
    if (e > order)
        return zero(order, std::move(modulus));
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(order - e + 1), mpz_class(0));
    coeffs[0] = c;
    return from_coefficients(e, coeffs, order, std::move(modulus));
}

Series Series::from_coefficients(Exponent valuation, const std::vector<mpz_class>& coeffs,
                                 Exponent order, std::optional<mpz_class> modulus)
{
    require_valid_modulus(modulus);
    if (valuation + static_cast<Exponent>(coeffs.size()) - 1 > order)
        throw SeriesError("coefficients extend beyond the truncation order");
    std::vector<mpz_class> padded = coeffs;
    if (valuation <= order)
        padded.resize(static_cast<std::size_t>(order - valuation + 1), mpz_class(0));
    return dispatch(modulus, [&](auto ring) {
        return Kernel<decltype(ring)>::from_mpz(ring, valuation, order, modulus, padded);
    });
}

Series Series::from_terms(const std::vector<std::pair<Exponent, mpz_class>>& terms,
                          Exponent order, std::optional<mpz_class> modulus)
{
    Exponent lo = order + 1;
    for (const auto& [e, c] : terms)
        if (e <= order)
            lo = std::min(lo, e);
    if (lo > order)
        return zero(order, std::move(modulus));
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(order - lo + 1), mpz_class(0));
    for (const auto& [e, c] : terms)
        if (e <= order)
            coeffs[static_cast<std::size_t>(e - lo)] += c;
    return from_coefficients(lo, coeffs, order, std::move(modulus));
}

mpz_class Series::coeff(Exponent e) const
{
    if (e > order_)
        throw BeyondTruncation("coefficient of q^" + std::to_string(e) +
                               " is beyond the truncation order " + std::to_string(order_));
    if (e < valuation_)
        return 0;
    return dispatch(modulus_, [&](auto ring) {
        using K = Kernel<decltype(ring)>;
        return ring.to_mpz(K::at(*this, e));
    });
}

std::vector<mpz_class> Series::coefficients(Exponent from, Exponent to) const
{
    if (to > order_)
        throw BeyondTruncation("range ends at q^" + std::to_string(to) +
                               ", beyond the truncation order " + std::to_string(order_));
    std::vector<mpz_class> out;
    if (to < from)
        return out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    dispatch(modulus_, [&](auto ring) {
        using K = Kernel<decltype(ring)>;
        for (Exponent e = from; e <= to; ++e)
            out.push_back(ring.to_mpz(K::at(*this, e)));
        return 0;
    });
    return out;
}

std::vector<std::pair<Exponent, mpz_class>> Series::terms() const
{
    std::vector<std::pair<Exponent, mpz_class>> out;
    dispatch(modulus_, [&](auto ring) {
        using K = Kernel<decltype(ring)>;
        const auto& d = K::data(*this);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (!ring.is_zero(d[i]))
                out.emplace_back(valuation_ + static_cast<Exponent>(i), ring.to_mpz(d[i]));
        return 0;
    });
    return out;
}

Series Series::truncated(Exponent order) const
{
    if (order > order_)
        throw BeyondTruncation("cannot extend a series past its truncation order");
    Series s = *this;
    s.order_ = order;
    if (order < valuation_) {
        s.big_.clear();
        s.word_.clear();
        s.valuation_ = order + 1;
        return s;
    }
    std::size_t keep = static_cast<std::size_t>(order - valuation_ + 1);
    if (s.big_.size() > keep)
        s.big_.resize(keep);
    if (s.word_.size() > keep)
        s.word_.resize(keep);
    return s;
}

Series Series::shifted(Exponent s) const
{
    Series out = *this;
    out.valuation_ += s;
    out.order_ += s;
    return out;
}

Series Series::negated() const
{
    return dispatch(modulus_, [&](auto ring) {
        return Kernel<decltype(ring)>::negate(ring, *this);
    });
}

Series Series::scaled(const mpz_class& c) const
{
    return dispatch(modulus_, [&](auto ring) {
        return Kernel<decltype(ring)>::scale(ring, *this, c);
    });
}

bool operator==(const Series& a, const Series& b)
{
    return a.valuation_ == b.valuation_ && a.order_ == b.order_ && a.modulus_ == b.modulus_ &&
           a.big_ == b.big_ && a.word_ == b.word_;
}

std::string Series::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        mpz_class mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "q";
        if (e != 1)
            os << "^" << e;
    }
    if (first)
        os << "0";
    os << " + O(q^" << order_ + 1 << ")";
    if (modulus_)
        os << " (mod " << *modulus_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

Series add(const Series& a, const Series& b)
{
    require_same_ring(a, b, "add");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::add(ring, a, b, false);
    });
}

Series sub(const Series& a, const Series& b)
{
    require_same_ring(a, b, "sub");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::add(ring, a, b, true);
    });
}

Series mul(const Series& a, const Series& b)
{
    require_same_ring(a, b, "mul");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::mul(ring, a, b);
    });
}

Series divide(const Series& a, const Series& b)
{
    require_same_ring(a, b, "divide");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::divide(ring, a, b);
    });
}

Series invert(const Series& a)
{
    if (a.is_zero())
        throw NotInvertible("cannot invert a series with no known nonzero coefficient");
    // 1 / (q^v c) needs the numerator to order N - v for the quotient to
    // reach its full order N - 2v.
    return divide(Series::one(a.order() - a.valuation(), a.modulus()), a);
}

Series pow(const Series& a, std::int64_t k)
{
    if (k < 0)
        return pow(invert(a), -k);
    if (k == 0)
        return Series::one(a.order() - a.valuation(), a.modulus());
    Series base = a;
    std::optional<Series> acc;
    while (k > 0) {
        if (k & 1)
            acc = acc ? mul(*acc, base) : base;
        k >>= 1;
        if (k > 0)
            base = mul(base, base);
    }
    return *acc;
}

Series subst_qk(const Series& a, std::int64_t k)
{
    if (k < 1)
        throw SeriesError("subst_qk: k must be positive");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::subst(a, k);
    });
}

Series dissect(const Series& a, std::int64_t m, std::int64_t r)
{
    if (m < 1 || r < 0 || r >= m)
        throw SeriesError("dissect: need m >= 1 and 0 <= r < m");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::section(a, m, r, true);
    });
}

Series residue_component(const Series& a, std::int64_t m, std::int64_t r)
{
    if (m < 1 || r < 0 || r >= m)
        throw SeriesError("residue_component: need m >= 1 and 0 <= r < m");
    return dispatch(a.modulus(), [&](auto ring) {
        return Kernel<decltype(ring)>::section(a, m, r, false);
    });
}

Series reduce_mod(const Series& a, const mpz_class& m)
{
    if (m < 2)
        throw SeriesError("reduce_mod: modulus must be at least 2");
    if (a.modulus() && !mpz_divisible_p(a.modulus()->get_mpz_t(), m.get_mpz_t()))
        throw ModulusMismatch("reduce_mod: " + m.get_str() + " does not divide the existing modulus " +
                              a.modulus()->get_str());
    if (a.is_zero())
        return Series::zero(a.order(), m);
    return Series::from_coefficients(a.valuation(), a.coefficients(a.valuation(), a.order()),
                                     a.order(), m);
}

std::optional<Mismatch> first_difference(const Series& a, const Series& b, Exponent upto)
{
    require_same_ring(a, b, "first_difference");
    if (upto > a.order() || upto > b.order())
        throw BeyondTruncation("comparison order " + std::to_string(upto) +
                               " exceeds a truncation order (" + std::to_string(a.order()) +
                               ", " + std::to_string(b.order()) + ")");
    Exponent from = std::min(a.valuation(), b.valuation());
    if (from > upto)
        return std::nullopt;
    auto ca = a.coefficients(from, upto);
    auto cb = b.coefficients(from, upto);
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i])
            return Mismatch{from + static_cast<Exponent>(i), ca[i], cb[i]};
    return std::nullopt;
}

} // namespace qcrank
