#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

Poly one(int N)
{
    Poly p(N + 1, 0);
    p[0] = 1;
    return p;
}

Poly mul(const Poly& a, const Poly& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    Poly r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Poly inverse(const Poly& a)
{
    if (abs(a[0]) != 1)
        throw std::invalid_argument("oracle::inverse needs a unit constant term");
    Poly b(a.size(), 0);
    b[0] = a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        mpz_class s = 0;
        for (std::size_t i = 1; i <= n; ++i)
            s += a[i] * b[n - i];
        b[n] = -s * a[0];
    }
    return b;
}

Poly euler_dense(int delta, int N)
{
    Poly p = one(N);
    for (int n = 1; delta * n <= N; ++n) {
        int e = delta * n;
        for (int i = N; i >= e; --i)
            p[i] -= p[i - e];
    }
    return p;
}

Poly eta_dense(const std::map<int, int>& exponents, int N)
{
    Poly p = one(N);
    for (const auto& [delta, r] : exponents) {
        Poly f = euler_dense(delta, N);
        if (r < 0)
            f = inverse(f);
        for (int i = 0; i < std::abs(r); ++i)
            p = mul(p, f);
    }
    return p;
}

Poly partition_counts(int N)
{
    Poly p = one(N);
    for (int part = 1; part <= N; ++part)
        for (int i = part; i <= N; ++i)
            p[i] += p[i - part];
    return p;
}

Poly distinct_partition_counts(int N)
{
    Poly p = one(N);
    for (int part = 1; part <= N; ++part)
        for (int i = N; i >= part; --i)
            p[i] += p[i - part];
    return p;
}

namespace {
void extend(int remaining, int largest, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int x = std::min(remaining, largest); x >= 1; --x) {
        cur.push_back(x);
        extend(remaining - x, x, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<std::vector<int>> partitions_recursive(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend(n, n, cur, out);
    return out;
}

std::int64_t crank_by_definition(const std::vector<int>& parts)
{
    if (parts.empty())
        return 0;
    std::int64_t ones = 0, largest = 0;
    for (int x : parts) {
        ones += x == 1;
        largest = std::max<std::int64_t>(largest, x);
    }
    if (ones == 0)
        return largest;
    std::int64_t mu = 0;
    for (int x : parts)
        mu += x > ones;
    return mu - ones;
}

Poly shifted_sum(const Poly& base, const std::vector<std::pair<mpz_class, std::int64_t>>& terms,
                 std::int64_t scale)
{
    Poly out(base.size(), 0);
    for (std::size_t n = 0; n < base.size(); ++n)
        for (const auto& [w, e] : terms) {
            std::int64_t idx = static_cast<std::int64_t>(n) - scale * e;
            if (idx >= 0)
                out[n] += w * base[static_cast<std::size_t>(idx)];
        }
    return out;
}

std::vector<std::pair<mpz_class, std::int64_t>>
bilateral_terms(std::int64_t bound, const std::function<std::int64_t(std::int64_t)>& exponent,
                const std::function<mpz_class(std::int64_t)>& weight)
{
    // every k in [-K, K] for K large enough that both tails are past the bound
    std::vector<std::pair<mpz_class, std::int64_t>> out;
    std::int64_t K = 0;
    while (exponent(K) <= bound || exponent(-K) <= bound)
        ++K;
    for (std::int64_t k = -K; k <= K; ++k)
        if (exponent(k) <= bound)
            out.emplace_back(weight(k), exponent(k));
    return out;
}

std::vector<std::pair<mpz_class, std::int64_t>>
unilateral_terms(std::int64_t bound, const std::function<std::int64_t(std::int64_t)>& exponent,
                 const std::function<mpz_class(std::int64_t)>& weight)
{
    std::vector<std::pair<mpz_class, std::int64_t>> out;
    for (std::int64_t k = 0; exponent(k) <= bound; ++k)
        out.emplace_back(weight(k), exponent(k));
    return out;
}

Poly a_by_convolution(int N)
{
    Poly d = distinct_partition_counts(N);
    return mul(mul(d, d), partition_counts(N));
}

} // namespace oracle
