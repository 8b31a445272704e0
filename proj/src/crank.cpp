#include "qcrank/crank.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace qcrank {

PartitionRange::PartitionRange(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("partitions: n must be non-negative");
}

PartitionRange::iterator::iterator(int n) : done_(false)
{
    current_.n = n;
    if (n > 0)
        current_.parts.push_back(n);
}

// Successor in reverse-lexicographic order: strip trailing ones, decrement the
// last part x > 1, then refill with copies of x-1 and the remainder.
PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    auto& parts = current_.parts;
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++ones;
    }
    if (parts.empty()) {
        done_ = true;
        return *this;
    }
    int x = parts.back() - 1;
    parts.pop_back();
    int rest = ones + 1;
    parts.push_back(x);
    while (rest > x) {
        parts.push_back(x);
        rest -= x;
    }
    if (rest > 0)
        parts.push_back(rest);
    return *this;
}

std::int64_t crank(const Partition& p)
{
    if (p.parts.empty())
        return 0;
    const auto ones = std::count(p.parts.begin(), p.parts.end(), 1);
    if (ones == 0)
        return p.parts.front();
    const auto larger =
        std::count_if(p.parts.begin(), p.parts.end(), [&](int x) { return x > ones; });
    return static_cast<std::int64_t>(larger) - static_cast<std::int64_t>(ones);
}

CrankTally crank_tally(int n)
{
    CrankTally t;
    t.n = n;
    unsigned long even = 0, odd = 0;
    for (const auto& p : partitions(n)) {
        if (crank(p) % 2 == 0)
            ++even;
        else
            ++odd;
    }
    t.c_even = even;
    t.c_odd = odd;
    t.c_diff = t.c_even - t.c_odd;
    return t;
}

int nu2(std::int64_t n)
{
    if (n == 0)
        throw std::invalid_argument("nu2: 0 has no 2-adic valuation");
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

namespace {

struct InterpretationInfo {
    AInterpretation which;
    std::string_view name;
};

const InterpretationInfo kInterpretations[] = {
    {AInterpretation::odd_parts_3colors, "odd_parts_3colors"},
    {AInterpretation::distinct_nu2_colors, "distinct_nu2_colors"},
    {AInterpretation::first_two_occurrences, "first_two_occurrences"},
};

// Multiplicities of a partition as (part, count), parts descending.
std::vector<std::pair<int, int>> multiplicities(const Partition& p)
{
    std::vector<std::pair<int, int>> out;
    for (int x : p.parts) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

mpz_class binomial(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::string_view interpretation_name(AInterpretation which)
{
    for (const auto& i : kInterpretations)
        if (i.which == which)
            return i.name;
    throw std::invalid_argument("unknown interpretation");
}

AInterpretation interpretation_from_name(std::string_view name)
{
    for (const auto& i : kInterpretations)
        if (i.name == name)
            return i.which;
    throw std::invalid_argument("unknown interpretation '" + std::string(name) + "'");
}

const std::vector<AInterpretation>& all_interpretations()
{
    static const std::vector<AInterpretation> v = {AInterpretation::odd_parts_3colors,
                                                   AInterpretation::distinct_nu2_colors,
                                                   AInterpretation::first_two_occurrences};
    return v;
}

mpz_class a_oracle(int n, AInterpretation which)
{
    if (n < 0)
        throw std::invalid_argument("a_oracle: n must be non-negative");
    mpz_class total = 0;
    for (const auto& p : partitions(n)) {
        mpz_class ways = 1;
        for (const auto& [part, count] : multiplicities(p)) {
            switch (which) {
            case AInterpretation::odd_parts_3colors:
                // multisets of size `count` over 3 colors
                if (part % 2 == 1)
                    ways *= binomial(count + 2, 2);
                break;
            case AInterpretation::distinct_nu2_colors:
                // `count` distinct colors out of 3 + nu2(part)
                ways *= binomial(3 + nu2(part), count);
                break;
            case AInterpretation::first_two_occurrences:
                // none, color 1, color 2, or both when there is room for both
                ways *= count == 1 ? 3 : 4;
                break;
            }
            if (ways == 0)
                break;
        }
        total += ways;
    }
    return total;
}

std::vector<std::vector<ColoredPart>> colored_objects(int n, AInterpretation which)
{
    if (n < 0)
        throw std::invalid_argument("colored_objects: n must be non-negative");

    // Every admissible (part, color) token, then all multisets of tokens with
    // the right sum, filtered by the interpretation's rule.
    std::vector<ColoredPart> tokens;
    for (int part = 1; part <= n; ++part) {
        switch (which) {
        case AInterpretation::odd_parts_3colors:
            if (part % 2 == 1)
                for (int c = 1; c <= 3; ++c)
                    tokens.push_back({part, c});
            else
                tokens.push_back({part, 0});
            break;
        case AInterpretation::distinct_nu2_colors:
            for (int c = 1; c <= 3 + nu2(part); ++c)
                tokens.push_back({part, c});
            break;
        case AInterpretation::first_two_occurrences:
            for (int c = 0; c <= 2; ++c)
                tokens.push_back({part, c});
            break;
        }
    }

    auto admissible = [&](const std::vector<ColoredPart>& obj) {
        if (which == AInterpretation::distinct_nu2_colors) {
            std::set<ColoredPart> seen(obj.begin(), obj.end());
            if (seen.size() != obj.size())
                return false;
        }
        if (which == AInterpretation::first_two_occurrences) {
            // each color used at most once per part value
            std::set<std::pair<int, int>> seen;
            for (const auto& t : obj)
                if (t.color != 0 && !seen.insert({t.part, t.color}).second)
                    return false;
        }
        return true;
    };

    std::vector<std::vector<ColoredPart>> out;
    std::vector<ColoredPart> current;
    // tokens are taken with non-increasing index so each multiset appears once
    std::function<void(std::size_t, int)> extend = [&](std::size_t max_index, int remaining) {
        if (remaining == 0) {
            if (admissible(current)) {
                auto obj = current;
                std::sort(obj.begin(), obj.end());
                out.push_back(std::move(obj));
            }
            return;
        }
        for (std::size_t i = max_index + 1; i-- > 0;) {
            if (tokens[i].part > remaining)
                continue;
            current.push_back(tokens[i]);
            extend(i, remaining - tokens[i].part);
            current.pop_back();
        }
    };
    if (n == 0)
        out.emplace_back();
    else
        extend(tokens.size() - 1, n);
    return out;
}

} // namespace qcrank
