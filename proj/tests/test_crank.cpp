#include "oracles.hpp"

#include <qcrank/crank.hpp>
#include <qcrank/verifier.hpp>

#include <doctest.h>

#include <set>

using namespace qcrank;

namespace {
Partition make(std::vector<int> parts)
{
    Partition p{parts, 0};
    for (int x : parts)
        p.n += x;
    return p;
}
} // namespace

TEST_CASE("crank of small partitions")
{
    CHECK(crank(make({4})) == 4);
    CHECK(crank(make({2, 1})) == 0);
    CHECK(crank(make({1, 1, 1})) == -3);
    CHECK(crank(make({})) == 0);
    CHECK(crank(make({1})) == -1);
    CHECK(crank(make({5, 3, 1})) == 1);
    CHECK(crank(make({3, 2, 1, 1})) == -1);
}

TEST_CASE("partition enumeration")
{
    std::vector<int> counts;
    for (int n : {0, 4, 9}) {
        int c = 0;
        for (const auto& p : partitions(n)) {
            CHECK(p.n == n);
            ++c;
        }
        counts.push_back(c);
    }
    CHECK(counts == std::vector<int>{1, 5, 30});

    std::vector<std::vector<int>> four;
    for (const auto& p : partitions(4))
        four.push_back(p.parts);
    CHECK(four == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    for (int n = 0; n <= 18; ++n) {
        std::vector<std::vector<int>> got;
        for (const auto& p : partitions(n))
            got.push_back(p.parts);
        CHECK(got == oracle::partitions_recursive(n));
    }
    CHECK_THROWS(partitions(-1));
}

TEST_CASE("crank against the definition")
{
    for (int n = 1; n <= 20; ++n)
        for (const auto& parts : oracle::partitions_recursive(n))
            CHECK(crank(make(parts)) == oracle::crank_by_definition(parts));
}

TEST_CASE("crank distribution is symmetric for n >= 2")
{
    for (int n = 2; n <= 22; ++n) {
        std::map<std::int64_t, int> hist;
        for (const auto& p : partitions(n))
            ++hist[crank(p)];
        for (const auto& [c, k] : hist)
            CHECK(hist[-c] == k);
    }
}

TEST_CASE("crank tallies")
{
    CrankTally t3 = crank_tally(3);
    CHECK(t3.c_even == 1);
    CHECK(t3.c_odd == 2);
    CHECK(t3.c_diff == -1);
    CrankTally t4 = crank_tally(4);
    CHECK(t4.c_even == 5);
    CHECK(t4.c_odd == 0);
    CHECK(t4.c_diff == 5);

    const std::vector<long> first = {1, -1, 2, -1, 5};
    for (int n = 0; n <= 4; ++n)
        CHECK(crank_tally(n).c_diff == first[static_cast<std::size_t>(n)]);

    Series c = c_series(30);
    oracle::Poly p = oracle::partition_counts(30);
    for (int n = 0; n <= 30; ++n) {
        CrankTally t = crank_tally(n);
        CHECK(t.c_diff == c.coeff(n));
        CHECK(t.c_even + t.c_odd == p[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("nu2")
{
    CHECK(nu2(12) == 2);
    CHECK(nu2(1) == 0);
    CHECK(nu2(-8) == 3);
    CHECK(nu2(std::int64_t(1) << 40) == 40);
    CHECK_THROWS(nu2(0));
}

TEST_CASE("a(n) oracles")
{
    const std::vector<long> want = {1, 3, 7, 16, 32, 61};
    for (AInterpretation which : all_interpretations()) {
        CAPTURE(interpretation_name(which));
        for (int n = 0; n <= 5; ++n)
            CHECK(a_oracle(n, which) == want[static_cast<std::size_t>(n)]);
        CHECK(a_oracle(3, which) == 16);
        CHECK(interpretation_from_name(interpretation_name(which)) == which);
    }
    CHECK_THROWS(interpretation_from_name("five_colors"));

    oracle::Poly conv = oracle::a_by_convolution(24);
    for (AInterpretation which : all_interpretations())
        for (int n = 0; n <= 24; ++n)
            CHECK(a_oracle(n, which) == conv[static_cast<std::size_t>(n)]);
}

TEST_CASE("colored objects")
{
    for (AInterpretation which : all_interpretations()) {
        CAPTURE(interpretation_name(which));
        auto objs = colored_objects(3, which);
        CHECK(objs.size() == 16);
        std::set<std::vector<ColoredPart>> distinct(objs.begin(), objs.end());
        CHECK(distinct.size() == objs.size());
        for (int n = 0; n <= 7; ++n)
            CHECK(mpz_class(colored_objects(n, which).size()) == a_oracle(n, which));
    }

    // every odd part carries one of three colors
    for (const auto& obj : colored_objects(5, AInterpretation::odd_parts_3colors))
        for (const auto& cp : obj)
            CHECK((cp.part % 2 == 1 ? cp.color >= 1 && cp.color <= 3 : cp.color == 0));
}
