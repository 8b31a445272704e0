#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iterator>
#include <string_view>
#include <vector>

namespace qcrank {

/// Non-increasing positive parts. The empty partition is the partition of 0.
struct Partition {
    std::vector<int> parts;
    int n = 0;
};

/*
 * Partitions of n in reverse-lexicographic order, [n] first and [1,...,1]
 * last. Each step rewrites the current partition in place, so a full pass
 * never holds more than one partition.
 */
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class PartitionRange;
        explicit iterator(int n);

        Partition current_;
        bool done_ = true;
    };

    explicit PartitionRange(int n);
    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

inline PartitionRange partitions(int n) { return PartitionRange(n); }

/// Andrews-Garvan crank: the largest part when there are no ones, otherwise
/// (#parts larger than the number of ones) - (number of ones). The empty
/// partition gets 0.
std::int64_t crank(const Partition& p);

struct CrankTally {
    int n = 0;
    mpz_class c_even;
    mpz_class c_odd;
    mpz_class c_diff;
};

CrankTally crank_tally(int n);

/// 2-adic valuation; throws for 0.
int nu2(std::int64_t n);

enum class AInterpretation {
    odd_parts_3colors,      ///< partitions whose odd parts take one of 3 colors
    distinct_nu2_colors,    ///< part k in 3 + nu2(k) colors, no colored part repeated
    first_two_occurrences,  ///< first two copies of each part may carry distinct colors 1, 2
};

std::string_view interpretation_name(AInterpretation which);
AInterpretation interpretation_from_name(std::string_view name);
const std::vector<AInterpretation>& all_interpretations();

/// a(n) counted as weighted enumeration over partitions of n.
mpz_class a_oracle(int n, AInterpretation which);

/// A colored part: value and color, color 0 meaning "uncolored".
struct ColoredPart {
    int part;
    int color;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Literal generation of the colored objects counted by a_oracle, as sorted
/// lists of colored parts. Exponential; meant for n <= 8.
std::vector<std::vector<ColoredPart>> colored_objects(int n, AInterpretation which);

} // namespace qcrank
