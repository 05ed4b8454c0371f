#pragma once
// catalan.hpp - classical and weighted Catalan numbers in exact arithmetic.
//
// The weighted Catalan number of order n for a weight sequence b is the sum
// of wt(P) over all Dyck paths P of length 2n, where wt(P) multiplies b(h)
// over the starting heights h of the up steps. Three independent routes
// compute it: a height-indexed lattice DP, the series expansion of the
// continued fraction 1/(1 - b0 x/(1 - b1 x/(1 - ...))), and brute-force
// path enumeration (a testing oracle, refused above its bound).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wcat/bigint.hpp"
#include "wcat/weights.hpp"

namespace wcat {

enum class Step : std::uint8_t { Up, Down };

class DyckPath {
  public:
    DyckPath() = default;  // the empty path
    // validates balance and the nonnegative-prefix condition
    explicit DyckPath(std::vector<Step> steps);

    std::span<const Step> steps() const noexcept { return steps_; }
    std::size_t order() const noexcept { return steps_.size() / 2; }
    // starting heights of the up steps, in path order
    std::vector<std::uint64_t> ascent_heights() const;

    bool operator==(const DyckPath&) const = default;

  private:
    std::vector<Step> steps_;
};

inline constexpr unsigned kBruteForceBound = 14;

BigInt catalan(unsigned n);
// C_0 .. C_n_max via the exact recurrence C_{n+1} = C_n * 2(2n+1) / (n+2)
std::vector<BigInt> catalan_sequence(unsigned n_max);

enum class Method { Dp, Series, BruteForce };

struct WeightedCount {
    unsigned n = 0;
    BigInt value;
    Method method = Method::Dp;
};

WeightedCount weighted_catalan_dp(unsigned n, const WeightSequence& b);
// every order in one lattice sweep; index k holds the order-k value
std::vector<BigInt> weighted_catalan_all(unsigned n_max, const WeightSequence& b);
// truncated continued-fraction expansion; returns orders 0 .. n_max.
// depth picks the truncation level, by default n_max (deeper levels cannot
// change the retained coefficients).
std::vector<BigInt> weighted_catalan_series(unsigned n_max, const WeightSequence& b);
std::vector<BigInt> weighted_catalan_series_depth(unsigned n_max, unsigned depth,
                                                  const WeightSequence& b);
WeightedCount weighted_catalan_bruteforce(unsigned n, const WeightSequence& b,
                                          unsigned bound = kBruteForceBound);

BigInt q_catalan(unsigned n, const BigInt& q);
BigInt morse_link_number(unsigned n);

// Visits every Dyck path of length 2n once, in lexicographic order with
// Up < Down. The span is only valid during the callback.
void for_each_dyck_path(unsigned n, const std::function<void(std::span<const Step>)>& visit);

// wt(P) given the precomputed values b(0..n-1)
BigInt path_weight(std::span<const Step> steps, std::span<const BigInt> b_values);
// full lattice squares between the path and the lowest path: the sum of the
// ascent heights
std::uint64_t path_area(std::span<const Step> steps);

}  // namespace wcat
