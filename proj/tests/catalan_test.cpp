#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "test_util.hpp"
#include "wcat/catalan.hpp"

using wcat::BigInt;
using wcat::DyckPath;
using wcat::Step;
using wcat::WeightSequence;

namespace {

// independent oracle: C(2n,n)/(n+1) with Pascal-triangle binomials
BigInt catalan_binomial_oracle(unsigned n) {
    auto rows = wcat::testutil::pascal_rows(2 * n);
    return rows[2 * n][n].div_exact_u64(n + 1);
}

}  // namespace

TEST_CASE("classical values, recurrence vs closed form") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (unsigned n = 0; n <= 10; ++n) CHECK(wcat::catalan(n) == BigInt{expected[n]});
    CHECK(wcat::catalan(3) == BigInt{5});
    CHECK(wcat::catalan(5) == catalan_binomial_oracle(5));
    for (unsigned n = 0; n <= 60; ++n) CHECK(wcat::catalan(n) == catalan_binomial_oracle(n));

    auto sequence = wcat::catalan_sequence(40);
    for (unsigned n = 0; n <= 40; ++n) CHECK(sequence[n] == wcat::catalan(n));
}

TEST_CASE("classical values vs the convolution recurrence") {
    // C_{n+1} = sum_i C_i C_{n-i}, structurally unrelated to the product
    // recurrence used by catalan_sequence
    std::vector<BigInt> conv{BigInt{1}};
    for (unsigned n = 0; n < 50; ++n) {
        BigInt next;
        for (unsigned i = 0; i <= n; ++i) next += conv[i] * conv[n - i];
        conv.push_back(next);
    }
    auto sequence = wcat::catalan_sequence(50);
    CHECK(conv == sequence);
}

TEST_CASE("Dyck path validation and bookkeeping") {
    CHECK(DyckPath{}.order() == 0);
    DyckPath p{{Step::Up, Step::Up, Step::Down, Step::Down}};
    CHECK(p.order() == 2);
    CHECK(p.ascent_heights() == std::vector<std::uint64_t>{0, 1});
    CHECK_THROWS_AS((DyckPath{{Step::Down, Step::Up}}), std::invalid_argument);
    CHECK_THROWS_AS((DyckPath{{Step::Up}}), std::invalid_argument);
    CHECK_THROWS_AS((DyckPath{{Step::Up, Step::Down, Step::Down, Step::Up}}),
                    std::invalid_argument);
}

TEST_CASE("lattice DP values") {
    CHECK(wcat::weighted_catalan_dp(3, WeightSequence::parse("const:1")).value == BigInt{5});
    CHECK(wcat::weighted_catalan_dp(2, WeightSequence::odd_squares()).value == BigInt{10});

    // order 3 by hand: the five paths weigh b0^3, b0^2 b1 (twice), b0 b1^2,
    // b0 b1 b2 with b = (1, 9, 25)
    BigInt by_hand = BigInt{1} + BigInt{9} + BigInt{9} + BigInt{81} + BigInt{225};
    CHECK(by_hand == BigInt{325});
    CHECK(wcat::weighted_catalan_dp(3, WeightSequence::odd_squares()).value == by_hand);

    CHECK(wcat::weighted_catalan_dp(0, WeightSequence::parse("table:1")).value == BigInt{1});
    CHECK_THROWS_AS(wcat::weighted_catalan_dp(5, WeightSequence::parse("table:1,1")),
                    std::out_of_range);

    auto batch = wcat::weighted_catalan_all(9, WeightSequence::odd_squares());
    for (unsigned n = 0; n <= 9; ++n)
        CHECK(batch[n] == wcat::weighted_catalan_dp(n, WeightSequence::odd_squares()).value);
}

TEST_CASE("continued-fraction series expansion") {
    auto classical = wcat::weighted_catalan_series(3, WeightSequence::parse("const:1"));
    CHECK(classical == std::vector<BigInt>{BigInt{1}, BigInt{1}, BigInt{2}, BigInt{5}});

    auto weighted = wcat::weighted_catalan_series(3, WeightSequence::odd_squares());
    CHECK(weighted == std::vector<BigInt>{BigInt{1}, BigInt{1}, BigInt{10}, BigInt{325}});

    // b = (1, 0, 0, ...): only the sawtooth path survives
    auto degenerate = wcat::weighted_catalan_series(2, WeightSequence::parse("geom:0"));
    CHECK(degenerate == std::vector<BigInt>{BigInt{1}, BigInt{1}, BigInt{1}});
}

TEST_CASE("series truncation depth does not disturb retained coefficients") {
    for (const auto& b : wcat::testutil::route_battery()) {
        for (unsigned n_max = 0; n_max <= 8; ++n_max) {
            auto base = wcat::weighted_catalan_series_depth(n_max, n_max, b);
            CHECK(base == wcat::weighted_catalan_series_depth(n_max, n_max + 1, b));
            CHECK(base == wcat::weighted_catalan_series_depth(n_max, n_max + 4, b));
        }
    }
}

TEST_CASE("brute force enumerates exactly the Dyck paths") {
    unsigned visits = 0;
    BigInt total;
    std::vector<BigInt> bv;
    for (unsigned h = 0; h < 3; ++h) bv.push_back(WeightSequence::odd_squares().evaluate(h));
    wcat::for_each_dyck_path(3, [&](std::span<const Step> steps) {
        ++visits;
        total += wcat::path_weight(steps, bv);
    });
    CHECK(visits == 5);
    CHECK(total == BigInt{325});

    CHECK(wcat::weighted_catalan_bruteforce(0, WeightSequence::parse("table:9")).value ==
          BigInt{1});
    CHECK(wcat::weighted_catalan_bruteforce(4, WeightSequence::parse("const:1")).value ==
          BigInt{14});
    CHECK_THROWS_AS(wcat::weighted_catalan_bruteforce(15, WeightSequence::parse("const:1")),
                    std::invalid_argument);

    for (unsigned n : {5u, 8u, 10u}) {
        std::uint64_t count = 0;
        wcat::for_each_dyck_path(n, [&](std::span<const Step>) { ++count; });
        CHECK(BigInt{count} == wcat::catalan(n));
    }
}

TEST_CASE("the three routes agree") {
    for (const auto& b : wcat::testutil::route_battery()) {
        auto dp = wcat::weighted_catalan_all(9, b);
        auto series = wcat::weighted_catalan_series(9, b);
        CHECK(dp == series);
        for (unsigned n = 0; n <= 9; ++n)
            CHECK(wcat::weighted_catalan_bruteforce(n, b).value == dp[n]);
    }
    // the two scalable routes, further out than brute force reaches
    for (const char* spec : {"oddsq", "geom:3"}) {
        wcat::WeightSequence b = wcat::WeightSequence::parse(spec);
        CHECK(wcat::weighted_catalan_all(25, b) == wcat::weighted_catalan_series(25, b));
    }
    wcat::WeightSequence wide_table = wcat::testutil::random_odd_table(32, 0x0ddba11);
    CHECK(wcat::weighted_catalan_all(25, wide_table) ==
          wcat::weighted_catalan_series(25, wide_table));
}

TEST_CASE("q-analog values and specializations") {
    CHECK(wcat::q_catalan(3, BigInt{1}) == BigInt{5});
    CHECK(wcat::q_catalan(3, BigInt{5}) == BigInt{161});  // 1 + 2*5 + 25 + 125
    CHECK(wcat::q_catalan(2, BigInt{2}) == BigInt{3});
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(wcat::q_catalan(n, BigInt{1}) == wcat::catalan(n));
        CHECK(wcat::q_catalan(n, BigInt{0}) == BigInt{1});
    }
}

TEST_CASE("the q-weight of a path is q to its area") {
    for (long long q : {2ll, 3ll, 5ll}) {
        for (unsigned n = 0; n <= 10; ++n) {
            BigInt total;
            wcat::for_each_dyck_path(n, [&](std::span<const Step> steps) {
                total += BigInt::power(BigInt{q}, wcat::path_area(steps));
            });
            CHECK(total == wcat::q_catalan(n, BigInt{q}));
        }
    }
    // and area agrees with ascent heights
    wcat::for_each_dyck_path(6, [&](std::span<const Step> steps) {
        DyckPath p{std::vector<Step>(steps.begin(), steps.end())};
        std::uint64_t by_heights = 0;
        for (std::uint64_t h : p.ascent_heights()) by_heights += h;
        CHECK(by_heights == wcat::path_area(steps));
    });
}

TEST_CASE("coarse growth envelope for positive weights") {
    WeightSequence b = WeightSequence::odd_squares();
    for (unsigned n = 1; n <= 8; ++n) {
        BigInt low = wcat::catalan(n);  // min b on [0, n-1] is 1
        BigInt high = wcat::catalan(n) * BigInt::power(b.evaluate(n - 1), n);
        BigInt value = wcat::weighted_catalan_dp(n, b).value;
        CHECK(low <= value);
        CHECK(value <= high);
    }
}

TEST_CASE("Morse link counts") {
    CHECK(wcat::morse_link_number(0) == BigInt{1});
    CHECK(wcat::morse_link_number(1) == BigInt{1});
    CHECK(wcat::morse_link_number(2) == BigInt{10});
    CHECK(wcat::morse_link_number(3) == BigInt{325});
    for (unsigned n = 0; n <= 9; ++n)
        CHECK(wcat::morse_link_number(n) ==
              wcat::weighted_catalan_dp(n, WeightSequence::odd_squares()).value);
}
