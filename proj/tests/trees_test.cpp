#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "test_util.hpp"
#include "wcat/trees.hpp"

using wcat::BigInt;
using wcat::BinaryTree;
using wcat::DyckPath;
using wcat::Step;
using wcat::TreeShape;
using wcat::WeightSequence;

namespace {

BinaryTree left_chain(unsigned n) {
    BinaryTree t;
    for (unsigned i = 0; i < n; ++i) t = BinaryTree::node(t, BinaryTree{});
    return t;
}

BinaryTree right_chain(unsigned n) {
    BinaryTree t;
    for (unsigned i = 0; i < n; ++i) t = BinaryTree::node(BinaryTree{}, t);
    return t;
}

// every tree obtained from t by swapping the children under one vertex
std::vector<BinaryTree> single_swaps(const BinaryTree& t) {
    if (t.empty()) return {};
    std::vector<BinaryTree> out;
    out.push_back(BinaryTree::node(t.right(), t.left()));
    for (const BinaryTree& l : single_swaps(t.left()))
        out.push_back(BinaryTree::node(l, t.right()));
    for (const BinaryTree& r : single_swaps(t.right()))
        out.push_back(BinaryTree::node(t.left(), r));
    return out;
}

// closure of {t} under single swaps, keyed by the ordered encoding
std::set<std::string> swap_closure(const BinaryTree& t) {
    std::map<std::string, BinaryTree> frontier{{t.encode(), t}};
    std::set<std::string> seen{t.encode()};
    while (!frontier.empty()) {
        std::map<std::string, BinaryTree> next;
        for (const auto& [code, tree] : frontier) {
            for (const BinaryTree& swapped : single_swaps(tree)) {
                if (seen.insert(swapped.encode()).second)
                    next.emplace(swapped.encode(), swapped);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

TEST_CASE("tree enumeration counts are Catalan") {
    CHECK(wcat::enumerate_trees(0).size() == 1);
    CHECK(wcat::enumerate_trees(0)[0].empty());
    CHECK(wcat::enumerate_trees(3).size() == 5);
    CHECK(wcat::enumerate_trees(4).size() == 14);
    for (unsigned n = 0; n <= 9; ++n) {
        auto trees = wcat::enumerate_trees(n);
        CHECK(BigInt{trees.size()} == wcat::catalan(n));
        std::set<std::string> codes;
        for (const auto& t : trees) {
            CHECK(t.size() == n);
            codes.insert(t.encode());
        }
        CHECK(codes.size() == trees.size());
    }
    CHECK_THROWS_AS(wcat::enumerate_trees(15), std::invalid_argument);
}

TEST_CASE("depth-first bijection to Dyck paths") {
    CHECK(wcat::tree_to_path(BinaryTree{}).steps().empty());
    CHECK(wcat::tree_to_path(BinaryTree::leaf()) ==
          DyckPath{{Step::Up, Step::Down}});
    BinaryTree left_child = BinaryTree::node(BinaryTree::leaf(), BinaryTree{});
    CHECK(wcat::tree_to_path(left_child) ==
          DyckPath{{Step::Up, Step::Up, Step::Down, Step::Down}});
    CHECK(wcat::left_edge_depths(left_child) == std::vector<std::uint64_t>{0, 1});

    for (unsigned n = 0; n <= 10; ++n) {
        std::set<std::string> images;
        for (const auto& t : wcat::enumerate_trees(n)) {
            DyckPath p = wcat::tree_to_path(t);
            std::string code;
            for (Step s : p.steps()) code += s == Step::Up ? 'U' : 'D';
            images.insert(code);

            // left-edge depths match ascent heights as multisets
            auto heights = p.ascent_heights();
            std::sort(heights.begin(), heights.end());
            CHECK(heights == wcat::left_edge_depths(t));
        }
        std::set<std::string> all_paths;
        wcat::for_each_dyck_path(n, [&](std::span<const Step> steps) {
            std::string code;
            for (Step s : steps) code += s == Step::Up ? 'U' : 'D';
            all_paths.insert(code);
        });
        CHECK(images == all_paths);
    }
}

TEST_CASE("tree weights multiply b along left depths") {
    WeightSequence b = WeightSequence::odd_squares();
    CHECK(wcat::tree_weight(BinaryTree{}, b, 0) == BigInt{1});
    CHECK(wcat::tree_weight(BinaryTree{}, b, 99) == BigInt{1});
    CHECK(wcat::tree_weight(left_chain(3), b, 0) == BigInt{225});   // 1 * 9 * 25
    CHECK(wcat::tree_weight(right_chain(3), b, 0) == BigInt{1});    // 1 * 1 * 1
    CHECK(wcat::tree_weight(left_chain(2), b, 1) == BigInt{9 * 25});
}

TEST_CASE("path weight transports to tree weight") {
    std::vector<WeightSequence> weights{WeightSequence::odd_squares(),
                                        WeightSequence::parse("geom:5"),
                                        wcat::testutil::random_odd_table(16, 0xabcd)};
    for (const auto& b : weights) {
        std::vector<BigInt> bv;
        for (unsigned h = 0; h < 8; ++h) bv.push_back(b.evaluate(h));
        for (unsigned n = 0; n <= 8; ++n) {
            for (const auto& t : wcat::enumerate_trees(n)) {
                DyckPath p = wcat::tree_to_path(t);
                CHECK(wcat::path_weight(p.steps(), bv) == wcat::tree_weight(t, b, 0));
            }
        }
    }
}

TEST_CASE("canonical shapes identify orbits") {
    BinaryTree left2 = BinaryTree::node(BinaryTree::leaf(), BinaryTree{});
    BinaryTree right2 = BinaryTree::node(BinaryTree{}, BinaryTree::leaf());
    CHECK(wcat::canonical_shape(left2) == wcat::canonical_shape(right2));

    TreeShape cherry = wcat::canonical_shape(
        BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()));
    TreeShape chain = wcat::canonical_shape(left_chain(3));
    CHECK(!(cherry == chain));

    // order of construction does not matter
    TreeShape a = TreeShape::node(TreeShape{}, wcat::canonical_shape(left_chain(2)));
    TreeShape b = TreeShape::node(wcat::canonical_shape(right_chain(2)), TreeShape{});
    CHECK(a == b);
    CHECK(a.to_parens() == b.to_parens());

    // grouping T_3 by shape gives the chain orbit (4) and the cherry (1)
    std::map<std::string, unsigned> orbit_sizes;
    for (const auto& t : wcat::enumerate_trees(3))
        orbit_sizes[wcat::canonical_shape(t).to_parens()] += 1;
    CHECK(orbit_sizes.size() == 2);
    CHECK(orbit_sizes[chain.to_parens()] == 4);
    CHECK(orbit_sizes[cherry.to_parens()] == 1);
}

TEST_CASE("shapes classify exactly the swap-reachable trees") {
    for (unsigned n = 0; n <= 5; ++n) {
        auto trees = wcat::enumerate_trees(n);
        for (const auto& t : trees) {
            std::set<std::string> same_shape;
            for (const auto& other : trees)
                if (wcat::canonical_shape(other) == wcat::canonical_shape(t))
                    same_shape.insert(other.encode());
            CHECK(swap_closure(t) == same_shape);
        }
    }
}

TEST_CASE("orbit sizes from the recursion match class cardinalities") {
    CHECK(wcat::orbit_size(TreeShape{}) == BigInt{1});
    CHECK(wcat::orbit_size(wcat::canonical_shape(left_chain(3))) == BigInt{4});
    CHECK(wcat::orbit_size(wcat::canonical_shape(
              BinaryTree::node(BinaryTree::leaf(), BinaryTree::leaf()))) == BigInt{1});

    for (unsigned n = 0; n <= 6; ++n) {
        std::map<std::string, std::uint64_t> class_count;
        std::map<std::string, TreeShape> class_shape;
        for (const auto& t : wcat::enumerate_trees(n)) {
            TreeShape s = wcat::canonical_shape(t);
            class_count[s.to_parens()] += 1;
            class_shape.emplace(s.to_parens(), s);
        }
        for (const auto& [parens, count] : class_count) {
            CHECK(wcat::orbit_size(class_shape.at(parens)) == BigInt{count});
            // and every size is a power of two
            BigInt size{count};
            CHECK(size == BigInt::two_pow(size.trailing_zero_bits()));
        }
    }
}

TEST_CASE("shape enumeration counts and coverage") {
    const std::size_t expected[] = {1,    1,    1,    2,    3,    6,     11,
                                    23,   46,   98,   207,  451,  983,   2179,
                                    4850, 10905, 24631, 56011, 127912};
    for (unsigned n = 0; n <= 18; ++n)
        CHECK(wcat::enumerate_shapes(n).size() == expected[n]);
    CHECK_THROWS_AS(wcat::enumerate_shapes(19), std::invalid_argument);

    for (unsigned n = 0; n <= 8; ++n) {
        std::set<std::string> enumerated;
        for (const auto& s : wcat::enumerate_shapes(n)) {
            CHECK(s.size() == n);
            enumerated.insert(s.to_parens());
        }
        CHECK(enumerated.size() == wcat::enumerate_shapes(n).size());
        std::set<std::string> from_trees;
        for (const auto& t : wcat::enumerate_trees(n))
            from_trees.insert(wcat::canonical_shape(t).to_parens());
        CHECK(enumerated == from_trees);
    }
}

TEST_CASE("reduced weights divide the orbit weight sum") {
    WeightSequence oddsq = WeightSequence::odd_squares();
    CHECK(wcat::reduced_weight(TreeShape{}, oddsq, 0, 3).values() ==
          std::vector<BigInt>{BigInt{1}, BigInt{1}, BigInt{1}});
    TreeShape leaf_shape = wcat::canonical_shape(BinaryTree::leaf());
    CHECK(wcat::reduced_weight(leaf_shape, oddsq, 0, 1)[0] == BigInt{1});
    CHECK(wcat::reduced_weight(leaf_shape, oddsq, 2, 1)[0] == BigInt{25});

    // orbit-sum oracle: r = (sum of tree weights over the orbit) / size
    for (const auto& b : {oddsq, WeightSequence::parse("geom:5")}) {
        for (unsigned n = 0; n <= 8; ++n) {
            std::map<std::string, BigInt> orbit_sum;
            std::map<std::string, std::uint64_t> orbit_count;
            std::map<std::string, TreeShape> shapes;
            for (std::uint64_t x = 0; x <= 4; ++x) {
                orbit_sum.clear();
                orbit_count.clear();
                for (const auto& t : wcat::enumerate_trees(n)) {
                    TreeShape s = wcat::canonical_shape(t);
                    orbit_sum[s.to_parens()] += wcat::tree_weight(t, b, x);
                    orbit_count[s.to_parens()] += 1;
                    shapes.emplace(s.to_parens(), s);
                }
                for (const auto& [parens, sum] : orbit_sum) {
                    BigInt reduced = wcat::reduced_weight(shapes.at(parens), b, x, 1)[0];
                    CHECK(reduced * BigInt{orbit_count[parens]} == sum);
                }
            }
        }
    }

    // the 3-chain orbit of odd squares: (225 + 81 + 9 + 1) / 4
    TreeShape chain = wcat::canonical_shape(left_chain(3));
    CHECK(wcat::reduced_weight(chain, oddsq, 0, 1)[0] == BigInt{79});
}

TEST_CASE("reduced weights are odd for admissible weights") {
    for (const auto& b : wcat::testutil::member_battery()) {
        for (unsigned n = 0; n <= 10; ++n) {
            wcat::ReducedWeightEvaluator evaluator{b};
            for (const auto& s : wcat::enumerate_shapes(n))
                for (std::uint64_t x = 0; x <= 8; ++x)
                    CHECK(evaluator.at(s, x).is_odd());
        }
    }
}

TEST_CASE("inexact halving in the reduced weight names the shape") {
    // parity of (1, 2, 1, 2, ...) alternates, so the first bracket is odd
    WeightSequence bad = WeightSequence::parse("table:1,2,1,2");
    TreeShape chain2 = wcat::canonical_shape(left_chain(2));
    CHECK_THROWS_AS(wcat::reduced_weight(chain2, bad, 0, 1), wcat::ExactnessError);
    try {
        wcat::reduced_weight(chain2, bad, 0, 1);
    } catch (const wcat::ExactnessError& e) {
        CHECK(e.context().find(chain2.to_parens()) != std::string::npos);
        CHECK(e.x() == 0);
    }
}

TEST_CASE("orbit census histograms and minimal orbits") {
    auto census3 = wcat::orbit_census(3, WeightSequence::parse("const:1"));
    CHECK(census3.records.size() == 2);
    CHECK(census3.histogram == std::map<unsigned, std::size_t>{{0, 1}, {2, 1}});
    CHECK(census3.minimal_exponent == 0);
    CHECK(census3.minimal_count == 1);
    CHECK(census3.total_size == BigInt{5});

    auto census4 = wcat::orbit_census(4, WeightSequence::parse("const:1"));
    CHECK(census4.minimal_exponent == 1);  // s(5) - 1
    CHECK(census4.minimal_count == 1);
    CHECK(census4.total_size == BigInt{14});

    for (unsigned n = 0; n <= 12; ++n) {
        auto census = wcat::orbit_census(n, WeightSequence::parse("const:1"));
        CHECK(census.total_size == wcat::catalan(n));
        std::uint64_t s = 0;
        for (unsigned m = n + 1; m; m >>= 1) s += m & 1;
        s -= 1;
        CHECK(census.minimal_exponent == s);
        CHECK(census.minimal_count == wcat::double_factorial_odd(static_cast<unsigned>(s)));
        for (const auto& record : census.records) {
            CHECK(record.size == BigInt::two_pow(record.size_exponent));
            CHECK(record.reduced[0] == BigInt{1});  // constant weight
        }
    }
}

TEST_CASE("orbit decomposition recovers the weighted Catalan number") {
    CHECK(wcat::orbit_decomposition_check(3, WeightSequence::odd_squares()) == BigInt{325});
    for (unsigned n = 0; n <= 9; ++n) {
        CHECK(wcat::orbit_decomposition_check(n, WeightSequence::parse("const:1")) ==
              wcat::catalan(n));
    }
    CHECK(wcat::orbit_decomposition_check(4, WeightSequence::parse("geom:5")) ==
          wcat::q_catalan(4, BigInt{5}));
    CHECK_THROWS_AS(wcat::orbit_decomposition_check(3, WeightSequence::parse("poly:1,2")),
                    wcat::NonMemberError);
}

TEST_CASE("odd double factorials") {
    CHECK(wcat::double_factorial_odd(0) == 1);
    CHECK(wcat::double_factorial_odd(1) == 1);
    CHECK(wcat::double_factorial_odd(2) == 3);
    CHECK(wcat::double_factorial_odd(3) == 15);
    CHECK(wcat::double_factorial_odd(4) == 105);
}
