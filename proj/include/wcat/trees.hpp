#pragma once
// trees.hpp - binary trees, unordered shapes, and the orbit decomposition.
//
// Reflections that swap the two subtrees under a vertex act on the set of
// binary trees with n vertices; two trees lie in the same orbit exactly when
// they agree as rooted trees once left/right is forgotten. Each orbit is
// represented by a canonical unordered shape. Orbit sizes are powers of two
// and follow a product recursion over the root's child shapes. The reduced
// orbit weight r_b divides the summed tree weights by the orbit size and
// obeys
//   r(shape; x) = b(x) * (r(s1; x+1) r(s2; x) + r(s1; x) r(s2; x+1)) / 2,
// with r = 1 for the empty shape; the halving is exact for admissible b.
// Summing orbit size times r(shape; 0) over all shapes of n vertices
// recovers the weighted Catalan number of order n.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcat/bigint.hpp"
#include "wcat/calculus.hpp"
#include "wcat/catalan.hpp"
#include "wcat/weights.hpp"

namespace wcat {

class BinaryTree {
  public:
    BinaryTree() = default;  // the empty tree

    static BinaryTree leaf();
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool empty() const noexcept { return node_ == nullptr; }
    std::size_t size() const noexcept;
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    // left/right-sensitive encoding, usable as a set key
    std::string encode() const;
    bool operator==(const BinaryTree& other) const;

  private:
    struct Node;
    explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class TreeShape {
  public:
    TreeShape() = default;  // the empty shape

    // stores the pair sorted by the canonical order, so construction order
    // does not matter
    static TreeShape node(TreeShape a, TreeShape b);

    bool empty() const noexcept { return node_ == nullptr; }
    std::size_t size() const noexcept;
    const TreeShape& first() const;
    const TreeShape& second() const;

    // canonical balanced-parenthesis form: () per vertex, children inside
    std::string to_parens() const;

    // total order: vertex count first, then children lexicographically
    static int compare(const TreeShape& a, const TreeShape& b);
    bool operator==(const TreeShape& other) const { return compare(*this, other) == 0; }
    bool operator<(const TreeShape& other) const { return compare(*this, other) < 0; }

    // stable within one construction context; used for memo keys
    const void* id() const noexcept;

  private:
    struct Node;
    explicit TreeShape(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline constexpr unsigned kTreeEnumerationBound = 14;
inline constexpr unsigned kShapeEnumerationBound = 18;

// all binary trees on n vertices, each exactly once
std::vector<BinaryTree> enumerate_trees(unsigned n, unsigned bound = kTreeEnumerationBound);
// all unordered shapes on n vertices (one per orbit), each exactly once;
// subshapes are shared, so shape ids identify equal shapes within the batch
std::vector<TreeShape> enumerate_shapes(unsigned n, unsigned bound = kShapeEnumerationBound);

// depth-first bijection P(T) = Up P(T_left) Down P(T_right); the left-edge
// depths of T match the ascent heights of P(T) as multisets
DyckPath tree_to_path(const BinaryTree& tree);
// number of left edges from the root to each vertex, sorted ascending
std::vector<std::uint64_t> left_edge_depths(const BinaryTree& tree);
// product of b(x + l_v) over all vertices v; 1 for the empty tree
BigInt tree_weight(const BinaryTree& tree, const WeightSequence& b, std::uint64_t x);

TreeShape canonical_shape(const BinaryTree& tree);

// orbit size is 2^t: children multiply, distinct children double
unsigned orbit_size_exponent(const TreeShape& shape);
BigInt orbit_size(const TreeShape& shape);

// Thrown on a failed orbit-level consistency check; names the orbit.
class OrbitError : public std::runtime_error {
  public:
    OrbitError(std::string message, std::string shape_parens);
    const std::string& shape_parens() const noexcept { return shape_parens_; }

  private:
    std::string shape_parens_;
};

// Memoizing evaluator for the reduced orbit weight r_b(shape; x). The memo
// is owned by the instance, so concurrent evaluators never share state.
class ReducedWeightEvaluator {
  public:
    explicit ReducedWeightEvaluator(WeightSequence b);

    const BigInt& at(const TreeShape& shape, std::uint64_t x);
    FunctionWindow window(const TreeShape& shape, std::uint64_t origin, std::size_t length);

  private:
    WeightSequence weight_;
    std::vector<BigInt> weight_cache_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
    std::unordered_map<const void*, std::uint32_t> shape_ids_;

    const BigInt& weight_at(std::uint64_t x);
    std::uint32_t intern(const TreeShape& shape);
};

FunctionWindow reduced_weight(const TreeShape& shape, const WeightSequence& b,
                              std::uint64_t origin, std::size_t length);

struct OrbitRecord {
    TreeShape shape;
    unsigned size_exponent = 0;
    BigInt size;              // 2^size_exponent
    FunctionWindow reduced;   // r_b(shape; x) on the requested window
};

struct OrbitCensus {
    unsigned n = 0;
    std::vector<OrbitRecord> records;              // in canonical shape order
    std::map<unsigned, std::size_t> histogram;     // size exponent -> orbit count
    unsigned minimal_exponent = 0;
    std::size_t minimal_count = 0;
    BigInt total_size;                             // sum of orbit sizes
};

OrbitCensus orbit_census(unsigned n, const WeightSequence& b, std::size_t window_length = 1,
                         unsigned bound = kShapeEnumerationBound);

// Sum of orbit size times r_b(shape; 0) over all shapes of n vertices.
// Rejects proven non-members, requires every reduced weight to be odd, and
// checks the total against the lattice DP; returns the common value.
BigInt orbit_decomposition_check(unsigned n, const WeightSequence& b,
                                 unsigned bound = kShapeEnumerationBound);

// 1 * 3 * 5 * ... * (2s-1), with the empty product 1 at s = 0; the number of
// minimal orbits
std::uint64_t double_factorial_odd(unsigned s);

}  // namespace wcat
