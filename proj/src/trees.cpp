#include "wcat/trees.hpp"

#include <algorithm>
#include <utility>

namespace wcat {

// ---- BinaryTree ----

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
    std::size_t size;
};

BinaryTree BinaryTree::leaf() {
    return node(BinaryTree{}, BinaryTree{});
}

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    std::size_t size = left.size() + right.size() + 1;
    return BinaryTree{std::make_shared<const Node>(Node{std::move(left), std::move(right), size})};
}

std::size_t BinaryTree::size() const noexcept {
    return node_ ? node_->size : 0;
}

const BinaryTree& BinaryTree::left() const {
    if (!node_) throw std::domain_error("BinaryTree: empty tree has no children");
    return node_->left;
}

const BinaryTree& BinaryTree::right() const {
    if (!node_) throw std::domain_error("BinaryTree: empty tree has no children");
    return node_->right;
}

namespace {

void encode_tree(const BinaryTree& tree, std::string& out) {
    if (tree.empty()) {
        out += '.';
        return;
    }
    out += '(';
    encode_tree(tree.left(), out);
    encode_tree(tree.right(), out);
    out += ')';
}

}  // namespace

std::string BinaryTree::encode() const {
    std::string out;
    encode_tree(*this, out);
    return out;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
    if (node_ == other.node_) return true;
    if (empty() || other.empty() || size() != other.size()) return empty() == other.empty();
    return node_->left == other.node_->left && node_->right == other.node_->right;
}

std::vector<BinaryTree> enumerate_trees(unsigned n, unsigned bound) {
    if (n > bound)
        throw std::invalid_argument("enumerate_trees: " + std::to_string(n) +
                                    " vertices exceeds the enumeration bound " +
                                    std::to_string(bound));
    std::vector<std::vector<BinaryTree>> lists(n + 1);
    lists[0] = {BinaryTree{}};
    for (unsigned k = 1; k <= n; ++k) {
        for (unsigned i = 0; i < k; ++i) {
            for (const BinaryTree& left : lists[i])
                for (const BinaryTree& right : lists[k - 1 - i])
                    lists[k].push_back(BinaryTree::node(left, right));
        }
    }
    return std::move(lists[n]);
}

// ---- bijection and weights ----

namespace {

void append_path(const BinaryTree& tree, std::vector<Step>& steps) {
    if (tree.empty()) return;
    steps.push_back(Step::Up);
    append_path(tree.left(), steps);
    steps.push_back(Step::Down);
    append_path(tree.right(), steps);
}

void collect_left_depths(const BinaryTree& tree, std::uint64_t depth,
                         std::vector<std::uint64_t>& out) {
    if (tree.empty()) return;
    out.push_back(depth);
    collect_left_depths(tree.left(), depth + 1, out);
    collect_left_depths(tree.right(), depth, out);
}

}  // namespace

DyckPath tree_to_path(const BinaryTree& tree) {
    std::vector<Step> steps;
    steps.reserve(2 * tree.size());
    append_path(tree, steps);
    return DyckPath{std::move(steps)};
}

std::vector<std::uint64_t> left_edge_depths(const BinaryTree& tree) {
    std::vector<std::uint64_t> out;
    out.reserve(tree.size());
    collect_left_depths(tree, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt tree_weight(const BinaryTree& tree, const WeightSequence& b, std::uint64_t x) {
    if (tree.empty()) return BigInt{1};
    // the left subtree sees one more left edge on every root path
    return b.evaluate(x) * tree_weight(tree.left(), b, x + 1) * tree_weight(tree.right(), b, x);
}

// ---- TreeShape ----

struct TreeShape::Node {
    TreeShape first;  // <= second
    TreeShape second;
    std::size_t size;
};

std::size_t TreeShape::size() const noexcept {
    return node_ ? node_->size : 0;
}

const void* TreeShape::id() const noexcept {
    return node_.get();
}

int TreeShape::compare(const TreeShape& a, const TreeShape& b) {
    if (a.node_ == b.node_) return 0;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a.empty()) return 0;
    if (int c = compare(a.first(), b.first())) return c;
    return compare(a.second(), b.second());
}

TreeShape TreeShape::node(TreeShape a, TreeShape b) {
    if (compare(a, b) > 0) std::swap(a, b);
    std::size_t size = a.size() + b.size() + 1;
    return TreeShape{std::make_shared<const Node>(Node{std::move(a), std::move(b), size})};
}

const TreeShape& TreeShape::first() const {
    if (!node_) throw std::domain_error("TreeShape: empty shape has no children");
    return node_->first;
}

const TreeShape& TreeShape::second() const {
    if (!node_) throw std::domain_error("TreeShape: empty shape has no children");
    return node_->second;
}

namespace {

void parens_of(const TreeShape& shape, std::string& out) {
    if (shape.empty()) return;
    out += '(';
    parens_of(shape.first(), out);
    parens_of(shape.second(), out);
    out += ')';
}

}  // namespace

std::string TreeShape::to_parens() const {
    std::string out;
    parens_of(*this, out);
    return out;
}

TreeShape canonical_shape(const BinaryTree& tree) {
    if (tree.empty()) return TreeShape{};
    return TreeShape::node(canonical_shape(tree.left()), canonical_shape(tree.right()));
}

std::vector<TreeShape> enumerate_shapes(unsigned n, unsigned bound) {
    if (n > bound)
        throw std::invalid_argument("enumerate_shapes: " + std::to_string(n) +
                                    " vertices exceeds the enumeration bound " +
                                    std::to_string(bound));
    std::vector<std::vector<TreeShape>> lists(n + 1);
    lists[0] = {TreeShape{}};
    for (unsigned k = 1; k <= n; ++k) {
        for (unsigned i = 0; 2 * i <= k - 1; ++i) {
            unsigned j = k - 1 - i;
            const auto& small = lists[i];
            const auto& large = lists[j];
            for (std::size_t a = 0; a < small.size(); ++a) {
                std::size_t b_start = i == j ? a : 0;
                for (std::size_t b = b_start; b < large.size(); ++b)
                    lists[k].push_back(TreeShape::node(small[a], large[b]));
            }
        }
    }
    return std::move(lists[n]);
}

unsigned orbit_size_exponent(const TreeShape& shape) {
    if (shape.empty()) return 0;
    unsigned t = orbit_size_exponent(shape.first()) + orbit_size_exponent(shape.second());
    // a reflection at the root pairs distinct child arrangements
    if (!(shape.first() == shape.second())) t += 1;
    return t;
}

BigInt orbit_size(const TreeShape& shape) {
    return BigInt::two_pow(orbit_size_exponent(shape));
}

OrbitError::OrbitError(std::string message, std::string shape_parens)
    : std::runtime_error(message + " [orbit " + shape_parens + "]"),
      shape_parens_(std::move(shape_parens)) {}

// ---- reduced weights ----

ReducedWeightEvaluator::ReducedWeightEvaluator(WeightSequence b) : weight_(std::move(b)) {}

const BigInt& ReducedWeightEvaluator::weight_at(std::uint64_t x) {
    while (weight_cache_.size() <= x) weight_cache_.push_back(weight_.evaluate(weight_cache_.size()));
    return weight_cache_[static_cast<std::size_t>(x)];
}

std::uint32_t ReducedWeightEvaluator::intern(const TreeShape& shape) {
    auto [it, inserted] =
        shape_ids_.emplace(shape.id(), static_cast<std::uint32_t>(shape_ids_.size() + 1));
    return it->second;
}

const BigInt& ReducedWeightEvaluator::at(const TreeShape& shape, std::uint64_t x) {
    static const BigInt one{1};
    if (shape.empty()) return one;
    if (x >= (std::uint64_t{1} << 32))
        throw std::domain_error("reduced weight: evaluation point too large");
    std::uint64_t key = (std::uint64_t{intern(shape)} << 32) | x;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt numerator = at(shape.first(), x + 1) * at(shape.second(), x) +
                       at(shape.first(), x) * at(shape.second(), x + 1);
    if (numerator.is_odd())
        throw ExactnessError{"reduced weight of " + shape.to_parens(), x};
    BigInt value = weight_at(x) * numerator.half_exact();
    return memo_.emplace(key, std::move(value)).first->second;
}

FunctionWindow ReducedWeightEvaluator::window(const TreeShape& shape, std::uint64_t origin,
                                              std::size_t length) {
    std::vector<BigInt> values;
    values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) values.push_back(at(shape, origin + i));
    return FunctionWindow{origin, std::move(values)};
}

FunctionWindow reduced_weight(const TreeShape& shape, const WeightSequence& b,
                              std::uint64_t origin, std::size_t length) {
    ReducedWeightEvaluator evaluator{b};
    return evaluator.window(shape, origin, length);
}

// ---- census and decomposition ----

OrbitCensus orbit_census(unsigned n, const WeightSequence& b, std::size_t window_length,
                         unsigned bound) {
    if (window_length == 0) throw std::invalid_argument("orbit_census: empty window");
    std::vector<TreeShape> shapes = enumerate_shapes(n, bound);
    std::sort(shapes.begin(), shapes.end());

    OrbitCensus census;
    census.n = n;
    census.records.reserve(shapes.size());
    ReducedWeightEvaluator evaluator{b};
    for (const TreeShape& shape : shapes) {
        unsigned t = orbit_size_exponent(shape);
        census.records.push_back(OrbitRecord{shape, t, BigInt::two_pow(t),
                                             evaluator.window(shape, 0, window_length)});
        census.histogram[t] += 1;
        census.total_size += census.records.back().size;
    }
    census.minimal_exponent = census.histogram.begin()->first;
    census.minimal_count = census.histogram.begin()->second;
    return census;
}

BigInt orbit_decomposition_check(unsigned n, const WeightSequence& b, unsigned bound) {
    MembershipVerdict verdict = check_membership_fitted(b);
    if (verdict.rejected()) throw NonMemberError{verdict};

    ReducedWeightEvaluator evaluator{b};
    BigInt total;
    for (const TreeShape& shape : enumerate_shapes(n, bound)) {
        const BigInt& reduced = evaluator.at(shape, 0);
        if (reduced.is_even())
            throw OrbitError{"reduced weight " + reduced.to_string() + " is even",
                             shape.to_parens()};
        total += orbit_size(shape) * reduced;
    }
    BigInt dp = weighted_catalan_dp(n, b).value;
    if (total != dp)
        throw OrbitError{"orbit total " + total.to_string() + " != dp value " + dp.to_string(),
                         "all orbits of order " + std::to_string(n)};
    return total;
}

std::uint64_t double_factorial_odd(unsigned s) {
    if (s > 20) throw std::domain_error("double_factorial_odd: overflow");
    std::uint64_t out = 1;
    for (unsigned i = 1; i <= s; ++i) out *= 2 * i - 1;
    return out;
}

}  // namespace wcat
