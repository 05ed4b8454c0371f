#include "wcat/catalan.hpp"

#include <stdexcept>
#include <utility>

namespace wcat {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    long long height = 0;
    for (Step s : steps_) {
        height += s == Step::Up ? 1 : -1;
        if (height < 0) throw std::invalid_argument("DyckPath: prefix dips below zero");
    }
    if (height != 0) throw std::invalid_argument("DyckPath: unbalanced step sequence");
}

std::vector<std::uint64_t> DyckPath::ascent_heights() const {
    std::vector<std::uint64_t> heights;
    heights.reserve(order());
    std::uint64_t height = 0;
    for (Step s : steps_) {
        if (s == Step::Up) {
            heights.push_back(height);
            ++height;
        } else {
            --height;
        }
    }
    return heights;
}

std::vector<BigInt> catalan_sequence(unsigned n_max) {
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    BigInt c{1};
    out.push_back(c);
    for (unsigned n = 0; n < n_max; ++n) {
        c *= BigInt{2 * (2ull * n + 1)};
        c = c.div_exact_u64(n + 2);
        out.push_back(c);
    }
    return out;
}

BigInt catalan(unsigned n) {
    return catalan_sequence(n).back();
}

namespace {

std::vector<BigInt> weight_values(const WeightSequence& b, unsigned count) {
    std::vector<BigInt> values;
    values.reserve(count);
    for (unsigned h = 0; h < count; ++h) values.push_back(b.evaluate(h));
    return values;
}

}  // namespace

std::vector<BigInt> weighted_catalan_all(unsigned n_max, const WeightSequence& b) {
    // cur[h] = total weight of length-i prefixes ending at height h; an up
    // step from height h contributes a factor b(h), a down step contributes 1
    const std::vector<BigInt> bv = weight_values(b, n_max);
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    out.push_back(BigInt{1});
    std::vector<BigInt> cur(n_max + 1), next(n_max + 1);
    cur[0] = BigInt{1};
    for (unsigned i = 1; i <= 2 * n_max; ++i) {
        unsigned top = std::min(i, 2 * n_max - i);
        for (unsigned h = 0; h <= top; ++h) {
            next[h] = h + 1 <= n_max ? cur[h + 1] : BigInt{};
            if (h > 0) next[h] += cur[h - 1] * bv[h - 1];
        }
        for (unsigned h = top + 1; h <= n_max; ++h) next[h] = BigInt{};
        std::swap(cur, next);
        if (i % 2 == 0) out.push_back(cur[0]);
    }
    return out;
}

WeightedCount weighted_catalan_dp(unsigned n, const WeightSequence& b) {
    return WeightedCount{n, weighted_catalan_all(n, b).back(), Method::Dp};
}

std::vector<BigInt> weighted_catalan_series_depth(unsigned n_max, unsigned depth,
                                                  const WeightSequence& b) {
    // F starts as the constant series 1 at the deepest level; each level k
    // replaces F by 1/(1 - b_k x F), i.e. H with H = 1 + b_k x F H
    std::vector<BigInt> f(n_max + 1);
    f[0] = BigInt{1};
    for (unsigned level = depth; level-- > 0;) {
        const BigInt bk = b.evaluate(level);
        std::vector<BigInt> h(n_max + 1);
        h[0] = BigInt{1};
        for (unsigned j = 1; j <= n_max; ++j) {
            BigInt acc;
            for (unsigned i = 0; i < j; ++i) acc += f[i] * h[j - 1 - i];
            h[j] = bk * acc;
        }
        f = std::move(h);
    }
    return f;
}

std::vector<BigInt> weighted_catalan_series(unsigned n_max, const WeightSequence& b) {
    return weighted_catalan_series_depth(n_max, n_max, b);
}

namespace {

void enumerate_paths(std::vector<Step>& steps, unsigned ups, unsigned downs, unsigned n,
                     const std::function<void(std::span<const Step>)>& visit) {
    if (ups == n && downs == n) {
        visit(steps);
        return;
    }
    if (ups < n) {
        steps.push_back(Step::Up);
        enumerate_paths(steps, ups + 1, downs, n, visit);
        steps.pop_back();
    }
    if (downs < ups) {
        steps.push_back(Step::Down);
        enumerate_paths(steps, ups, downs + 1, n, visit);
        steps.pop_back();
    }
}

}  // namespace

void for_each_dyck_path(unsigned n,
                        const std::function<void(std::span<const Step>)>& visit) {
    std::vector<Step> steps;
    steps.reserve(2 * n);
    enumerate_paths(steps, 0, 0, n, visit);
}

BigInt path_weight(std::span<const Step> steps, std::span<const BigInt> b_values) {
    BigInt weight{1};
    std::size_t height = 0;
    for (Step s : steps) {
        if (s == Step::Up) {
            weight *= b_values[height];
            ++height;
        } else {
            --height;
        }
    }
    return weight;
}

std::uint64_t path_area(std::span<const Step> steps) {
    std::uint64_t area = 0;
    std::uint64_t height = 0;
    for (Step s : steps) {
        if (s == Step::Up) {
            area += height;
            ++height;
        } else {
            --height;
        }
    }
    return area;
}

WeightedCount weighted_catalan_bruteforce(unsigned n, const WeightSequence& b,
                                          unsigned bound) {
    if (n > bound)
        throw std::invalid_argument("weighted_catalan_bruteforce: order " + std::to_string(n) +
                                    " exceeds the enumeration bound " + std::to_string(bound));
    const std::vector<BigInt> bv = weight_values(b, n);
    BigInt total;
    for_each_dyck_path(n, [&](std::span<const Step> steps) { total += path_weight(steps, bv); });
    return WeightedCount{n, std::move(total), Method::BruteForce};
}

BigInt q_catalan(unsigned n, const BigInt& q) {
    return weighted_catalan_dp(n, WeightSequence::geometric(q)).value;
}

BigInt morse_link_number(unsigned n) {
    return weighted_catalan_dp(n, WeightSequence::odd_squares()).value;
}

}  // namespace wcat
