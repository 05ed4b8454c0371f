#include "wcat/calculus.hpp"

#include <algorithm>
#include <utility>

namespace wcat {

FunctionWindow::FunctionWindow(std::uint64_t origin, std::vector<BigInt> values)
    : origin_(origin), values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("FunctionWindow: empty window");
}

const BigInt& FunctionWindow::at(std::uint64_t x) const {
    if (x < origin_ || x >= end())
        throw std::out_of_range("FunctionWindow: x=" + std::to_string(x) +
                                " outside [" + std::to_string(origin_) + ", " +
                                std::to_string(end()) + ")");
    return values_[static_cast<std::size_t>(x - origin_)];
}

FunctionWindow window_of(const WeightSequence& b, std::uint64_t origin, std::size_t length) {
    std::vector<BigInt> values;
    values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) values.push_back(b.evaluate(origin + i));
    return FunctionWindow{origin, std::move(values)};
}

FunctionWindow shift(const FunctionWindow& f) {
    if (f.size() < 2) throw std::domain_error("shift: window too short");
    std::vector<BigInt> values(f.values().begin() + 1, f.values().end());
    return FunctionWindow{f.origin() + 1, std::move(values)};
}

FunctionWindow difference(const FunctionWindow& f, unsigned n) {
    if (f.size() <= n) throw std::domain_error("difference: window of length " +
                                               std::to_string(f.size()) +
                                               " too short for order " + std::to_string(n));
    std::vector<BigInt> values = f.values();
    for (unsigned step = 0; step < n; ++step) {
        for (std::size_t i = 0; i + 1 + step < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
    }
    values.resize(values.size() - n);
    return FunctionWindow{f.origin(), std::move(values)};
}

namespace {

std::pair<std::uint64_t, std::uint64_t> overlap(const FunctionWindow& f,
                                                const FunctionWindow& g) {
    std::uint64_t lo = std::max(f.origin(), g.origin());
    std::uint64_t hi = std::min(f.end(), g.end());
    if (lo >= hi) throw std::domain_error("windows are disjoint");
    return {lo, hi};
}

}  // namespace

FunctionWindow product(const FunctionWindow& f, const FunctionWindow& g) {
    auto [lo, hi] = overlap(f, g);
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(hi - lo));
    for (std::uint64_t x = lo; x < hi; ++x) values.push_back(f.at(x) * g.at(x));
    return FunctionWindow{lo, std::move(values)};
}

ExactnessError::ExactnessError(std::string context, std::uint64_t x)
    : std::domain_error(context + ": odd numerator at x=" + std::to_string(x)),
      context_(std::move(context)),
      x_(x) {}

FunctionWindow bracket(const FunctionWindow& f, const FunctionWindow& g) {
    auto [lo, hi] = overlap(f, g);
    if (hi - lo < 2) throw std::domain_error("bracket: overlap shorter than 2");
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(hi - lo - 1));
    for (std::uint64_t x = lo; x + 1 < hi; ++x) {
        BigInt numerator = f.at(x + 1) * g.at(x) + f.at(x) * g.at(x + 1);
        if (numerator.is_odd()) throw ExactnessError{"bracket", x};
        values.push_back(numerator.half_exact());
    }
    return FunctionWindow{lo, std::move(values)};
}

std::string DivisibilityWitness::describe() const {
    if (n == 0)
        return "b(" + std::to_string(x) + ") = " + value.to_string() + " is even";
    return "2^" + std::to_string(n + 1) + " does not divide (D^" + std::to_string(n) +
           " b)(" + std::to_string(x) + ") = " + value.to_string();
}

std::string MembershipVerdict::describe() const {
    switch (status) {
        case MembershipStatus::ProvenMember:
            return "ProvenMember";
        case MembershipStatus::ProvenNonMember:
            return "ProvenNonMember: " + (witness ? witness->describe() : std::string{"?"});
        case MembershipStatus::WindowVerified:
            return "WindowVerified(n_max=" + std::to_string(n_max) +
                   ", x_max=" + std::to_string(x_max) + ")";
    }
    return {};
}

NonMemberError::NonMemberError(MembershipVerdict verdict)
    : std::domain_error("weight sequence rejected: " + verdict.describe()),
      verdict_(std::move(verdict)) {}

std::optional<DivisibilityWitness> check_window(const FunctionWindow& f, unsigned n_max,
                                                std::optional<std::uint64_t> x_max) {
    auto capped_end = [&](const FunctionWindow& w) {
        std::uint64_t end = w.end();
        if (x_max && *x_max + 1 < end) end = *x_max + 1;
        return end;
    };
    for (std::uint64_t x = f.origin(); x < capped_end(f); ++x) {
        if (f.at(x).is_even()) return DivisibilityWitness{0, x, f.at(x)};
    }
    FunctionWindow diff = f;
    for (unsigned n = 1; n <= n_max && diff.size() > 1; ++n) {
        diff = difference(diff, 1);
        for (std::uint64_t x = diff.origin(); x < capped_end(diff); ++x) {
            const BigInt& v = diff.at(x);
            if (v.is_zero()) continue;
            if (v.trailing_zero_bits() < n + 1) return DivisibilityWitness{n, x, v};
        }
    }
    return std::nullopt;
}

namespace {

// 2^m | p(x) for every integer x iff it divides p(0), ..., p(deg p): in the
// Newton expansion p(x) = sum_k (D^k p)(0) C(x,k) the binomials are integers
// and the forward differences at 0 are integer combinations of p(0..deg p).
std::optional<DivisibilityWitness> polynomial_witness(const std::vector<BigInt>& coeffs) {
    auto value_at = [](const std::vector<BigInt>& c, std::uint64_t x) {
        BigInt acc;
        for (std::size_t i = c.size(); i-- > 0;) {
            acc *= BigInt{x};
            acc += c[i];
        }
        return acc;
    };
    BigInt at_zero = coeffs.empty() ? BigInt{} : coeffs[0];
    if (at_zero.is_even()) return DivisibilityWitness{0, 0, at_zero};
    std::vector<BigInt> diff = coeffs;
    for (unsigned n = 1; !diff.empty(); ++n) {
        diff = difference_polynomial(diff);
        std::size_t degree = diff.empty() ? 0 : diff.size() - 1;
        for (std::uint64_t x = 0; x <= degree; ++x) {
            BigInt v = value_at(diff, x);
            if (v.is_zero()) continue;
            if (v.trailing_zero_bits() < n + 1) return DivisibilityWitness{n, x, v};
        }
    }
    return std::nullopt;
}

MembershipVerdict proven(std::optional<DivisibilityWitness> witness) {
    if (witness)
        return MembershipVerdict{MembershipStatus::ProvenNonMember, std::move(witness)};
    return MembershipVerdict{MembershipStatus::ProvenMember, std::nullopt};
}

}  // namespace

MembershipVerdict check_membership(const WeightSequence& b, unsigned n_max,
                                   std::uint64_t x_max) {
    struct Visitor {
        unsigned n_max;
        std::uint64_t x_max;

        MembershipVerdict operator()(const WeightSequence::Constant& c) const {
            if (c.value.is_even()) return proven(DivisibilityWitness{0, 0, c.value});
            return proven(std::nullopt);
        }
        MembershipVerdict operator()(const WeightSequence::Polynomial& p) const {
            return proven(polynomial_witness(p.coeffs));
        }
        MembershipVerdict operator()(const WeightSequence::OddSquares&) const {
            // (2x+1)^2 = 4x^2 + 4x + 1
            return proven(polynomial_witness({BigInt{1}, BigInt{4}, BigInt{4}}));
        }
        MembershipVerdict operator()(const WeightSequence::Geometric& g) const {
            // (D^n b)(x) = (q-1)^n q^x: member iff q is odd and 4 | q-1,
            // since then 2^(2n) | (q-1)^n covers every n >= 1
            BigInt step = g.ratio - BigInt{1};
            if (g.ratio.is_even() || (!step.is_zero() && step.trailing_zero_bits() < 2))
                return proven(DivisibilityWitness{1, 0, step});
            return proven(std::nullopt);
        }
        MembershipVerdict operator()(const WeightSequence::Table& t) const {
            std::uint64_t need = x_max + n_max + 1;
            if (t.values.size() < need)
                throw std::domain_error(
                    "check_membership: table stores " + std::to_string(t.values.size()) +
                    " values but the window n_max=" + std::to_string(n_max) +
                    ", x_max=" + std::to_string(x_max) + " needs " + std::to_string(need));
            FunctionWindow window{0, std::vector<BigInt>(t.values.begin(),
                                                         t.values.begin() + need)};
            if (auto witness = check_window(window, n_max, x_max))
                return MembershipVerdict{MembershipStatus::ProvenNonMember,
                                         std::move(witness)};
            return MembershipVerdict{MembershipStatus::WindowVerified, std::nullopt, n_max,
                                     x_max};
        }
    };
    return std::visit(Visitor{n_max, x_max}, b.variant());
}

MembershipVerdict check_membership_fitted(const WeightSequence& b, unsigned n_max,
                                          std::uint64_t x_max) {
    if (auto stored = b.table_size()) {
        std::uint64_t top = *stored - 1;  // tables are nonempty
        unsigned n_fit = static_cast<unsigned>(std::min<std::uint64_t>(n_max, top));
        std::uint64_t x_fit = std::min(x_max, top - n_fit);
        return check_membership(b, n_fit, x_fit);
    }
    return check_membership(b, n_max, x_max);
}

}  // namespace wcat
