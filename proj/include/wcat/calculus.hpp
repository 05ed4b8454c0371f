#pragma once
// calculus.hpp - windowed difference calculus on integer functions.
//
// A FunctionWindow holds exact values f(origin), f(origin+1), ... of some
// function f on the nonnegative integers. The operators follow the usual
// conventions: (Sf)(x) = f(x+1), (Df)(x) = f(x+1) - f(x), pointwise product,
// and the symmetric half product <f,g>(x) = (f(x+1)g(x) + f(x)g(x+1)) / 2.
//
// check_membership decides whether a weight sequence b lies in the class of
// admissible weights: b(0) odd and 2^(n+1) | (D^n b)(x) for all n >= 1 and
// all x >= 0. Under these hypotheses the 2-adic valuation of the weighted
// Catalan numbers matches the classical one. The verdict is a proof for
// polynomial and geometric families and a windowed check for tables.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcat/bigint.hpp"
#include "wcat/weights.hpp"

namespace wcat {

class FunctionWindow {
  public:
    FunctionWindow(std::uint64_t origin, std::vector<BigInt> values);

    std::uint64_t origin() const noexcept { return origin_; }
    std::size_t size() const noexcept { return values_.size(); }
    // one past the last covered point
    std::uint64_t end() const noexcept { return origin_ + values_.size(); }

    // value at the absolute point x; x must lie inside the window
    const BigInt& at(std::uint64_t x) const;
    const BigInt& operator[](std::size_t index) const { return values_[index]; }
    const std::vector<BigInt>& values() const noexcept { return values_; }

    bool operator==(const FunctionWindow&) const = default;

  private:
    std::uint64_t origin_;
    std::vector<BigInt> values_;
};

// Materialize b on [origin, origin + length).
FunctionWindow window_of(const WeightSequence& b, std::uint64_t origin, std::size_t length);

// View advanced one point right: drops f(origin). The same value list is the
// window of Sf at the old origin.
FunctionWindow shift(const FunctionWindow& f);
// n-fold forward difference; each application shrinks the window by one.
FunctionWindow difference(const FunctionWindow& f, unsigned n = 1);
// Pointwise product on the overlap of the two windows.
FunctionWindow product(const FunctionWindow& f, const FunctionWindow& g);

// Thrown when an exact halving meets an odd numerator (the operands are not
// both admissible weights).
class ExactnessError : public std::domain_error {
  public:
    ExactnessError(std::string context, std::uint64_t x);
    std::uint64_t x() const noexcept { return x_; }
    const std::string& context() const noexcept { return context_; }

  private:
    std::string context_;
    std::uint64_t x_;
};

// <f,g>(x) = (f(x+1)g(x) + f(x)g(x+1)) / 2 on the overlap, one point shorter.
// Throws ExactnessError if the numerator is odd anywhere.
FunctionWindow bracket(const FunctionWindow& f, const FunctionWindow& g);

enum class MembershipStatus { ProvenMember, ProvenNonMember, WindowVerified };

// A failed check, recomputable from scratch: n = 0 means b(x) is even where
// it must be odd; n >= 1 means 2^(n+1) does not divide (D^n b)(x) = value.
struct DivisibilityWitness {
    unsigned n = 0;
    std::uint64_t x = 0;
    BigInt value;

    std::string describe() const;
    bool operator==(const DivisibilityWitness&) const = default;
};

struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::WindowVerified;
    std::optional<DivisibilityWitness> witness;  // always present for ProvenNonMember
    // checked ranges, meaningful for WindowVerified
    unsigned n_max = 0;
    std::uint64_t x_max = 0;

    bool rejected() const noexcept { return status == MembershipStatus::ProvenNonMember; }
    std::string describe() const;
};

// Decides membership exactly for constant, polynomial, odd-squares and
// geometric weights; verifies tables on the window n <= n_max, x <= x_max.
// A table must store at least x_max + n_max + 1 values.
MembershipVerdict check_membership(const WeightSequence& b, unsigned n_max = 8,
                                   std::uint64_t x_max = 64);

// check_membership with the window clipped to what a table actually stores;
// identical to check_membership for the unbounded families.
MembershipVerdict check_membership_fitted(const WeightSequence& b, unsigned n_max = 8,
                                          std::uint64_t x_max = 64);

// Windowed admissibility of an arbitrary value window: all values odd, and
// 2^(n+1) | (D^n f)(x) for 1 <= n <= n_max wherever the window reaches
// (x <= x_max when given). Returns the first violation found.
std::optional<DivisibilityWitness> check_window(
    const FunctionWindow& f, unsigned n_max,
    std::optional<std::uint64_t> x_max = std::nullopt);

// Thrown when an operation requires an admissible weight sequence but the
// checker proves b is not one.
class NonMemberError : public std::domain_error {
  public:
    explicit NonMemberError(MembershipVerdict verdict);
    const MembershipVerdict& verdict() const noexcept { return verdict_; }

  private:
    MembershipVerdict verdict_;
};

}  // namespace wcat
