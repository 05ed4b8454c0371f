#pragma once
// weights.hpp - exactly evaluable integer weight sequences b(0), b(1), ...
//
// Supported families: constant c, integer polynomial in x, geometric q^x,
// odd squares (2x+1)^2, and a finite table. A table is evaluable only on its
// stored range; reading past it is a hard error, never an implicit extension.
//
// Text grammar (shared by the CLI and all file formats):
//   const:<c> | poly:<c0>,<c1>,... | geom:<q> | oddsq | table:<v0>,<v1>,...

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wcat/bigint.hpp"

namespace wcat {

class WeightSequence {
  public:
    struct Constant {
        BigInt value;
    };
    struct Polynomial {
        std::vector<BigInt> coeffs;  // monomial basis, no trailing zeros
    };
    struct Geometric {
        BigInt ratio;
    };
    struct OddSquares {};
    struct Table {
        std::vector<BigInt> values;  // values at x = 0, 1, ...
    };
    using Variant = std::variant<Constant, Polynomial, Geometric, OddSquares, Table>;

    static WeightSequence constant(BigInt c);
    // trailing zero coefficients are stripped; the zero polynomial is kept
    // as an empty coefficient list
    static WeightSequence polynomial(std::vector<BigInt> coeffs);
    static WeightSequence geometric(BigInt q);
    static WeightSequence odd_squares();
    static WeightSequence table(std::vector<BigInt> values);

    static WeightSequence parse(std::string_view spec);
    std::string to_spec() const;

    BigInt evaluate(std::uint64_t x) const;

    const Variant& variant() const noexcept { return variant_; }
    bool is_constant_one() const;
    // stored table length, or nullopt for unbounded families
    std::optional<std::size_t> table_size() const;

  private:
    explicit WeightSequence(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

// p(x) as coefficients of p(x+1): the binomial (Pascal) transform.
std::vector<BigInt> shift_polynomial(const std::vector<BigInt>& coeffs);
// coefficients of p(x+1) - p(x); drops the degree by one
std::vector<BigInt> difference_polynomial(const std::vector<BigInt>& coeffs);

}  // namespace wcat
