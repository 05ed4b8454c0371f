#pragma once
// bigint.hpp - arbitrary-precision signed integer.
//
// Sign-magnitude layout: little-endian 64-bit limbs, no leading zero limbs,
// zero is the empty limb vector with a non-negative sign. Every operation is
// exact; division is provided only in the forms the library needs (division
// by a machine word, with an exactness-checked variant, and halving).

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace wcat {

class BigInt {
  public:
    BigInt() = default;
    template <std::integral T>
    BigInt(T value) {
        if constexpr (std::is_signed_v<T>)
            init_signed(static_cast<long long>(value));
        else
            init_unsigned(static_cast<unsigned long long>(value));
    }

    static BigInt from_string(std::string_view text);
    static BigInt power(const BigInt& base, unsigned long long exponent);
    static BigInt two_pow(unsigned long long exponent);

    std::string to_string() const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u); }
    bool is_even() const noexcept { return !is_odd(); }
    int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt abs() const;

    // Number of bits in |value|; 0 for zero.
    std::size_t bit_length() const noexcept;
    // Largest e with 2^e dividing |value|; value must be nonzero.
    std::size_t trailing_zero_bits() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    // |value| = q*d + r with 0 <= r < d; returns q with this value's sign
    // (quotient of the magnitude, not floor division).
    BigInt div_u64(std::uint64_t d, std::uint64_t* remainder = nullptr) const;
    // Division that must leave no remainder; throws std::domain_error otherwise.
    BigInt div_exact_u64(std::uint64_t d) const;
    // |value| mod d.
    std::uint64_t mod_u64(std::uint64_t d) const;
    // value/2 for even values; throws std::domain_error on odd input.
    BigInt half_exact() const;

    bool operator==(const BigInt& rhs) const noexcept;
    std::strong_ordering operator<=>(const BigInt& rhs) const noexcept;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

  private:
    std::vector<std::uint64_t> limbs_;
    bool negative_ = false;

    void init_signed(long long value);
    void init_unsigned(unsigned long long value);
    void trim() noexcept;
    static int compare_magnitude(const BigInt& a, const BigInt& b) noexcept;
    static void add_magnitude(std::vector<std::uint64_t>& acc,
                              const std::vector<std::uint64_t>& rhs);
    // requires |acc| >= |rhs|
    static void sub_magnitude(std::vector<std::uint64_t>& acc,
                              const std::vector<std::uint64_t>& rhs);
    void mul_u64_magnitude(std::uint64_t factor);
};

}  // namespace wcat
