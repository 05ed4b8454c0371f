#include "wcat/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace wcat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDecChunkBase = 10'000'000'000'000'000'000ull;  // 10^19
constexpr int kDecChunkDigits = 19;

}  // namespace

void BigInt::init_signed(long long value) {
    if (value == 0) return;
    negative_ = value < 0;
    // -(value+1)+1 avoids overflow at LLONG_MIN
    u64 mag = negative_ ? static_cast<u64>(-(value + 1)) + 1u : static_cast<u64>(value);
    limbs_.push_back(mag);
}

void BigInt::init_unsigned(unsigned long long value) {
    if (value != 0) limbs_.push_back(value);
}

void BigInt::trim() noexcept {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) noexcept {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitude(std::vector<u64>& acc, const std::vector<u64>& rhs) {
    if (acc.size() < rhs.size()) acc.resize(rhs.size(), 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < rhs.size(); ++i) {
        u64 sum = acc[i] + carry;
        carry = sum < carry;
        sum += rhs[i];
        carry += sum < rhs[i];
        acc[i] = sum;
    }
    for (; carry && i < acc.size(); ++i) {
        acc[i] += 1;
        carry = acc[i] == 0;
    }
    if (carry) acc.push_back(1);
}

void BigInt::sub_magnitude(std::vector<u64>& acc, const std::vector<u64>& rhs) {
    assert(acc.size() >= rhs.size());
    u64 borrow = 0;
    std::size_t i = 0;
    for (; i < rhs.size(); ++i) {
        u64 sub = rhs[i] + borrow;
        borrow = sub < borrow;
        borrow += acc[i] < sub;
        acc[i] -= sub;
    }
    for (; borrow && i < acc.size(); ++i) {
        borrow = acc[i] == 0;
        acc[i] -= 1;
    }
    assert(borrow == 0);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_magnitude(limbs_, rhs.limbs_);
        return *this;
    }
    int cmp = compare_magnitude(*this, rhs);
    if (cmp == 0) {
        limbs_.clear();
        negative_ = false;
    } else if (cmp > 0) {
        sub_magnitude(limbs_, rhs.limbs_);
        trim();
    } else {
        std::vector<u64> result = rhs.limbs_;
        sub_magnitude(result, limbs_);
        limbs_ = std::move(result);
        negative_ = rhs.negative_;
        trim();
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    if (&rhs == this) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    // a - b == a + (-b) without materializing -b
    negative_ = !negative_;
    *this += rhs;
    if (!is_zero()) negative_ = !negative_;
    return *this;
}

void BigInt::mul_u64_magnitude(u64 factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        negative_ = false;
        return;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 prod = static_cast<u128>(limb) * factor + carry;
        limb = static_cast<u64>(prod);
        carry = static_cast<u64>(prod >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return BigInt{};
    if (rhs.limbs_.size() == 1) {
        BigInt out = lhs;
        out.mul_u64_magnitude(rhs.limbs_[0]);
        out.negative_ = lhs.negative_ != rhs.negative_;
        return out;
    }
    if (lhs.limbs_.size() == 1) return rhs * lhs;

    // schoolbook
    BigInt out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        u64 carry = 0;
        const u64 a = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(a) * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        out.limbs_[i + rhs.limbs_.size()] = carry;
    }
    out.trim();
    out.negative_ = lhs.negative_ != rhs.negative_;
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (rhs.limbs_.size() == 1) {
        mul_u64_magnitude(rhs.limbs_[0]);
        if (!is_zero()) negative_ = negative_ != rhs.negative_;
        return *this;
    }
    *this = *this * rhs;
    return *this;
}

BigInt BigInt::div_u64(u64 d, u64* remainder) const {
    if (d == 0) throw std::domain_error("BigInt: division by zero");
    BigInt out;
    out.limbs_.assign(limbs_.size(), 0);
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
        out.limbs_[i] = static_cast<u64>(cur / d);
        rem = static_cast<u64>(cur % d);
    }
    out.trim();
    out.negative_ = negative_ && !out.is_zero();
    if (remainder) *remainder = rem;
    return out;
}

BigInt BigInt::div_exact_u64(u64 d) const {
    u64 rem = 0;
    BigInt out = div_u64(d, &rem);
    if (rem != 0) throw std::domain_error("BigInt: inexact division");
    return out;
}

std::uint64_t BigInt::mod_u64(u64 d) const {
    if (d == 0) throw std::domain_error("BigInt: division by zero");
    u64 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(rem) << 64) | limbs_[i];
        rem = static_cast<u64>(cur % d);
    }
    return rem;
}

BigInt BigInt::half_exact() const {
    if (is_odd()) throw std::domain_error("BigInt: halving an odd value");
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        out.limbs_[i] = (limbs_[i] >> 1) | (carry << 63);
        carry = limbs_[i] & 1u;
    }
    out.trim();
    return out;
}

std::size_t BigInt::bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    u64 top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::size_t BigInt::trailing_zero_bits() const {
    if (is_zero()) throw std::domain_error("BigInt: trailing zeros of zero");
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return i * 64 + static_cast<std::size_t>(__builtin_ctzll(limbs_[i]));
}

bool BigInt::operator==(const BigInt& rhs) const noexcept {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const noexcept {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitude(*this, rhs);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - pos);
        u64 chunk = 0;
        u64 scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            char c = text[pos + i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: invalid digit in numeral");
            chunk = chunk * 10 + static_cast<u64>(c - '0');
            scale *= 10;
        }
        out.mul_u64_magnitude(take == kDecChunkDigits ? kDecChunkBase : scale);
        out += BigInt{chunk};
        pos += take;
    }
    out.negative_ = negative && !out.is_zero();
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt cur = abs();
    while (!cur.is_zero()) {
        u64 rem = 0;
        cur = cur.div_u64(kDecChunkBase, &rem);
        if (cur.is_zero()) {
            digits.insert(0, std::to_string(rem));
        } else {
            std::string chunk = std::to_string(rem);
            digits.insert(0, std::string(kDecChunkDigits - chunk.size(), '0') + chunk);
        }
    }
    return negative_ ? "-" + digits : digits;
}

BigInt BigInt::power(const BigInt& base, unsigned long long exponent) {
    BigInt result{1};
    BigInt acc = base;
    while (exponent) {
        if (exponent & 1u) result *= acc;
        exponent >>= 1;
        if (exponent) acc = acc * acc;
    }
    return result;
}

BigInt BigInt::two_pow(unsigned long long exponent) {
    BigInt out;
    out.limbs_.assign(exponent / 64 + 1, 0);
    out.limbs_.back() = u64{1} << (exponent % 64);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace wcat
