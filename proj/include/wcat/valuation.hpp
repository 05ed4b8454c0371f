#pragma once
// valuation.hpp - p-adic valuations, digit sums, and the verification sweeps.
//
// The central identity: the largest power of two dividing the order-n
// Catalan number is s(n+1) - 1, where s is the binary digit sum, and the
// same holds for weighted Catalan numbers over admissible weight sequences.
// The zero-block analyzers compare maximal runs of C_n = 0 (mod p) against
// the closed-form block lengths (p^(xi_q(k) + [p=3] + 1) - 3) / 2 with
// q = (p+1)/2 for odd primes, and 2^k - 1 for p = 2.

#include <cstdint>
#include <vector>

#include "wcat/bigint.hpp"
#include "wcat/calculus.hpp"
#include "wcat/weights.hpp"

namespace wcat {

// largest e with base^e dividing |value|; value must be nonzero
std::uint64_t xi(const BigInt& value, std::uint64_t base = 2);
std::uint64_t xi_u64(std::uint64_t value, std::uint64_t base);

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base = 2);

struct ValuationReport {
    unsigned n = 0;
    std::uint64_t xi = 0;         // observed 2-adic valuation
    std::uint64_t predicted = 0;  // s(n+1) - 1
    bool match = false;

    bool operator==(const ValuationReport&) const = default;
};

// xi(C_n) against s(n+1) - 1 for 0 <= n <= n_max
std::vector<ValuationReport> verify_classical(unsigned n_max);

// xi(C_n^b) against s(n+1) - 1 for 0 <= n <= n_max. Throws NonMemberError
// when the membership checker proves b inadmissible (window-verified tables
// are allowed through and reported honestly).
std::vector<ValuationReport> verify_weighted(unsigned n_max, const WeightSequence& b);

struct ZeroBlockReport {
    unsigned p = 0;
    unsigned k = 0;                // 1-based block index
    std::uint64_t observed = 0;    // run length, possibly cut off at n_max
    std::uint64_t predicted = 0;
    bool match = false;            // observed == predicted, for complete blocks
    bool complete = false;         // the run closed before the n_max horizon

    bool operator==(const ZeroBlockReport&) const = default;
};

// maximal runs of C_n = 0 (mod p) for an odd prime p, blocks 1 .. k_max,
// scanning n <= n_max; a run still open at the horizon is reported
// incomplete and never compared
std::vector<ZeroBlockReport> zero_blocks(unsigned p, std::uint64_t n_max, unsigned k_max);
// the p = 2 analogue: block k has predicted length 2^k - 1
std::vector<ZeroBlockReport> zero_blocks_mod2(std::uint64_t n_max, unsigned k_max);

bool is_odd_prime(std::uint64_t p);

}  // namespace wcat
