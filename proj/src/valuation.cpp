#include "wcat/valuation.hpp"

#include <stdexcept>

#include "wcat/catalan.hpp"

namespace wcat {

std::uint64_t xi(const BigInt& value, std::uint64_t base) {
    if (value.is_zero()) throw std::domain_error("xi: valuation of zero is infinite");
    if (base < 2) throw std::domain_error("xi: base must be at least 2");
    if (base == 2) return value.trailing_zero_bits();
    BigInt cur = value.abs();
    std::uint64_t e = 0;
    while (true) {
        std::uint64_t rem = 0;
        BigInt next = cur.div_u64(base, &rem);
        if (rem != 0) return e;
        cur = std::move(next);
        ++e;
    }
}

std::uint64_t xi_u64(std::uint64_t value, std::uint64_t base) {
    if (value == 0) throw std::domain_error("xi: valuation of zero is infinite");
    if (base < 2) throw std::domain_error("xi: base must be at least 2");
    std::uint64_t e = 0;
    while (value % base == 0) {
        value /= base;
        ++e;
    }
    return e;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw std::domain_error("digit_sum: base must be at least 2");
    std::uint64_t sum = 0;
    while (n) {
        sum += n % base;
        n /= base;
    }
    return sum;
}

namespace {

ValuationReport report_for(unsigned n, const BigInt& value) {
    std::uint64_t observed = xi(value);
    std::uint64_t predicted = digit_sum(n + 1) - 1;
    return ValuationReport{n, observed, predicted, observed == predicted};
}

}  // namespace

std::vector<ValuationReport> verify_classical(unsigned n_max) {
    std::vector<ValuationReport> out;
    out.reserve(n_max + 1);
    BigInt c{1};
    out.push_back(report_for(0, c));
    for (unsigned n = 0; n < n_max; ++n) {
        c *= BigInt{2 * (2ull * n + 1)};
        c = c.div_exact_u64(n + 2);
        out.push_back(report_for(n + 1, c));
    }
    return out;
}

std::vector<ValuationReport> verify_weighted(unsigned n_max, const WeightSequence& b) {
    MembershipVerdict verdict = check_membership_fitted(b);
    if (verdict.rejected()) throw NonMemberError{verdict};

    std::vector<BigInt> values = weighted_catalan_all(n_max, b);
    std::vector<ValuationReport> out;
    out.reserve(values.size());
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(report_for(n, values[n]));
    return out;
}

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

// walk residues of C_n and cut maximal zero runs into reports
class BlockScanner {
  public:
    BlockScanner(unsigned p, unsigned k_max,
                 std::function<std::uint64_t(unsigned k)> predicted_length)
        : p_(p), k_max_(k_max), predicted_(std::move(predicted_length)) {}

    // feed residues for n = 0, 1, ...; returns false once k_max blocks closed
    bool feed(bool is_zero) {
        if (is_zero) {
            ++run_;
            return true;
        }
        if (run_ > 0) close_block(true);
        return k_ <= k_max_;
    }

    std::vector<ZeroBlockReport> finish() {
        if (run_ > 0) close_block(false);
        return std::move(reports_);
    }

  private:
    void close_block(bool complete) {
        if (k_ <= k_max_) {
            std::uint64_t predicted = predicted_(k_);
            reports_.push_back(ZeroBlockReport{p_, k_, run_, predicted,
                                               complete && run_ == predicted, complete});
        }
        ++k_;
        run_ = 0;
    }

    unsigned p_;
    unsigned k_max_;
    std::function<std::uint64_t(unsigned)> predicted_;
    unsigned k_ = 1;
    std::uint64_t run_ = 0;
    std::vector<ZeroBlockReport> reports_;
};

template <typename ResidueIsZero>
std::vector<ZeroBlockReport> scan_blocks(unsigned p, std::uint64_t n_max, unsigned k_max,
                                         std::function<std::uint64_t(unsigned)> predicted,
                                         ResidueIsZero&& is_zero) {
    BlockScanner scanner{p, k_max, std::move(predicted)};
    BigInt c{1};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (n > 0) {
            c *= BigInt{2 * (2 * (n - 1) + 1)};
            c = c.div_exact_u64(n + 1);
        }
        if (!scanner.feed(is_zero(c))) break;
    }
    return scanner.finish();
}

}  // namespace

std::vector<ZeroBlockReport> zero_blocks(unsigned p, std::uint64_t n_max, unsigned k_max) {
    if (!is_odd_prime(p)) throw std::domain_error("zero_blocks: p must be an odd prime");
    // block k of zeros of C mod p has length (p^(xi_q(k) + [p=3] + 1) - 3)/2
    // with q = (p+1)/2
    const std::uint64_t q = (p + 1) / 2;
    const std::uint64_t delta = p == 3 ? 1 : 0;
    auto predicted = [p, q, delta](unsigned k) {
        return (pow_u64(p, xi_u64(k, q) + delta + 1) - 3) / 2;
    };
    return scan_blocks(p, n_max, k_max, predicted,
                       [p](const BigInt& c) { return c.mod_u64(p) == 0; });
}

std::vector<ZeroBlockReport> zero_blocks_mod2(std::uint64_t n_max, unsigned k_max) {
    auto predicted = [](unsigned k) { return (std::uint64_t{1} << k) - 1; };
    return scan_blocks(2, n_max, k_max, predicted,
                       [](const BigInt& c) { return c.is_even(); });
}

}  // namespace wcat
