#include "wcat/weights.hpp"

#include <stdexcept>

namespace wcat {

namespace {

std::vector<BigInt> parse_int_list(std::string_view body, std::string_view what) {
    if (body.empty())
        throw std::invalid_argument("weight grammar: empty " + std::string(what) + " list");
    std::vector<BigInt> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string_view item =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        out.push_back(BigInt::from_string(item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_int_list(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].to_string();
    }
    return out;
}

void strip_trailing_zeros(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

WeightSequence WeightSequence::constant(BigInt c) {
    return WeightSequence{Constant{std::move(c)}};
}

WeightSequence WeightSequence::polynomial(std::vector<BigInt> coeffs) {
    strip_trailing_zeros(coeffs);
    return WeightSequence{Polynomial{std::move(coeffs)}};
}

WeightSequence WeightSequence::geometric(BigInt q) {
    return WeightSequence{Geometric{std::move(q)}};
}

WeightSequence WeightSequence::odd_squares() {
    return WeightSequence{OddSquares{}};
}

WeightSequence WeightSequence::table(std::vector<BigInt> values) {
    if (values.empty()) throw std::invalid_argument("weight table must be nonempty");
    return WeightSequence{Table{std::move(values)}};
}

WeightSequence WeightSequence::parse(std::string_view spec) {
    if (spec == "oddsq") return odd_squares();
    std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("weight grammar: expected "
                                    "const:<c> | poly:<c0>,<c1>,... | geom:<q> | oddsq | "
                                    "table:<v0>,<v1>,...");
    std::string_view kind = spec.substr(0, colon);
    std::string_view body = spec.substr(colon + 1);
    if (kind == "const") return constant(BigInt::from_string(body));
    if (kind == "geom") return geometric(BigInt::from_string(body));
    if (kind == "poly") return polynomial(parse_int_list(body, "coefficient"));
    if (kind == "table") return table(parse_int_list(body, "value"));
    throw std::invalid_argument("weight grammar: unknown family '" + std::string(kind) + "'");
}

std::string WeightSequence::to_spec() const {
    struct Visitor {
        std::string operator()(const Constant& c) const { return "const:" + c.value.to_string(); }
        std::string operator()(const Polynomial& p) const {
            return "poly:" + (p.coeffs.empty() ? "0" : format_int_list(p.coeffs));
        }
        std::string operator()(const Geometric& g) const { return "geom:" + g.ratio.to_string(); }
        std::string operator()(const OddSquares&) const { return "oddsq"; }
        std::string operator()(const Table& t) const { return "table:" + format_int_list(t.values); }
    };
    return std::visit(Visitor{}, variant_);
}

BigInt WeightSequence::evaluate(std::uint64_t x) const {
    struct Visitor {
        std::uint64_t x;
        BigInt operator()(const Constant& c) const { return c.value; }
        BigInt operator()(const Polynomial& p) const {
            BigInt acc;
            BigInt big_x{x};
            for (std::size_t i = p.coeffs.size(); i-- > 0;) {
                acc *= big_x;
                acc += p.coeffs[i];
            }
            return acc;
        }
        BigInt operator()(const Geometric& g) const { return BigInt::power(g.ratio, x); }
        BigInt operator()(const OddSquares&) const {
            BigInt m = BigInt{x} * BigInt{2} + BigInt{1};
            return m * m;
        }
        BigInt operator()(const Table& t) const {
            if (x >= t.values.size())
                throw std::out_of_range("weight table: access at x=" + std::to_string(x) +
                                        " is outside the stored window of length " +
                                        std::to_string(t.values.size()));
            return t.values[static_cast<std::size_t>(x)];
        }
    };
    return std::visit(Visitor{x}, variant_);
}

bool WeightSequence::is_constant_one() const {
    const BigInt one{1};
    if (const auto* c = std::get_if<Constant>(&variant_)) return c->value == one;
    if (const auto* g = std::get_if<Geometric>(&variant_)) return g->ratio == one;
    if (const auto* p = std::get_if<Polynomial>(&variant_))
        return p->coeffs.size() == 1 && p->coeffs[0] == one;
    return false;
}

std::optional<std::size_t> WeightSequence::table_size() const {
    if (const auto* t = std::get_if<Table>(&variant_)) return t->values.size();
    return std::nullopt;
}

std::vector<BigInt> shift_polynomial(const std::vector<BigInt>& coeffs) {
    // p(x+1) = sum_i c_i (x+1)^i; expand with one Pascal row per coefficient
    std::vector<BigInt> out(coeffs.size());
    std::vector<BigInt> binom{BigInt{1}};  // row of C(i, j)
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) out[j] += coeffs[i] * binom[j];
        binom.push_back(BigInt{1});
        for (std::size_t j = i; j >= 1; --j) binom[j] += binom[j - 1];
    }
    return out;
}

std::vector<BigInt> difference_polynomial(const std::vector<BigInt>& coeffs) {
    std::vector<BigInt> out = shift_polynomial(coeffs);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] -= coeffs[i];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

}  // namespace wcat
