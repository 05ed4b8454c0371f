#include "wcat/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wcat/calculus.hpp"
#include "wcat/catalan.hpp"
#include "wcat/reports.hpp"
#include "wcat/trees.hpp"
#include "wcat/valuation.hpp"
#include "wcat/weights.hpp"

namespace wcat::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct OutputSpec {
    std::string format = "table";
    std::string path;  // empty = standard output
};

int emit(const std::string& payload, const OutputSpec& output, std::ostream& out,
         std::ostream& err) {
    if (output.path.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(output.path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << output.path << "'\n";
        return kExitError;
    }
    file << payload;
    return file.good() ? kExitOk : kExitError;
}

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) widths[c] = headers[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << std::setw(static_cast<int>(widths[c])) << std::right << cells[c];
        }
        os << '\n';
    };
    line(headers);
    for (const auto& row : rows) line(row);
    return os.str();
}

const char* bool_text(bool value) {
    return value ? "true" : "false";
}

std::string json_payload(const json& doc) {
    return doc.dump(2) + "\n";
}

// ---- seq ----

struct SeqOptions {
    std::string weight;
    unsigned n_max = 10;
    std::string method = "dp";
    unsigned brute_bound = kBruteForceBound;
    OutputSpec output;
};

int run_seq(const SeqOptions& opt, std::ostream& out, std::ostream& err) {
    WeightSequence b = WeightSequence::parse(opt.weight);
    const bool all = opt.method == "all";

    std::vector<BigInt> dp, series, brute;
    if (all || opt.method == "dp")
        dp = b.is_constant_one() && !all ? catalan_sequence(opt.n_max)
                                         : weighted_catalan_all(opt.n_max, b);
    if (all || opt.method == "series") series = weighted_catalan_series(opt.n_max, b);
    if (all || opt.method == "brute") {
        brute.reserve(opt.n_max + 1);
        for (unsigned n = 0; n <= opt.n_max; ++n)
            brute.push_back(weighted_catalan_bruteforce(n, b, opt.brute_bound).value);
    }

    bool all_match = true;
    std::vector<bool> matches(opt.n_max + 1, true);
    if (all) {
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            matches[n] = dp[n] == series[n] && dp[n] == brute[n];
            all_match = all_match && matches[n];
        }
    }
    const std::vector<BigInt>& column = all || opt.method == "dp"
                                            ? dp
                                            : (opt.method == "series" ? series : brute);

    std::string payload;
    if (opt.output.format == "json") {
        json doc;
        doc["command"] = "seq";
        doc["weight"] = b.to_spec();
        doc["n_max"] = opt.n_max;
        doc["method"] = opt.method;
        json rows = json::array();
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            if (all) {
                rows.push_back(json{{"n", n},
                                    {"dp", dp[n].to_string()},
                                    {"series", series[n].to_string()},
                                    {"brute", brute[n].to_string()},
                                    {"match", static_cast<bool>(matches[n])}});
            } else {
                rows.push_back(json{{"n", n}, {"value", column[n].to_string()}});
            }
        }
        doc["rows"] = std::move(rows);
        if (all) doc["all_match"] = all_match;
        payload = json_payload(doc);
    } else if (opt.output.format == "csv") {
        payload = all ? "n,dp,series,brute,match\n" : "n,value\n";
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            payload += std::to_string(n) + ',';
            if (all) {
                payload += dp[n].to_string() + ',' + series[n].to_string() + ',' +
                           brute[n].to_string() + ',' + bool_text(matches[n]);
            } else {
                payload += column[n].to_string();
            }
            payload += '\n';
        }
    } else {
        std::vector<std::string> headers =
            all ? std::vector<std::string>{"n", "dp", "series", "brute", "match"}
                : std::vector<std::string>{"n", "value"};
        std::vector<std::vector<std::string>> rows;
        for (unsigned n = 0; n <= opt.n_max; ++n) {
            if (all) {
                rows.push_back({std::to_string(n), dp[n].to_string(), series[n].to_string(),
                                brute[n].to_string(), bool_text(matches[n])});
            } else {
                rows.push_back({std::to_string(n), column[n].to_string()});
            }
        }
        payload = render_table(headers, rows);
    }

    int emitted = emit(payload, opt.output, out, err);
    if (emitted != kExitOk) return emitted;
    return all_match ? kExitOk : kExitMismatch;
}

// ---- verify ----

struct VerifyOptions {
    std::string weight;
    unsigned n_max = 100;
    unsigned window_n = 8;
    std::uint64_t window_x = 64;
    bool window_given = false;
    OutputSpec output;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    WeightSequence b = WeightSequence::parse(opt.weight);
    MembershipVerdict verdict = opt.window_given
                                    ? check_membership(b, opt.window_n, opt.window_x)
                                    : check_membership_fitted(b, opt.window_n, opt.window_x);

    std::vector<ValuationReport> rows;
    if (!verdict.rejected()) {
        // const:1 is the classical sweep; the product recurrence scales far
        // beyond the lattice DP
        rows = b.is_constant_one() ? verify_classical(opt.n_max)
                                   : verify_weighted(opt.n_max, b);
    }
    bool all_match = !verdict.rejected();
    for (const auto& row : rows) all_match = all_match && row.match;

    std::string payload;
    if (opt.output.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["weight"] = b.to_spec();
        doc["n_max"] = opt.n_max;
        doc["membership"] = to_json(verdict);
        doc["rows"] = to_json(rows);
        doc["all_match"] = all_match;
        payload = json_payload(doc);
    } else if (opt.output.format == "csv") {
        payload = "# membership: " + verdict.describe() + "\n" + to_csv(rows);
    } else {
        payload = "membership: " + verdict.describe() + "\n";
        if (!rows.empty()) {
            std::vector<std::vector<std::string>> cells;
            for (const auto& row : rows)
                cells.push_back({std::to_string(row.n), std::to_string(row.xi),
                                 std::to_string(row.predicted), bool_text(row.match)});
            payload += render_table({"n", "xi", "predicted", "match"}, cells);
        }
        payload += std::string("all match: ") + bool_text(all_match) + "\n";
    }

    int emitted = emit(payload, opt.output, out, err);
    if (emitted != kExitOk) return emitted;
    return all_match ? kExitOk : kExitMismatch;
}

// ---- orbits ----

struct OrbitsOptions {
    std::string weight;
    unsigned n = 6;
    unsigned orbit_bound = kShapeEnumerationBound;
    OutputSpec output;
};

int run_orbits(const OrbitsOptions& opt, std::ostream& out, std::ostream& err) {
    WeightSequence b = WeightSequence::parse(opt.weight);
    MembershipVerdict verdict = check_membership_fitted(b);
    if (verdict.rejected()) {
        err << "error: " << verdict.describe() << "\n";
        return kExitMismatch;
    }

    OrbitCensus census = orbit_census(opt.n, b, 1, opt.orbit_bound);
    BigInt orbit_total;
    bool all_reduced_odd = true;
    for (const auto& record : census.records) {
        orbit_total += record.size * record.reduced[0];
        all_reduced_odd = all_reduced_odd && record.reduced[0].is_odd();
    }
    BigInt dp = weighted_catalan_dp(opt.n, b).value;
    bool decomposition_match = orbit_total == dp;

    unsigned s = static_cast<unsigned>(digit_sum(opt.n + 1) - 1);
    std::uint64_t expected_minimal = double_factorial_odd(s);
    bool minimal_match =
        census.minimal_exponent == s && census.minimal_count == expected_minimal;
    bool all_match = decomposition_match && minimal_match && all_reduced_odd;

    std::string payload;
    if (opt.output.format == "json") {
        json doc;
        doc["command"] = "orbits";
        doc["weight"] = b.to_spec();
        doc["n"] = opt.n;
        doc["records"] = census_records_to_json(census);
        json histogram = json::array();
        for (const auto& [t, count] : census.histogram)
            histogram.push_back(json{{"t", t}, {"count", count}});
        doc["histogram"] = std::move(histogram);
        doc["minimal"] = json{{"exponent", census.minimal_exponent},
                              {"count", census.minimal_count},
                              {"expected_exponent", s},
                              {"expected_count", expected_minimal},
                              {"match", minimal_match}};
        doc["decomposition"] = json{{"orbit_total", orbit_total.to_string()},
                                    {"dp", dp.to_string()},
                                    {"match", decomposition_match}};
        doc["all_reduced_odd"] = all_reduced_odd;
        payload = json_payload(doc);
    } else if (opt.output.format == "csv") {
        payload = "# weight: " + b.to_spec() + "\n";
        payload += "# minimal: t=" + std::to_string(census.minimal_exponent) +
                   " count=" + std::to_string(census.minimal_count) +
                   " expected=" + std::to_string(expected_minimal) + " match=" +
                   bool_text(minimal_match) + "\n";
        payload += "# decomposition: total=" + orbit_total.to_string() +
                   " dp=" + dp.to_string() + " match=" + bool_text(decomposition_match) + "\n";
        payload += census_to_csv(census);
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& record : census.records)
            cells.push_back({record.shape.to_parens(), std::to_string(record.size_exponent),
                             record.reduced[0].to_string()});
        payload = render_table({"shape", "t", "r0"}, cells);
        payload += "histogram:";
        for (const auto& [t, count] : census.histogram)
            payload += " 2^" + std::to_string(t) + " x" + std::to_string(count);
        payload += "\norbit sizes sum: " + census.total_size.to_string() + "\n";
        payload += "minimal orbits: size 2^" + std::to_string(census.minimal_exponent) +
                   ", count " + std::to_string(census.minimal_count) + " (expected 2^" +
                   std::to_string(s) + " x" + std::to_string(expected_minimal) +
                   ", match " + bool_text(minimal_match) + ")\n";
        payload += "decomposition: sum(size * r0) = " + orbit_total.to_string() +
                   ", dp = " + dp.to_string() + ", match " + bool_text(decomposition_match) +
                   "\n";
    }

    int emitted = emit(payload, opt.output, out, err);
    if (emitted != kExitOk) return emitted;
    return all_match ? kExitOk : kExitMismatch;
}

// ---- blocks ----

struct BlocksOptions {
    std::uint64_t p = 3;
    std::uint64_t n_max = 1000;
    unsigned k_max = 5;
    OutputSpec output;
};

int run_blocks(const BlocksOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<ZeroBlockReport> rows;
    if (opt.p == 2) {
        rows = zero_blocks_mod2(opt.n_max, opt.k_max);
    } else if (is_odd_prime(opt.p)) {
        rows = zero_blocks(static_cast<unsigned>(opt.p), opt.n_max, opt.k_max);
    } else {
        err << "error: p must be 2 or an odd prime, got " << opt.p << "\n";
        return kExitError;
    }

    bool all_match = true;
    for (const auto& row : rows)
        if (row.complete) all_match = all_match && row.match;

    std::string payload;
    if (opt.output.format == "json") {
        json doc;
        doc["command"] = "blocks";
        doc["p"] = opt.p;
        doc["n_max"] = opt.n_max;
        doc["k_max"] = opt.k_max;
        doc["rows"] = to_json(rows);
        doc["all_match"] = all_match;
        payload = json_payload(doc);
    } else if (opt.output.format == "csv") {
        payload = to_csv(rows);
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : rows)
            cells.push_back({std::to_string(row.p), std::to_string(row.k),
                             std::to_string(row.observed), std::to_string(row.predicted),
                             bool_text(row.match), bool_text(row.complete)});
        payload = render_table({"p", "k", "observed", "predicted", "match", "complete"}, cells);
        payload += std::string("all complete blocks match: ") + bool_text(all_match) + "\n";
    }

    int emitted = emit(payload, opt.output, out, err);
    if (emitted != kExitOk) return emitted;
    return all_match ? kExitOk : kExitMismatch;
}

void add_output_options(CLI::App* cmd, OutputSpec& output) {
    cmd->add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", output.path, "write output to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact weighted Catalan numbers, 2-adic valuations, and orbit censuses"};
    app.require_subcommand(1);

    SeqOptions seq;
    CLI::App* seq_cmd = app.add_subcommand("seq", "compute C_n^b for n = 0..n_max");
    seq_cmd->add_option("--weight", seq.weight, "weight sequence (weight grammar)")->required();
    seq_cmd->add_option("--n-max", seq.n_max, "largest order")->capture_default_str();
    seq_cmd->add_option("--method", seq.method, "computation route")
        ->check(CLI::IsMember({"dp", "series", "brute", "all"}))
        ->capture_default_str();
    seq_cmd->add_option("--brute-bound", seq.brute_bound, "brute-force order bound")
        ->capture_default_str();
    add_output_options(seq_cmd, seq.output);

    VerifyOptions verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check xi(C_n^b) = s(n+1) - 1 for n = 0..n_max");
    verify_cmd->add_option("--weight", verify.weight, "weight sequence (weight grammar)")
        ->required();
    verify_cmd->add_option("--n-max", verify.n_max, "largest order")->capture_default_str();
    CLI::Option* wn = verify_cmd->add_option("--window-n", verify.window_n,
                                             "difference orders checked for tables")
                          ->capture_default_str();
    CLI::Option* wx = verify_cmd->add_option("--window-x", verify.window_x,
                                             "evaluation points checked for tables")
                          ->capture_default_str();
    add_output_options(verify_cmd, verify.output);

    OrbitsOptions orbits;
    CLI::App* orbits_cmd =
        app.add_subcommand("orbits", "orbit census and decomposition at one order");
    orbits_cmd->add_option("--weight", orbits.weight, "weight sequence (weight grammar)")
        ->required();
    orbits_cmd->add_option("--n", orbits.n, "order (vertex count)")->capture_default_str();
    orbits_cmd->add_option("--orbit-bound", orbits.orbit_bound, "shape enumeration bound")
        ->capture_default_str();
    add_output_options(orbits_cmd, orbits.output);

    BlocksOptions blocks;
    CLI::App* blocks_cmd =
        app.add_subcommand("blocks", "zero blocks of the Catalan sequence mod p");
    blocks_cmd->add_option("--p", blocks.p, "prime modulus (2 or an odd prime)")
        ->capture_default_str();
    blocks_cmd->add_option("--n-max", blocks.n_max, "scan horizon")->capture_default_str();
    blocks_cmd->add_option("--k-max", blocks.k_max, "blocks to report")->capture_default_str();
    add_output_options(blocks_cmd, blocks.output);

    std::vector<const char*> argv;
    argv.push_back("wcat");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (seq_cmd->parsed()) return run_seq(seq, out, err);
        if (verify_cmd->parsed()) {
            verify.window_given = wn->count() > 0 || wx->count() > 0;
            return run_verify(verify, out, err);
        }
        if (orbits_cmd->parsed()) return run_orbits(orbits, out, err);
        if (blocks_cmd->parsed()) return run_blocks(blocks, out, err);
    } catch (const NonMemberError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace wcat::cli
