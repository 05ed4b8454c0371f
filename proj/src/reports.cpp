#include "wcat/reports.hpp"

namespace wcat {

namespace {

const char* bool_text(bool value) {
    return value ? "true" : "false";
}

}  // namespace

std::string to_csv(const std::vector<ValuationReport>& rows) {
    std::string out = "n,xi,predicted,match\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.xi) + ',' +
               std::to_string(row.predicted) + ',' + bool_text(row.match) + '\n';
    }
    return out;
}

std::string to_csv(const std::vector<ZeroBlockReport>& rows) {
    std::string out = "p,k,observed,predicted,match,complete\n";
    for (const auto& row : rows) {
        out += std::to_string(row.p) + ',' + std::to_string(row.k) + ',' +
               std::to_string(row.observed) + ',' + std::to_string(row.predicted) + ',' +
               bool_text(row.match) + ',' + bool_text(row.complete) + '\n';
    }
    return out;
}

std::string census_to_csv(const OrbitCensus& census) {
    std::string out = "shape,t,r0\n";
    for (const auto& record : census.records) {
        out += record.shape.to_parens() + ',' + std::to_string(record.size_exponent) + ',' +
               record.reduced[0].to_string() + '\n';
    }
    return out;
}

json to_json(const std::vector<ValuationReport>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back(json{{"n", row.n},
                           {"xi", row.xi},
                           {"predicted", row.predicted},
                           {"match", row.match}});
    }
    return out;
}

json to_json(const std::vector<ZeroBlockReport>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back(json{{"p", row.p},
                           {"k", row.k},
                           {"observed", row.observed},
                           {"predicted", row.predicted},
                           {"match", row.match},
                           {"complete", row.complete}});
    }
    return out;
}

json census_records_to_json(const OrbitCensus& census) {
    json out = json::array();
    for (const auto& record : census.records) {
        out.push_back(json{{"shape", record.shape.to_parens()},
                           {"t", record.size_exponent},
                           {"r0", record.reduced[0].to_string()}});
    }
    return out;
}

json to_json(const MembershipVerdict& verdict) {
    json out;
    switch (verdict.status) {
        case MembershipStatus::ProvenMember:
            out["status"] = "ProvenMember";
            break;
        case MembershipStatus::ProvenNonMember:
            out["status"] = "ProvenNonMember";
            break;
        case MembershipStatus::WindowVerified:
            out["status"] = "WindowVerified";
            out["n_max"] = verdict.n_max;
            out["x_max"] = verdict.x_max;
            break;
    }
    if (verdict.witness) {
        out["witness"] = json{{"n", verdict.witness->n},
                              {"x", verdict.witness->x},
                              {"value", verdict.witness->value.to_string()}};
    }
    return out;
}

}  // namespace wcat
