#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "fracsum/cli.hpp"
#include "fracsum/errors.hpp"
#include "json.hpp"

#ifndef FRACSUM_VERSION
#define FRACSUM_VERSION "0.0.0"
#endif

namespace fracsum::cli {
namespace {

using nlohmann::json;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex_json(Complex z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

json parameters_json(const identities::Parameters& p) {
    json out = json::object();
    for (const identities::Parameter& q : p) {
        out[q.name] = complex_json(q.value);
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string csv_number(double x) { return std::isfinite(x) ? format_double(x) : "nan"; }

}  // namespace

std::string tool_version() { return FRACSUM_VERSION; }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Summary summarize(const std::vector<identities::CaseRecord>& records, int skipped_optional) {
    Summary s;
    s.total = static_cast<int>(records.size());
    for (const identities::CaseRecord& r : records) {
        (r.pass ? s.passed : s.failed) += 1;
    }
    s.skipped_optional = skipped_optional;
    return s;
}

std::string report_json(const Report& r) {
    json records = json::array();
    for (const identities::CaseRecord& c : r.records) {
        records.push_back({
            {"id", c.id},
            {"parameters", parameters_json(c.parameters)},
            {"lhs", complex_json(c.lhs)},
            {"rhs", r.rhs_present ? complex_json(c.rhs) : json(nullptr)},
            {"abs_residual", number(c.abs_residual)},
            {"rel_residual", number(c.rel_residual)},
            {"tol", number(c.tol)},
            {"pass", c.pass},
            {"n_used", c.n_used},
            {"runtime_ms", number(c.runtime_ms)},
            {"notes", c.notes},
            {"optional", c.optional},
        });
    }
    const json doc = {
        {"tool_version", r.tool_version},
        {"timestamp", r.timestamp},
        {"records", records},
        {"summary",
         {{"total", r.summary.total},
          {"passed", r.summary.passed},
          {"failed", r.summary.failed},
          {"skipped_optional", r.summary.skipped_optional}}},
    };
    return doc.dump(2) + "\n";
}

std::string report_csv(const Report& r) {
    std::string out = "id,param_json,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,pass\n";
    for (const identities::CaseRecord& c : r.records) {
        out += csv_field(c.id) + ',' + csv_field(parameters_json(c.parameters).dump()) + ',' +
               csv_number(c.lhs.real()) + ',' + csv_number(c.lhs.imag()) + ',' +
               (r.rhs_present ? csv_number(c.rhs.real()) + ',' + csv_number(c.rhs.imag()) : ",") +
               ',' + csv_number(c.abs_residual) + ',' + (c.pass ? "true" : "false") + '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw DomainError("cannot open " + tmp.string() + " for writing");
        }
        f << content;
        f.flush();
        if (!f) {
            throw DomainError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DomainError("cannot move report into place at " + path.string());
    }
}

}  // namespace fracsum::cli
