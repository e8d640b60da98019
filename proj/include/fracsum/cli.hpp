#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracsum/identities.hpp"

namespace fracsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotConverged = 2;

/// A constant expression such as "-0.5", "1+2i" or "1/3".
Complex parse_complex(std::string_view text);

struct Summary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    /// Optional cases in the selection that were not evaluated.
    int skipped_optional = 0;
};

struct Report {
    std::string tool_version;
    std::string timestamp;  ///< UTC, ISO 8601
    std::vector<identities::CaseRecord> records;
    Summary summary;
    /// Records without a reference side (the sum command) print rhs as null.
    bool rhs_present = true;
};

std::string tool_version();
std::string utc_timestamp();

/// Counts from the records; optional records count in total/passed/failed.
Summary summarize(const std::vector<identities::CaseRecord>& records, int skipped_optional);

std::string report_json(const Report& r);
/// Header id,param_json,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,pass
std::string report_csv(const Report& r);

/// Writes to a sibling temporary and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct VerifyOptions {
    std::string suite = "all";
    std::vector<std::string> case_ids;
    bool include_optional = false;
    std::uint64_t seed = 42;
    double tol_scale = 1.0;
    /// 0 means FRACSUM_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

/// Cases selected by the options, in catalog order. Throws ContractError on unknown ids.
std::vector<const identities::IdentityCase*> select_cases(const VerifyOptions& opt,
                                                          int* skipped_optional = nullptr);

/// Evaluates the selection on worker threads; records keep catalog order.
Report run_verify(const VerifyOptions& opt);

/// True when every non-optional record passed.
bool gating_passed(const Report& r);

/// Entry point of the fracsum tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracsum::cli
