#pragma once

// Table-driven registry of the numerical assertions made by the audited
// manuscript. Every entry carries its location, the asserted value, and a
// tolerance; run_claims recomputes each through the library and reports
// pass/fail. Entries whose printed value is already known to contradict the
// manuscript's own surrounding mathematics are pre-flagged: when the
// recomputation confirms the mismatch they resolve to paper_inconsistent
// instead of fail.

#include <optional>
#include <string>
#include <vector>

#include "wmap/series.hpp"

namespace wmap::claims {

enum class claim_status { pending, pass, fail, paper_inconsistent };

enum class tolerance_kind { absolute, relative, sign };

struct claim_record {
    std::string id;         // stable, e.g. "W_ABS_T1_SIGMA0"; parametric ids
                            // like "W_ABS@0.5,5" are evaluated structurally
    std::string paper_loc;  // section/appendix locator in the manuscript
    std::string quote;      // the asserted formula fragment
    double expected = 0.0;
    double tolerance = 0.0;
    tolerance_kind kind = tolerance_kind::absolute;
    bool inconsistent_candidate = false;

    // filled by run_claims
    std::optional<double> computed;
    claim_status status = claim_status::pending;
    std::string message;
};

struct claim_report {
    int n_pass = 0;
    int n_fail = 0;
    int n_inconsistent = 0;
    std::vector<claim_record> claims;  // ordered by id
};

// The built-in registry covering every number the manuscript asserts.
std::vector<claim_record> builtin_registry();

// Recompute every claim; individual evaluation errors become fail records,
// never aborts. Deterministic: identical inputs give identical reports.
claim_report run_claims(const std::vector<claim_record>& registry,
                        const series_config& cfg = {});

// Registry exchange as a JSON array of
// {id, paper_loc, quote, expected, tolerance, tolerance_kind} objects
// (+ optional inconsistent_candidate). Throws std::runtime_error on
// malformed input, std::invalid_argument on invariant violations
// (tolerance <= 0, unknown tolerance_kind).
std::vector<claim_record> registry_from_json(const std::string& json_text);
std::string registry_to_json(const std::vector<claim_record>& registry);

// Report export: JSON {summary: {pass, fail, inconsistent}, claims: [...]}
// and an aligned plain-text table. Both are byte-stable across runs.
std::string report_to_json(const claim_report& report);
std::string report_to_text(const claim_report& report);

const char* to_string(claim_status s);
const char* to_string(tolerance_kind k);

}  // namespace wmap::claims
