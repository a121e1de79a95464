#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hzk {

enum class CheckKind {
    invariant,             // recurrence / reflection / algebraic identity
    cross_path,            // two independent evaluation routes
    primitive_difference,  // F(q2) - F(q1) against adaptive quadrature
    definite_value,        // closed-form definite integral against quadrature
    constant_value,        // pinned reference constant
};

struct CheckResult {
    std::string id;            // identity the check belongs to
    CheckKind kind = CheckKind::invariant;
    std::string grid_point;    // parameter assignment, human readable
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;  // |lhs-rhs| / (1 + max(|lhs|,|rhs|)), the pass metric
    double tolerance = 0.0;
    bool passed = false;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    CheckKind kind = CheckKind::invariant;
    std::vector<std::string> suites;
    double default_tol = 0.0;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;           // documented default
    int draws = 3;                     // random grid points per identity
    std::optional<double> tol_override;  // when set, replaces every check's tol
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int draws = 0;
    std::optional<double> tol_override;
    std::vector<CheckResult> checks;   // sorted by id, then grid order
    int total = 0;
    int passed = 0;
    double worst_rel_residual = 0.0;
    std::string worst_id;
};

// Suites: all, core, ak, negapoly, primitives, definite, constants.
// Unknown or empty suite name raises domain_error. Identical
// (suite, seed, tol) reproduce bit-identical reports.
VerifyReport run_suite(const VerifyOptions& opt);
VerifyReport run_suite(const std::string& suite, std::uint64_t seed = 42,
                       std::optional<double> tol_override = std::nullopt);

const std::vector<IdentityInfo>& list_identities();
const std::vector<std::string>& suite_names();

// Stable-field-order JSON rendering of a report (2-space indent).
std::string report_json(const VerifyReport& r);
std::string check_kind_name(CheckKind k);

}  // namespace hzk
