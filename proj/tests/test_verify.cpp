#include <doctest.h>

#include "hzk/errors.hpp"
#include "hzk/verify.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace hzk;

namespace {
std::set<std::string> registry_ids() {
    std::set<std::string> ids;
    for (const auto& info : list_identities()) ids.insert(info.id);
    return ids;
}
}  // namespace

TEST_CASE("registry covers every table operation and invariant family") {
    // static manifest: one fundamental-theorem or value identity per
    // operation in the integral tables, plus the invariant families the
    // suite promises; additions are fine, removals break this list
    static const char* required[] = {
        // antiderivative operations
        "prim-ak-moment-ftc",
        "prim-bernoulli-moment-ftc",
        "prim-digamma-moment-ftc",
        "prim-exp-bernoulli-ftc",
        "prim-exp-cot-ftc",
        "prim-exp-logsine-ftc",
        "prim-exp-zeta-ftc",
        "prim-loggamma-moment-ftc",
        "prim-logsine-moment-ftc",
        "prim-negapolygamma-moment-ftc",
        "prim-polygamma-moment-ftc",
        "prim-selfproduct-ftc",
        "prim-zeta-bernoulli-weight-ftc",
        "prim-zeta-moment-ftc",
        // definite-integral operations
        "def-loggamma-sq",
        "def-logsine-moment",
        "def-logsine-moment-half",
        "def-negapoly-product",
        "def-negapoly-product-parity",
        "def-zeta-moment",
        "def-zeta-moment-unit",
        "def-zeta-product",
        // cross-path routes
        "ak-fourier-crosspath",
        "ak-shifted-crosspath",
        "negapoly-alt-form",
        "negapoly-fourier-crosspath",
        "negapoly-gosper-offset",
        "prim-ak-negapoly-equivalence",
        "prim-selfproduct-forms",
        // invariant families
        "ak-derivative-ladder",
        "ak-half-argument",
        "ak-shift-recurrence",
        "ak-zero-mean",
        "bernoulli-addition",
        "bernoulli-reflection",
        "bernoulli-shift",
        "bernoulli-zero-mean",
        "negapoly-ladder",
        "negapoly-shift",
        "negapoly-zero-mean",
        "zeta-bernoulli-specialization",
        "zeta-dq-consistency",
        "zeta-dz-consistency",
        "zeta-shift",
        // pinned constants
        "const-catalan-clausen",
        "const-glaisher-values",
        "const-zeta-prime-minus1",
    };
    const auto ids = registry_ids();
    for (const char* r : required)
        CHECK_MESSAGE(ids.count(r) == 1, "missing identity: " << r);
    CHECK(ids.size() >= 30);
}

TEST_CASE("reports are bit-identical for identical options") {
    VerifyOptions opt;
    opt.suite = "constants";
    const std::string a = report_json(run_suite(opt));
    const std::string b = report_json(run_suite(opt));
    CHECK(a == b);
}

TEST_CASE("seed changes the drawn grid points but not determinism") {
    const VerifyReport a = run_suite("ak", 42);
    const VerifyReport b = run_suite("ak", 43);
    const VerifyReport c = run_suite("ak", 43);
    REQUIRE(a.checks.size() == b.checks.size());
    bool any_grid_differs = false;
    for (size_t i = 0; i < a.checks.size(); ++i) {
        if (a.checks[i].grid_point != b.checks[i].grid_point)
            any_grid_differs = true;
        CHECK(b.checks[i].grid_point == c.checks[i].grid_point);
    }
    CHECK(any_grid_differs);
}

TEST_CASE("every default-tolerance suite passes") {
    for (const std::string& s : suite_names()) {
        const VerifyReport r = run_suite(s);
        CHECK_MESSAGE(r.passed == r.total,
                      "suite " << s << ": " << r.passed << "/" << r.total
                               << " worst " << r.worst_id);
        CHECK(r.total > 0);
    }
}

TEST_CASE("tolerance override applies to every check") {
    const VerifyReport r = run_suite("constants", 42, 1e-30);
    CHECK(r.passed < r.total);  // nothing survives an impossible tolerance
    for (const auto& c : r.checks) CHECK(c.tolerance == 1e-30);
}

TEST_CASE("suite filtering and validation") {
    CHECK_THROWS_AS(run_suite("nonsense"), domain_error);
    const VerifyReport ak = run_suite("ak");
    for (const auto& c : ak.checks)
        CHECK(c.id.substr(0, 3) == "ak-");
    const VerifyReport all = run_suite("all");
    CHECK(all.total > ak.total);
    // checks arrive sorted by identity id
    CHECK(std::is_sorted(all.checks.begin(), all.checks.end(),
                         [](const CheckResult& x, const CheckResult& y) {
                             return x.id < y.id;
                         }));
}

TEST_CASE("json report carries the stable field set") {
    const std::string j = report_json(run_suite("constants"));
    for (const char* key :
         {"\"suite\"", "\"seed\"", "\"draws\"", "\"tolerances\"", "\"checks\"",
          "\"summary\"", "\"rel_residual\"", "\"grid_point\"", "\"passed\""})
        CHECK_MESSAGE(j.find(key) != std::string::npos, "missing " << key);
}
