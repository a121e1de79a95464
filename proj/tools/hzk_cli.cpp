// Command line front end: eval (one function at one point), table (one
// function over an integer range or q grid), verify (identity suites), list.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 convergence failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "hzk/bernoulli.hpp"
#include "hzk/errors.hpp"
#include "hzk/families.hpp"
#include "hzk/hurwitz.hpp"
#include "hzk/primitives.hpp"
#include "hzk/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using hzk::EvalResult;
using hzk::PrimitiveParams;
using hzk::SeriesControl;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::optional<double> z, z2, q, a, b, c, d, x, tol;
    std::optional<int> k, k2, n, m, r;

    double D(const std::optional<double>& v, const char* name) const {
        if (!v) throw usage_error(std::string("missing required option --") + name);
        return *v;
    }
    int I(const std::optional<int>& v, const char* name) const {
        if (!v) throw usage_error(std::string("missing required option --") + name);
        return *v;
    }
    SeriesControl ctrl() const {
        SeriesControl s;
        if (tol) s.tol = *tol;
        return s;
    }
    PrimitiveParams prim() const {
        PrimitiveParams p;
        if (n) p.n = *n;
        if (m) p.m = *m;
        if (z) p.z = *z;
        if (a) p.a = *a;
        if (b) p.b = *b;
        if (c) p.c = *c;
        if (d) p.d = *d;
        if (q) p.q = *q;
        return p;
    }
};

struct FnSpec {
    std::vector<std::string> params;  // required option names
    std::function<EvalResult(const Args&)> run;
};

EvalResult cf(const hzk::ClosedFormValue& v) { return {v.value, v.err_estimate}; }
EvalResult exact(double v) { return {v, 0.0}; }

const std::map<std::string, FnSpec>& fn_registry() {
    static const std::map<std::string, FnSpec> reg = [] {
        std::map<std::string, FnSpec> r;
        auto add = [&](const char* name, std::vector<std::string> params,
                       std::function<EvalResult(const Args&)> run) {
            r[name] = {std::move(params), std::move(run)};
        };

        // kernel
        add("hurwitz_zeta", {"z", "q"}, [](const Args& a) {
            return hzk::hurwitz_zeta(a.D(a.z, "z"), a.D(a.q, "q"));
        });
        add("hurwitz_zeta_dz", {"z", "q"}, [](const Args& a) {
            return hzk::hurwitz_zeta_dz(a.D(a.z, "z"), a.D(a.q, "q"));
        });
        add("hurwitz_zeta_d2z", {"z", "q"}, [](const Args& a) {
            return hzk::hurwitz_zeta_d2z(a.D(a.z, "z"), a.D(a.q, "q"));
        });
        add("hurwitz_zeta_dq", {"z", "q"}, [](const Args& a) {
            return hzk::hurwitz_zeta_dq(a.D(a.z, "z"), a.D(a.q, "q"));
        });
        add("riemann_zeta", {"z"},
            [](const Args& a) { return hzk::riemann_zeta(a.D(a.z, "z")); });
        add("riemann_zeta_dz", {"z"},
            [](const Args& a) { return hzk::riemann_zeta_dz(a.D(a.z, "z")); });
        add("riemann_zeta_d2z", {"z"},
            [](const Args& a) { return hzk::riemann_zeta_d2z(a.D(a.z, "z")); });
        add("zeta_neg_int", {"n"}, [](const Args& a) {
            return exact(hzk::zeta_neg_int(a.I(a.n, "n")));
        });
        add("zeta_prime_neg_even", {"n"}, [](const Args& a) {
            return EvalResult{hzk::zeta_prime_neg_even(a.I(a.n, "n")), 1e-15};
        });
        add("pochhammer", {"x", "n"}, [](const Args& a) {
            return exact(hzk::pochhammer(a.D(a.x, "x"), a.I(a.n, "n")));
        });

        // bernoulli layer
        add("bernoulli_number", {"k"}, [](const Args& a) {
            return exact(hzk::bernoulli_number(a.I(a.k, "k")));
        });
        add("bernoulli_poly", {"m", "q"}, [](const Args& a) {
            return exact(hzk::bernoulli_poly(a.I(a.m, "m"), a.D(a.q, "q")));
        });
        add("harmonic", {"n"},
            [](const Args& a) { return exact(hzk::harmonic(a.I(a.n, "n"))); });
        add("binomial", {"n", "k"}, [](const Args& a) {
            return exact(hzk::binomial(a.I(a.n, "n"), a.I(a.k, "k")));
        });
        add("factorial", {"n"},
            [](const Args& a) { return exact(hzk::factorial(a.I(a.n, "n"))); });
        add("bernoulli_alternating_sum", {"n", "a", "b", "q"}, [](const Args& a) {
            return exact(hzk::bernoulli_alternating_sum(
                a.I(a.n, "n"), a.D(a.a, "a"), a.D(a.b, "b"), a.D(a.q, "q")));
        });

        // derived families
        add("digamma", {"q"},
            [](const Args& a) { return hzk::digamma(a.D(a.q, "q")); });
        add("polygamma", {"m", "q"}, [](const Args& a) {
            return hzk::polygamma(a.I(a.m, "m"), a.D(a.q, "q"));
        });
        add("loggamma", {"q"},
            [](const Args& a) { return hzk::loggamma(a.D(a.q, "q")); });
        add("a_k", {"k", "q"}, [](const Args& a) {
            return hzk::a_k(a.I(a.k, "k"), a.D(a.q, "q"));
        });
        add("a_k_fourier", {"k", "q"}, [](const Args& a) {
            return hzk::a_k_fourier(a.I(a.k, "k"), a.D(a.q, "q"), a.ctrl());
        });
        add("a_k_shifted", {"k", "q"}, [](const Args& a) {
            return hzk::a_k_shifted(a.I(a.k, "k"), a.D(a.q, "q"));
        });
        add("negapolygamma", {"k", "q"}, [](const Args& a) {
            return hzk::negapolygamma(a.I(a.k, "k"), a.D(a.q, "q"));
        });
        add("negapolygamma_fourier", {"k", "q"}, [](const Args& a) {
            return hzk::negapolygamma_fourier(a.I(a.k, "k"), a.D(a.q, "q"),
                                              a.ctrl());
        });
        add("negapolygamma_alt", {"k", "q"}, [](const Args& a) {
            return hzk::negapolygamma_alt(a.I(a.k, "k"), a.D(a.q, "q"));
        });
        add("gosper_negapolygamma", {"k", "q"}, [](const Args& a) {
            return hzk::gosper_negapolygamma(a.I(a.k, "k"), a.D(a.q, "q"),
                                             a.tol.value_or(1e-10));
        });
        add("negapolygamma_via_gosper", {"k", "q"}, [](const Args& a) {
            return hzk::negapolygamma_via_gosper(a.I(a.k, "k"), a.D(a.q, "q"),
                                                 a.tol.value_or(1e-10));
        });
        add("glaisher_log", {"r"}, [](const Args& a) {
            return EvalResult{hzk::glaisher_log(a.I(a.r, "r")), 1e-15};
        });
        add("clausen", {"n", "x"}, [](const Args& a) {
            return hzk::clausen(a.I(a.n, "n"), a.D(a.x, "x"), a.ctrl());
        });
        add("fourier_c", {"z", "q"}, [](const Args& a) {
            return hzk::fourier_kernels(a.D(a.z, "z"), a.D(a.q, "q"), a.ctrl()).c;
        });
        add("fourier_s", {"z", "q"}, [](const Args& a) {
            return hzk::fourier_kernels(a.D(a.z, "z"), a.D(a.q, "q"), a.ctrl()).s;
        });

        // antiderivative (primitive) closed forms; q is the evaluation point
        add("prim_zeta_moment", {"n", "z", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_zeta_moment(a.prim())); });
        add("prim_zeta_bernoulli_weight", {"m", "z", "a", "b", "c", "d", "q"},
            [](const Args& a) {
                return cf(hzk::prim_zeta_bernoulli_weight(a.prim()));
            });
        add("prim_bernoulli_moment", {"n", "m", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_bernoulli_moment(a.prim())); });
        add("prim_zeta_selfproduct_odd", {"n", "z", "q"}, [](const Args& a) {
            return cf(hzk::prim_zeta_selfproduct_odd(a.I(a.n, "n"), a.D(a.z, "z"),
                                                     a.D(a.q, "q")));
        });
        add("prim_zeta_selfproduct_odd_centered", {"n", "z", "q"},
            [](const Args& a) {
                return cf(hzk::prim_zeta_selfproduct_odd_centered(
                    a.I(a.n, "n"), a.D(a.z, "z"), a.D(a.q, "q")));
            });
        add("prim_exp_zeta", {"z", "a", "b", "q"}, [](const Args& a) {
            return cf(hzk::prim_exp_zeta(a.prim(), a.ctrl()));
        });
        add("prim_exp_bernoulli", {"m", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_exp_bernoulli(a.prim())); });
        add("prim_polygamma_moment", {"n", "m", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_polygamma_moment(a.prim())); });
        add("prim_digamma_moment", {"n", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_digamma_moment(a.prim())); });
        add("prim_negapolygamma_moment", {"n", "m", "a", "b", "q"},
            [](const Args& a) {
                return cf(hzk::prim_negapolygamma_moment(a.prim()));
            });
        add("prim_ak_moment", {"n", "m", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_ak_moment(a.prim())); });
        add("prim_loggamma_moment", {"n", "a", "b", "q"},
            [](const Args& a) { return cf(hzk::prim_loggamma_moment(a.prim())); });
        add("prim_logsine_moment", {"n", "q"}, [](const Args& a) {
            return cf(hzk::prim_logsine_moment(a.I(a.n, "n"), a.D(a.q, "q")));
        });
        add("prim_exp_logsine", {"q"}, [](const Args& a) {
            return cf(hzk::prim_exp_logsine(a.D(a.q, "q"), a.ctrl()));
        });
        add("prim_exp_cot", {"q"}, [](const Args& a) {
            return cf(hzk::prim_exp_cot(a.D(a.q, "q"), a.ctrl()));
        });

        // definite closed forms over fixed intervals
        add("def_zeta_moment", {"n", "z", "a", "b"}, [](const Args& a) {
            return cf(hzk::def_zeta_moment(a.I(a.n, "n"), a.D(a.z, "z"),
                                           a.D(a.a, "a"), a.D(a.b, "b")));
        });
        add("def_zeta_moment_unit", {"n", "z"}, [](const Args& a) {
            return cf(hzk::def_zeta_moment_unit(a.I(a.n, "n"), a.D(a.z, "z")));
        });
        add("def_logsine_moment", {"n"}, [](const Args& a) {
            return cf(hzk::def_logsine_moment(a.I(a.n, "n")));
        });
        add("def_logsine_moment_half", {"n"}, [](const Args& a) {
            return cf(hzk::def_logsine_moment_half(a.I(a.n, "n")));
        });
        add("def_negapoly_product", {"k", "k2"}, [](const Args& a) {
            return cf(hzk::def_negapoly_product(a.I(a.k, "k"), a.I(a.k2, "k2")));
        });
        add("def_zeta_product", {"z", "z2"}, [](const Args& a) {
            return cf(hzk::def_zeta_product(a.D(a.z, "z"), a.D(a.z2, "z2")));
        });
        add("def_loggamma_sq", {},
            [](const Args&) { return cf(hzk::def_loggamma_sq()); });

        return r;
    }();
    return reg;
}

const FnSpec& find_fn(const std::string& name) {
    const auto& reg = fn_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw usage_error("unknown function '" + name + "'");
    return it->second;
}

void check_required(const FnSpec& spec, const Args& a,
                    const std::vector<std::string>& implicit = {}) {
    for (const auto& p : spec.params) {
        bool ok = false;
        for (const auto& impl : implicit)
            if (impl == p) ok = true;
        if (ok) continue;
        if (p == "z") ok = a.z.has_value();
        else if (p == "z2") ok = a.z2.has_value();
        else if (p == "q") ok = a.q.has_value();
        else if (p == "a") ok = a.a.has_value();
        else if (p == "b") ok = a.b.has_value();
        else if (p == "c") ok = a.c.has_value();
        else if (p == "d") ok = a.d.has_value();
        else if (p == "x") ok = a.x.has_value();
        else if (p == "k") ok = a.k.has_value();
        else if (p == "k2") ok = a.k2.has_value();
        else if (p == "n") ok = a.n.has_value();
        else if (p == "m") ok = a.m.has_value();
        else if (p == "r") ok = a.r.has_value();
        if (!ok) throw usage_error("missing required option --" + p);
    }
}

// Binds the shared parameter options to one subcommand. The vendored CLI11
// has no std::optional binding, so raw slots are harvested by option count.
struct ArgBinder {
    double z = 0, z2 = 0, q = 0, a = 0, b = 0, c = 0, d = 0, x = 0, tol = 0;
    int k = 0, k2 = 0, n = 0, m = 0, r = 0;
    std::map<std::string, CLI::Option*> opts;

    void attach(CLI::App* cmd) {
        auto bind = [&](const char* name, auto& slot, const char* help) {
            opts[name] = cmd->add_option(std::string("--") + name, slot, help);
        };
        bind("z", z, "zeta argument z");
        bind("z2", z2, "second zeta argument");
        bind("q", q, "offset / evaluation point q");
        bind("a", a, "affine offset a in a + b q");
        bind("b", b, "affine scale b in a + b q");
        bind("c", c, "affine offset c in c + d q (Bernoulli weight)");
        bind("d", d, "affine scale d in c + d q (Bernoulli weight)");
        bind("x", x, "direct real argument");
        bind("tol", tol, "series / quadrature tolerance for this call");
        bind("k", k, "family index k");
        bind("k2", k2, "second family index");
        bind("n", n, "moment order n");
        bind("m", m, "weight order m");
        bind("r", r, "constant index r");
    }

    Args harvest() const {
        Args v;
        auto got = [&](const char* name) { return opts.at(name)->count() > 0; };
        if (got("z")) v.z = z;
        if (got("z2")) v.z2 = z2;
        if (got("q")) v.q = q;
        if (got("a")) v.a = a;
        if (got("b")) v.b = b;
        if (got("c")) v.c = c;
        if (got("d")) v.d = d;
        if (got("x")) v.x = x;
        if (got("tol")) v.tol = tol;
        if (got("k")) v.k = k;
        if (got("k2")) v.k2 = k2;
        if (got("n")) v.n = n;
        if (got("m")) v.m = m;
        if (got("r")) v.r = r;
        return v;
    }
};

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run_eval(const std::string& fn, const Args& a, const std::string& format) {
    const FnSpec& spec = find_fn(fn);
    check_required(spec, a);
    const EvalResult v = spec.run(a);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["fn"] = fn;
        j["value"] = v.value;
        j["err_estimate"] = v.err_estimate;
        std::printf("%s\n", j.dump(2).c_str());
    } else if (format == "csv") {
        std::printf("value,err_estimate\n%s,%s\n", fmt17(v.value).c_str(),
                    fmt17(v.err_estimate).c_str());
    } else {
        std::printf("fn            %s\n", fn.c_str());
        std::printf("value         %s\n", fmt12(v.value).c_str());
        std::printf("err_estimate  %s\n", fmt12(v.err_estimate).c_str());
    }
    return 0;
}

bool parse_grid(const std::string& s, double& lo, double& hi, double& step) {
    return std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) == 3;
}

int run_table(const std::string& fn, Args a, int n_max, const std::string& grid,
              const std::string& format) {
    const FnSpec& spec = find_fn(fn);
    const bool by_n = n_max >= 0;
    if (by_n == !grid.empty())
        throw usage_error("table needs exactly one of --n-max or --q-grid");

    const std::string var = by_n ? "n" : "q";
    bool takes = false;
    for (const auto& p : spec.params) takes = takes || (p == var);
    if (!takes)
        throw usage_error("function '" + fn + "' has no --" + var + " parameter");
    check_required(spec, a, {var});

    std::vector<double> points;
    if (by_n) {
        for (int i = 0; i <= n_max; ++i) points.push_back(i);
    } else {
        double lo, hi, step;
        if (!parse_grid(grid, lo, hi, step) || step <= 0 || hi < lo)
            throw usage_error("bad --q-grid, expected lo:hi:step with step > 0");
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
        for (int i = 0; i <= count; ++i) points.push_back(lo + i * step);
    }

    std::vector<EvalResult> rows;
    for (double p : points) {
        if (by_n) a.n = static_cast<int>(p);
        else a.q = p;
        rows.push_back(spec.run(a));
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["fn"] = fn;
        j["rows"] = nlohmann::ordered_json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
            nlohmann::ordered_json row;
            if (by_n) row[var] = static_cast<int>(points[i]);
            else row[var] = points[i];
            row["value"] = rows[i].value;
            row["err_estimate"] = rows[i].err_estimate;
            j["rows"].push_back(row);
        }
        std::printf("%s\n", j.dump(2).c_str());
    } else if (format == "csv") {
        std::printf("%s,value,err_estimate\n", var.c_str());
        for (size_t i = 0; i < rows.size(); ++i)
            std::printf("%s,%s,%s\n", fmt17(points[i]).c_str(),
                        fmt17(rows[i].value).c_str(),
                        fmt17(rows[i].err_estimate).c_str());
    } else {
        std::printf("%-14s %-22s %s\n", var.c_str(), "value", "err_estimate");
        for (size_t i = 0; i < rows.size(); ++i)
            std::printf("%-14s %-22s %s\n", fmt12(points[i]).c_str(),
                        fmt12(rows[i].value).c_str(),
                        fmt12(rows[i].err_estimate).c_str());
    }
    return 0;
}

int run_verify(const hzk::VerifyOptions& opt, const std::string& format) {
    const hzk::VerifyReport rep = hzk::run_suite(opt);
    if (format == "json") {
        std::printf("%s\n", hzk::report_json(rep).c_str());
    } else {
        // one line per identity; failing grid points expanded underneath
        std::string cur;
        int pass = 0, total = 0;
        double worst = 0.0;
        std::vector<const hzk::CheckResult*> fails;
        auto flush = [&] {
            if (cur.empty()) return;
            std::printf("[%s] %-34s checks=%-3d worst_rel=%.3g\n",
                        pass == total ? "PASS" : "FAIL", cur.c_str(), total,
                        worst);
            for (const auto* f : fails)
                std::printf("       at %s: lhs=%s rhs=%s rel=%.3g tol=%.3g\n",
                            f->grid_point.c_str(), fmt12(f->lhs).c_str(),
                            fmt12(f->rhs).c_str(), f->rel_residual,
                            f->tolerance);
        };
        for (const auto& c : rep.checks) {
            if (c.id != cur) {
                flush();
                cur = c.id;
                pass = total = 0;
                worst = 0.0;
                fails.clear();
            }
            ++total;
            if (c.passed) ++pass;
            else fails.push_back(&c);
            if (std::isfinite(c.rel_residual) && c.rel_residual > worst)
                worst = c.rel_residual;
        }
        flush();
        std::printf(
            "suite=%s seed=%llu draws=%d total=%d passed=%d failed=%d "
            "worst_rel=%.3g worst_id=%s\n",
            rep.suite.c_str(), static_cast<unsigned long long>(rep.seed),
            rep.draws, rep.total, rep.passed, rep.total - rep.passed,
            rep.worst_rel_residual, rep.worst_id.c_str());
    }
    return rep.passed == rep.total ? 0 : 1;
}

int run_list(const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["functions"] = nlohmann::ordered_json::array();
        for (const auto& [name, spec] : fn_registry()) {
            nlohmann::ordered_json f;
            f["name"] = name;
            f["params"] = spec.params;
            j["functions"].push_back(f);
        }
        j["suites"] = hzk::suite_names();
        j["identities"] = nlohmann::ordered_json::array();
        for (const auto& info : hzk::list_identities()) {
            nlohmann::ordered_json ident;
            ident["id"] = info.id;
            ident["kind"] = hzk::check_kind_name(info.kind);
            ident["suites"] = info.suites;
            ident["default_tol"] = info.default_tol;
            ident["description"] = info.description;
            j["identities"].push_back(ident);
        }
        std::printf("%s\n", j.dump(2).c_str());
        return 0;
    }
    std::printf("functions:\n");
    for (const auto& [name, spec] : fn_registry()) {
        std::string ps;
        for (const auto& p : spec.params) ps += " --" + p;
        std::printf("  %-36s%s\n", name.c_str(), ps.c_str());
    }
    std::printf("suites:\n ");
    for (const auto& s : hzk::suite_names()) std::printf(" %s", s.c_str());
    std::printf("\nidentities:\n");
    for (const auto& info : hzk::list_identities())
        std::printf("  %-34s [%s] %s\n", info.id.c_str(),
                    hzk::check_kind_name(info.kind).c_str(),
                    info.description.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz zeta kernel, derived families, and integral tables"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    std::string eval_fn, eval_format = "text";
    eval->add_option("--fn", eval_fn, "function name (see: hzk list)")->required();
    eval->add_option("--format", eval_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    ArgBinder eval_args;
    eval_args.attach(eval);

    auto* table = app.add_subcommand("table", "tabulate a function over a range");
    std::string table_fn, table_format = "text", table_grid;
    int table_nmax = -1;
    table->add_option("--fn", table_fn, "function name")->required();
    table->add_option("--n-max", table_nmax, "tabulate n = 0..N");
    table->add_option("--q-grid", table_grid, "tabulate q over lo:hi:step");
    table->add_option("--format", table_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    ArgBinder table_args;
    table_args.attach(table);

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    hzk::VerifyOptions vopt;
    std::string verify_format = "text";
    double verify_tol = 0.0;
    verify->add_option("--suite", vopt.suite, "all, core, ak, negapoly, primitives, definite, constants");
    verify->add_option("--seed", vopt.seed, "base seed for the per-identity draws");
    verify->add_option("--draws", vopt.draws, "random grid points per identity");
    auto* tol_opt =
        verify->add_option("--tol", verify_tol, "override every check's tolerance");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* list = app.add_subcommand("list", "list functions and identities");
    std::string list_format = "text";
    list->add_option("--format", list_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed())
            return run_eval(eval_fn, eval_args.harvest(), eval_format);
        if (table->parsed())
            return run_table(table_fn, table_args.harvest(), table_nmax,
                             table_grid, table_format);
        if (verify->parsed()) {
            if (tol_opt->count() > 0) vopt.tol_override = verify_tol;
            return run_verify(vopt, verify_format);
        }
        return run_list(list_format);
    } catch (const usage_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const hzk::convergence_error& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 3;
    } catch (const hzk::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const hzk::overflow_error& e) {
        std::fprintf(stderr, "overflow: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
