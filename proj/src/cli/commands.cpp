#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "fracsum/cli.hpp"
#include "fracsum/errors.hpp"
#include "fracsum/expr.hpp"
#include "fracsum/special.hpp"

namespace fracsum::cli {
namespace {

using identities::CaseRecord;
using identities::IdentityCase;

bool mentions_variable(const expr::Ast& n) {
    if (n->kind == expr::NodeKind::Variable) {
        return true;
    }
    return std::any_of(n->children.begin(), n->children.end(), mentions_variable);
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("FRACSUM_THREADS")) {
            const long cap = std::strtol(env, nullptr, 10);
            if (cap >= 1) {
                n = std::min(n, static_cast<unsigned>(cap));
            }
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Prints the source with a caret under the failing column.
void show_syntax_error(std::ostream& err, std::string_view text, const expr::SyntaxError& e) {
    err << "error: " << e.what() << "\n  " << text << "\n  "
        << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
}

struct SumOptions {
    std::string expression;
    std::string sigma;
    std::string from;
    std::string to;
    bool left = false;
    bool product = false;
    double tol = 1e-9;
    bool json = false;
};

int cmd_sum(const SumOptions& o, std::ostream& out, std::ostream& err) {
    expr::Ast ast;
    try {
        ast = expr::parse(o.expression);
    } catch (const expr::SyntaxError& e) {
        show_syntax_error(err, o.expression, e);
        return kExitUsage;
    }
    Degree sigma = Degree::neg_infinity();
    std::string sigma_note;
    if (o.sigma == "auto") {
        const expr::SigmaSuggestion s = expr::suggest_sigma(ast);
        err << "sigma auto: " << s.note << "\n";
        if (s.kind == expr::SigmaSuggestion::Kind::Unknown) {
            err << "error: cannot suggest a degree; pass --sigma explicitly\n";
            return kExitUsage;
        }
        sigma = s.degree();
        sigma_note = "sigma suggested (" + s.note + ")";
    } else if (o.sigma != "neginf") {
        int value = 0;
        const auto [end, ec] = std::from_chars(o.sigma.data(), o.sigma.data() + o.sigma.size(), value);
        if (ec != std::errc{} || end != o.sigma.data() + o.sigma.size() || value < 0) {
            err << "error: --sigma must be a nonnegative integer, 'neginf' or 'auto'\n";
            return kExitUsage;
        }
        sigma = Degree(value);
    }
    Complex from;
    Complex to;
    try {
        from = parse_complex(o.from);
        to = parse_complex(o.to);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    EngineConfig cfg;
    cfg.tol = o.tol;
    cfg.n_start = std::max<long>(cfg.n_start, sigma.value_or_minus_one() + 2);
    const Summand f = expr::to_summand(ast, sigma, o.expression);
    const auto start = std::chrono::steady_clock::now();
    FracSumResult r;
    try {
        cfg.validate();
        r = o.left ? frac_sum_left(f, from, to, cfg) : frac_sum_right(f, from, to, cfg);
        if (o.product) {
            const Complex v = std::exp(r.value);
            r.err_estimate *= std::abs(v);
            r.value = v;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (o.json) {
        CaseRecord rec;
        rec.id = o.product ? "product" : "sum";
        rec.parameters = {{"from", from}, {"to", to}};
        rec.lhs = r.value;
        rec.abs_residual = r.err_estimate;
        rec.rel_residual = std::abs(r.value) > 0.0 ? r.err_estimate / std::abs(r.value) : r.err_estimate;
        rec.tol = o.tol;
        rec.pass = r.converged;
        rec.n_used = r.n_used;
        rec.runtime_ms = ms;
        rec.notes = "expr=" + o.expression + "; sigma=" + sigma.to_string() + "; " +
                    (o.left ? "left" : "right") + "; method=" + r.method;
        if (!sigma_note.empty()) {
            rec.notes += "; " + sigma_note;
        }
        Report rep{tool_version(), utc_timestamp(), {rec}, {}, false};
        rep.summary = summarize(rep.records, 0);
        out << report_json(rep);
    } else {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", r.value.real(), r.value.imag());
        out << "value      " << buf << "\n";
        out << "error      " << format_double(r.err_estimate) << "\n";
        out << "n_used     " << r.n_used << "\n";
        out << "converged  " << (r.converged ? "yes" : "no") << "\n";
        out << "method     " << r.method << "\n";
    }
    return r.converged ? kExitOk : kExitNotConverged;
}

struct SpecialOptions {
    std::string function;
    std::string s = "0";
    std::string x = "1";
    int order = 1;
    bool json = false;
};

int cmd_special(const SpecialOptions& o, std::ostream& out, std::ostream& err) {
    Complex value;
    Complex s;
    Complex x;
    try {
        s = parse_complex(o.s);
        x = parse_complex(o.x);
        if (o.function == "zeta") {
            value = special::hurwitz_zeta(s, x);
        } else if (o.function == "zetad") {
            value = special::hurwitz_zeta_sderiv(o.order, s, x);
        } else if (o.function == "gamma") {
            value = special::gamma(x);
        } else if (o.function == "lgamma") {
            value = special::ln_gamma(x);
        } else {
            value = special::digamma(x);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (o.json) {
        CaseRecord rec;
        rec.id = "special." + o.function;
        rec.parameters = {{"x", x}};
        if (o.function == "zeta" || o.function == "zetad") {
            rec.parameters.insert(rec.parameters.begin(), {"s", s});
        }
        if (o.function == "zetad") {
            rec.parameters.push_back({"order", static_cast<double>(o.order)});
        }
        rec.lhs = value;
        rec.pass = true;
        Report rep{tool_version(), utc_timestamp(), {rec}, {}, false};
        rep.summary = summarize(rep.records, 0);
        out << report_json(rep);
    } else {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real(), value.imag());
        out << buf << "\n";
    }
    return kExitOk;
}

struct VerifyCli {
    VerifyOptions opt;
    std::string json_path;
    std::string csv_path;
};

int cmd_verify(const VerifyCli& v, std::ostream& out, std::ostream& err) {
    Report rep;
    try {
        rep = run_verify(v.opt);
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const CaseRecord& r : rep.records) {
        std::string params;
        for (const identities::Parameter& p : r.parameters) {
            params += (params.empty() ? "" : " ") + p.name + "=" + format_complex(p.value);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "abs=%.3e rel=%.3e tol=%.0e", r.abs_residual, r.rel_residual, r.tol);
        out << (r.pass ? "PASS " : "FAIL ") << (r.optional ? "(optional) " : "") << r.id << " ["
            << params << "] " << buf << "\n";
    }
    out << "total " << rep.summary.total << ", passed " << rep.summary.passed << ", failed "
        << rep.summary.failed << ", skipped optional " << rep.summary.skipped_optional << "\n";
    try {
        if (!v.json_path.empty()) {
            write_atomic(v.json_path, report_json(rep));
        }
        if (!v.csv_path.empty()) {
            write_atomic(v.csv_path, report_csv(rep));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return gating_passed(rep) ? kExitOk : kExitNotConverged;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const expr::Ast ast = expr::parse(text);
    if (mentions_variable(ast)) {
        throw DomainError("'" + std::string(text) + "' is not a constant");
    }
    return expr::eval(ast, 0.0);
}

std::vector<const IdentityCase*> select_cases(const VerifyOptions& opt, int* skipped_optional) {
    static const std::vector<std::string> kSuites = {"all", "core", "zeta", "products", "left", "optional"};
    std::vector<const IdentityCase*> out;
    int skipped = 0;
    if (!opt.case_ids.empty()) {
        for (const std::string& id : opt.case_ids) {
            const IdentityCase* c = identities::find_case(id);
            if (!c) {
                throw ContractError("unknown case id '" + id + "'");
            }
            if (std::find(out.begin(), out.end(), c) == out.end()) {
                out.push_back(c);
            }
        }
    } else {
        if (std::find(kSuites.begin(), kSuites.end(), opt.suite) == kSuites.end()) {
            throw ContractError("unknown suite '" + opt.suite + "'");
        }
        for (const IdentityCase& c : identities::catalog()) {
            const bool selected = identities::in_suite(c, opt.suite) ||
                                  (c.optional && (opt.suite == "all" || opt.suite == "optional"));
            if (!selected) {
                continue;
            }
            if (c.optional && !opt.include_optional) {
                ++skipped;
                continue;
            }
            out.push_back(&c);
        }
    }
    if (skipped_optional) {
        *skipped_optional = skipped;
    }
    return out;
}

Report run_verify(const VerifyOptions& opt) {
    if (!(opt.tol_scale > 0.0)) {
        throw ContractError("--tol-scale must be positive");
    }
    int skipped = 0;
    const std::vector<const IdentityCase*> cases = select_cases(opt, &skipped);
    std::vector<std::vector<CaseRecord>> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            results[i] = identities::run_case(*cases[i], opt.seed, opt.tol_scale);
        }
    };
    const unsigned n = worker_count(opt.threads, cases.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& t : pool) {
        t.join();
    }
    Report rep;
    rep.tool_version = tool_version();
    rep.timestamp = utc_timestamp();
    for (std::vector<CaseRecord>& part : results) {
        std::move(part.begin(), part.end(), std::back_inserter(rep.records));
    }
    rep.summary = summarize(rep.records, skipped);
    return rep;
}

bool gating_passed(const Report& r) {
    return std::all_of(r.records.begin(), r.records.end(),
                       [](const CaseRecord& c) { return c.optional || c.pass; });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional sums with complex bounds and identity verification", "fracsum"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    SumOptions sum;
    CLI::App* sum_cmd = app.add_subcommand("sum", "Evaluate a fractional sum or product of an expression in v");
    sum_cmd->add_option("--expr", sum.expression, "Summand, e.g. \"1/v\" or \"v^0.5 * ln(v)\"")->required();
    sum_cmd->add_option("--sigma", sum.sigma, "Approximation degree: integer, neginf or auto")->required();
    sum_cmd->add_option("--from", sum.from, "Lower bound (complex, e.g. \"1\" or \"0.5+2i\")")->required();
    sum_cmd->add_option("--to", sum.to, "Upper bound (complex)")->required();
    sum_cmd->add_flag("--left", sum.left, "Use the left sum (limit n -> -infinity)");
    sum_cmd->add_flag("--product", sum.product, "Treat the expression as ln f and return the product of f");
    sum_cmd->add_option("--tol", sum.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
    sum_cmd->add_flag("--json", sum.json, "Print a JSON report record");

    VerifyCli verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the identity catalog");
    verify_cmd->add_option("--suite", verify.opt.suite, "all, core, zeta, products, left or optional");
    verify_cmd->add_option("--case", verify.opt.case_ids, "Case id (repeatable)");
    verify_cmd->add_flag("--include-optional", verify.opt.include_optional, "Also evaluate optional cases");
    verify_cmd->add_option("--json", verify.json_path, "Write the JSON report here");
    verify_cmd->add_option("--csv", verify.csv_path, "Write the CSV report here");
    verify_cmd->add_option("--seed", verify.opt.seed, "Seed of the randomized grids");
    verify_cmd->add_option("--tol-scale", verify.opt.tol_scale, "Multiplier on every case tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threads", verify.opt.threads, "Worker threads (0: FRACSUM_THREADS or all cores)");

    SpecialOptions special;
    CLI::App* special_cmd = app.add_subcommand("special", "Evaluate a special function");
    special_cmd->add_option("function", special.function, "zeta, zetad, gamma, lgamma or digamma")
        ->required()
        ->check(CLI::IsMember({"zeta", "zetad", "gamma", "lgamma", "digamma"}));
    special_cmd->add_option("--s", special.s, "Exponent s of zeta(s, x)");
    special_cmd->add_option("--x", special.x, "Argument x");
    special_cmd->add_option("--order", special.order, "Derivative order in s (1 or 2)");
    special_cmd->add_flag("--json", special.json, "Print a JSON report record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (sum_cmd->parsed()) {
        return cmd_sum(sum, out, err);
    }
    if (verify_cmd->parsed()) {
        return cmd_verify(verify, out, err);
    }
    return cmd_special(special, out, err);
}

}  // namespace fracsum::cli
