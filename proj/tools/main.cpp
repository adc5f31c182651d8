// Command-line front end: evaluate expressions against set files, run the
// law checker, simplify expressions, and emit CSV plot data.
//
// Exit codes: 0 success, 1 law-check failure, 2 data/expression errors,
// 64 usage errors.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "mnesor/mnesor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitDataError = 2;
constexpr int kExitUsage = 64;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw mnesor::Error("cannot write '" + out_path + "'");
    f << text;
}

struct Domain {
    double lo = 0.0;
    double hi = 1.0;
};

std::optional<Domain> parse_domain(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    Domain d;
    const char* lo_first = s.data();
    const char* lo_last = s.data() + colon;
    const char* hi_first = lo_last + 1;
    const char* hi_last = s.data() + s.size();
    auto lo_res = std::from_chars(lo_first, lo_last, d.lo);
    auto hi_res = std::from_chars(hi_first, hi_last, d.hi);
    if (lo_res.ec != std::errc() || lo_res.ptr != lo_last) return std::nullopt;
    if (hi_res.ec != std::errc() || hi_res.ptr != hi_last) return std::nullopt;
    if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo < d.hi)) return std::nullopt;
    return d;
}

using EnvVariant = std::variant<mnesor::Env<mnesor::DiscreteFuzzySet>, mnesor::Env<mnesor::SampledFuzzySet>>;

EnvVariant build_env(const mnesor::SetFile& file, mnesor::ComplementConfig cfg) {
    using namespace mnesor;
    bool any_discrete = false;
    bool any_sampled = false;
    for (const auto& [name, s] : file.sets)
        (std::holds_alternative<DiscreteFuzzySet>(s) ? any_discrete : any_sampled) = true;
    if (any_discrete && any_sampled)
        throw FormatError("environment mixes discrete and sampled sets; use one carrier per file");

    if (any_sampled) {
        const GridCarrier* grid = nullptr;
        for (const auto& [name, s] : file.sets)
            if (const auto* sampled = std::get_if<SampledFuzzySet>(&s)) {
                grid = &sampled->carrier();
                break;
            }
        Env<SampledFuzzySet> env(*grid, cfg);
        for (const auto& [name, s] : file.sets) env.bind(name, std::get<SampledFuzzySet>(s));
        return env;
    }

    if (!file.universe && !any_discrete)
        throw FormatError("environment defines no sets and no universe; nothing to evaluate on");
    Env<DiscreteFuzzySet> env(*file.universe, cfg);
    for (const auto& [name, s] : file.sets) env.bind(name, std::get<DiscreteFuzzySet>(s));
    return env;
}

int run_eval(const std::vector<std::string>& exprs, const std::string& env_path, double k,
             const std::string& out) {
    using namespace mnesor;
    const SetFile file = load_set_file(env_path);
    EnvVariant env = build_env(file, ComplementConfig{k});

    SetFile result;
    std::visit(
        [&](const auto& e) {
            using EnvT = std::decay_t<decltype(e)>;
            for (const auto& src : exprs) result.sets.emplace_back(src, eval(parse(src), e));
            if constexpr (std::is_same_v<EnvT, Env<DiscreteFuzzySet>>) result.universe = e.carrier();
        },
        env);

    write_output(dump_set_file(result), out);
    return kExitOk;
}

int run_check(const std::string& instance, int cases, std::uint64_t seed, double k, double tol,
              const std::string& out) {
    using namespace mnesor;
    const CheckOptions opt{cases, seed, tol};
    const ComplementConfig cfg{k};
    CheckReport report;
    if (instance == "discrete")
        report = check(discrete_instance(cfg), opt);
    else if (instance == "sampled")
        report = check(sampled_instance(cfg), opt);
    else
        report = check(grade_instance(cfg), opt);
    write_output(report.to_json().dump(2) + "\n", out);
    return report.pass ? kExitOk : kExitCheckFailed;
}

int run_simplify(const std::string& expr, const std::string& out) {
    using namespace mnesor;
    write_output(to_string(simplify(parse(expr))) + "\n", out);
    return kExitOk;
}

// "@oneminus" plots 1 - x, "@ck:<k>" plots c_k(x); both need the plot
// domain to stay inside [0,1].
std::vector<double> pseudo_curve(const std::string& src, const mnesor::GridCarrier& grid) {
    using namespace mnesor;
    auto domain_grade = [&](double x) {
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError("'" + src + "' needs a plot domain inside [0,1], got x = " + std::to_string(x));
        return x;
    };
    std::vector<double> mu;
    mu.reserve(grid.size());
    if (src == "@oneminus") {
        for (int i = 0; i < grid.n(); ++i) mu.push_back(1.0 - domain_grade(grid.coordinate(i)));
        return mu;
    }
    if (src.rfind("@ck:", 0) == 0) {
        const std::string arg = src.substr(4);
        double k = 0.0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (ec != std::errc() || ptr != arg.data() + arg.size() || !(k > 0.0) || !std::isfinite(k))
            throw DomainError("'" + src + "' needs a positive real parameter, e.g. @ck:0.4");
        const ComplementConfig cfg{k};
        for (int i = 0; i < grid.n(); ++i)
            mu.push_back(complement(mnesor::Grade::from_linear(domain_grade(grid.coordinate(i))), cfg).value());
        return mu;
    }
    throw DomainError("unknown pseudo-expression '" + src + "' (expected @oneminus or @ck:<k>)");
}

int run_plot(const std::vector<std::string>& exprs, const std::string& env_path, Domain domain, int samples,
             double k, const std::string& out) {
    using namespace mnesor;
    const GridCarrier grid(domain.lo, domain.hi, samples);
    Env<SampledFuzzySet> env(grid, ComplementConfig{k});
    if (!env_path.empty()) {
        const SetFile file = load_set_file(env_path);
        for (const auto& [name, s] : file.sets) {
            if (std::holds_alternative<DiscreteFuzzySet>(s))
                throw FormatError("set '" + name + "' is discrete; plot needs sampled or shape sets");
            env.bind(name, std::get<SampledFuzzySet>(s));
        }
    }

    struct Curve {
        std::string name;
        std::vector<double> mu;
    };
    std::vector<Curve> curves;
    for (const auto& src : exprs) {
        Curve c;
        c.name = src;
        if (!src.empty() && src[0] == '@') {
            c.mu = pseudo_curve(src, grid);
        } else {
            const SampledFuzzySet v = eval(parse(src), env);
            c.mu.reserve(v.size());
            for (Grade g : v.grades()) c.mu.push_back(g.value());
        }
        curves.push_back(std::move(c));
    }

    std::string csv = "x,name,mu\n";
    char buf[64];
    for (int i = 0; i < samples; ++i) {
        const double x = grid.coordinate(i);
        for (const auto& c : curves) {
            std::snprintf(buf, sizeof buf, "%.9g", x);
            csv += buf;
            csv += ',';
            csv += c.name;
            csv += ',';
            std::snprintf(buf, sizeof buf, "%.9g", c.mu[i]);
            csv += buf;
            csv += '\n';
        }
    }
    write_output(csv, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy set algebra over the max-times semimodule"};
    app.name("mnesor");
    app.require_subcommand(1);

    std::string env_path;
    std::vector<std::string> flag_exprs;
    std::vector<std::string> pos_exprs;
    std::string out_path;
    std::string domain_text;
    std::string instance_pos;
    std::string instance_flag;
    double k = 0.4;
    double tol = 1e-9;
    int cases = 1000;
    int samples = 300;
    std::uint64_t seed = 42;

    auto add_common = [&](CLI::App* cmd, bool with_env) {
        cmd->add_option("-e,--expr", flag_exprs, "expression over the bound set names (repeatable)");
        cmd->add_option("--k", k, "complement family parameter")
            ->default_val("0.4")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "output path (default: standard output)");
        if (with_env) cmd->add_option("--env", env_path, "set-definition JSON file");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate expressions and emit the resulting sets");
    eval_cmd->add_option("exprs", pos_exprs, "expressions");
    add_common(eval_cmd, true);
    eval_cmd->get_option("--env")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "run the law checker against a built-in instance");
    check_cmd->add_option("name", instance_pos, "instance: discrete | sampled | grade")
        ->check(CLI::IsMember({"discrete", "sampled", "grade"}));
    check_cmd->add_option("--instance", instance_flag, "instance: discrete | sampled | grade")
        ->check(CLI::IsMember({"discrete", "sampled", "grade"}));
    check_cmd->add_option("--cases", cases, "randomized trials per law")
        ->default_val("1000")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", seed, "random seed")->default_val("42");
    check_cmd->add_option("--tol", tol, "comparison tolerance")
        ->default_val("1e-9")
        ->check(CLI::NonNegativeNumber);
    add_common(check_cmd, false);

    CLI::App* simplify_cmd = app.add_subcommand("simplify", "rewrite an expression to canonical form");
    simplify_cmd->add_option("expression", pos_exprs, "expression");
    add_common(simplify_cmd, false);

    CLI::App* plot_cmd = app.add_subcommand("plot", "emit CSV curve data (x,name,mu)");
    plot_cmd->add_option("exprs", pos_exprs, "expressions or @oneminus / @ck:<k>");
    plot_cmd->add_option("--domain", domain_text, "plot domain as lo:hi")->required();
    plot_cmd->add_option("--samples", samples, "grid size")
        ->default_val("300")
        ->check(CLI::Range(2, 100000000));
    add_common(plot_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::vector<std::string> exprs = flag_exprs;
    exprs.insert(exprs.end(), pos_exprs.begin(), pos_exprs.end());

    try {
        if (eval_cmd->parsed()) {
            if (exprs.empty()) return usage_error("eval needs at least one expression");
            return run_eval(exprs, env_path, k, out_path);
        }
        if (check_cmd->parsed()) {
            if (!instance_pos.empty() && !instance_flag.empty() && instance_pos != instance_flag)
                return usage_error("conflicting instance names '" + instance_pos + "' and '" + instance_flag +
                                   "'");
            const std::string instance = instance_flag.empty() ? instance_pos : instance_flag;
            if (instance.empty()) return usage_error("check needs an instance: discrete | sampled | grade");
            return run_check(instance, cases, seed, k, tol, out_path);
        }
        if (simplify_cmd->parsed()) {
            if (exprs.size() != 1) return usage_error("simplify needs exactly one expression");
            return run_simplify(exprs.front(), out_path);
        }
        if (plot_cmd->parsed()) {
            if (exprs.empty()) return usage_error("plot needs at least one expression");
            const auto domain = parse_domain(domain_text);
            if (!domain) return usage_error("bad --domain '" + domain_text + "'; expected lo:hi with lo < hi");
            return run_plot(exprs, env_path, *domain, samples, k, out_path);
        }
    } catch (const mnesor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
