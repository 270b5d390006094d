#include "iqlat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "iqlat/report_json.hpp"

namespace iqlat::cli {

namespace {

// Data lands on `out` unless --out FILE was given.
int emit(const std::string& payload, const RunConfig& cfg, std::ostream& out, std::ostream& err,
         int code) {
    if (cfg.out_path.empty()) {
        out << payload;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out_path << "'\n";
            return 2;
        }
        file << payload;
    }
    return code;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--d", cfg.d, "field parameter d of Q(sqrt(-d))")->required();
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    sub->add_option("--out", cfg.out_path, "write data to FILE instead of standard output");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shell enumeration, design tests, and verification harnesses for the "
                 "class-number-one imaginary quadratic lattices"};
    app.name("iqlat");
    app.require_subcommand(1);

    RunConfig cfg;
    std::function<int()> action;

    // theta
    {
        CLI::App* sub = app.add_subcommand("theta", "theta series coefficient table");
        add_common(sub, cfg);
        sub->add_option("--max", cfg.max_norm, "largest norm")->required();
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const ThetaTable table = theta_coeffs(f, cfg.max_norm, opt);
                const std::string payload =
                    cfg.format == "csv" ? theta_csv(table) : to_json(table, f.d) + "\n";
                return emit(payload, cfg, out, err, 0);
            };
        });
    }

    // shell
    {
        CLI::App* sub = app.add_subcommand("shell", "list all lattice points of one norm");
        add_common(sub, cfg);
        sub->add_option("--m", cfg.m, "shell norm")->required()->check(CLI::PositiveNumber);
        sub->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                const Shell shell = enumerate_shell(f, cfg.m);
                return emit(to_json(shell, f.d) + "\n", cfg, out, err, 0);
            };
        });
    }

    // design
    {
        CLI::App* sub = app.add_subcommand("design", "exact design strength of one shell");
        add_common(sub, cfg);
        sub->add_option("--m", cfg.m, "shell norm")->required()->check(CLI::PositiveNumber);
        sub->add_option("--tmax", cfg.t_max, "largest harmonic to test")
            ->check(CLI::PositiveNumber);
        sub->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                const DesignReport report = design_strength(f, cfg.m, cfg.t_max);
                return emit(to_json(report) + "\n", cfg, out, err, 0);
            };
        });
    }

    // survey
    {
        CLI::App* sub = app.add_subcommand(
            "survey", "power-sum survey of every nonempty shell up to a bound");
        add_common(sub, cfg);
        sub->add_option("--max", cfg.max_norm, "largest norm")->required()
            ->check(CLI::PositiveNumber);
        sub->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const SurveyResult result = survey_design_theorem(f, cfg.max_norm, opt);
                err << "survey d=" << result.d << " max=" << result.max_norm << ": checked "
                    << result.checked << " nonempty shells in "
                    << fmt_double(result.elapsed_seconds) << " s\n";
                return emit(to_json(result) + "\n", cfg, out, err,
                            result.violations.empty() ? 0 : 1);
            };
        });
    }

    // verify
    {
        CLI::App* ver = app.add_subcommand("verify", "exhaustive verification harnesses");
        ver->require_subcommand(1);

        CLI::App* mul = ver->add_subcommand("multiplicativity",
                                            "a'(mn) = a'(m)a'(n) for coprime pairs");
        add_common(mul, cfg);
        mul->add_option("--max", cfg.max_norm, "largest product mn")->required()
            ->check(CLI::PositiveNumber);
        mul->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const auto result = verify_multiplicativity(f, cfg.max_norm, opt);
                return emit(to_json(result) + "\n", cfg, out, err,
                            result.violations.empty() ? 0 : 1);
            };
        });

        CLI::App* cnt = ver->add_subcommand("count-formula",
                                            "a(m) = w F(m), sweep vs formula");
        add_common(cnt, cfg);
        cnt->add_option("--max", cfg.max_norm, "largest norm")->required()
            ->check(CLI::PositiveNumber);
        cnt->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const auto result = verify_count_formula(f, cfg.max_norm, opt);
                return emit(to_json(result) + "\n", cfg, out, err,
                            result.violations.empty() ? 0 : 1);
            };
        });

        CLI::App* cal = ver->add_subcommand(
            "calcut", "real powers occur exactly on the admissible angle class");
        add_common(cal, cfg);
        cal->add_option("--box", cfg.box, "coordinate box |a|,|b| <= B")
            ->check(CLI::PositiveNumber);
        cal->add_option("--power", cfg.max_power, "largest exponent tested")
            ->check(CLI::PositiveNumber);
        cal->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const auto result = verify_calcut(f, cfg.box, cfg.max_power, opt);
                return emit(to_json(result) + "\n", cfg, out, err,
                            result.counterexamples.empty() ? 0 : 1);
            };
        });

        CLI::App* sine = ver->add_subcommand(
            "sine-product", "analytic sine-ratio product vs exact power sums");
        add_common(sine, cfg);
        sine->add_option("--max", cfg.max_norm, "largest norm")->required()
            ->check(CLI::PositiveNumber);
        sine->add_option("--tol", cfg.tolerance, "absolute tolerance")
            ->check(CLI::PositiveNumber);
        sine->callback([&] {
            action = [&]() -> int {
                const FieldParams f = make_field(cfg.d);
                SweepOptions opt;
                opt.threads = cfg.threads;
                const auto result = verify_sine_product(f, cfg.max_norm, cfg.tolerance, opt);
                return emit(to_json(result) + "\n", cfg, out, err,
                            result.violations.empty() ? 0 : 1);
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return action();
    } catch (const EmptyShellError& e) {
        err << "error: " << e.what() << " (no design test on an empty shell)\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace iqlat::cli
