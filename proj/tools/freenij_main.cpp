// Command-line front end: exact symbolic computation in free commutative
// Nijenhuis algebras over a pluggable base bialgebra, plus the axiom suite.
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "freenij/coalgebra.hpp"
#include "freenij/error.hpp"
#include "freenij/exec.hpp"
#include "freenij/hopf.hpp"
#include "freenij/nijenhuis.hpp"
#include "freenij/parse.hpp"
#include "freenij/render.hpp"
#include "freenij/rotabaxter.hpp"
#include "freenij/suite.hpp"

namespace {

using namespace freenij;

void add_base_option(CLI::App *cmd, std::string &slot)
{
    cmd->add_option("--base", slot, "base bialgebra: trivial | onesided | binomial")
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact calculator for free commutative Nijenhuis algebras Sha(A)"};
    app.require_subcommand(1);

    bool serial = false;
    int threads = 0;
    app.add_flag("--serial", serial, "use the serial reference kernels only");
    app.add_option("--threads", threads, "OpenMP thread count (default: runtime choice)");

    // callbacks only record the work; it runs after the global flags are applied
    std::function<int()> action;

    std::string mul_base = "trivial", mul_a, mul_b;
    auto *mul_cmd = app.add_subcommand("mul", "product A dr B");
    mul_cmd->add_option("A", mul_a, "left element")->required();
    mul_cmd->add_option("B", mul_b, "right element")->required();
    add_base_option(mul_cmd, mul_base);
    mul_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(mul_base);
            std::cout << render_element(nij_mul(base, parse_element(mul_a, base),
                                                parse_element(mul_b, base)))
                      << "\n";
            return 0;
        };
    });

    std::string pr_base = "trivial", pr_a;
    auto *pr_cmd = app.add_subcommand("pr", "right shift P_r(A)");
    pr_cmd->add_option("A", pr_a, "element")->required();
    add_base_option(pr_cmd, pr_base);
    pr_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(pr_base);
            std::cout << render_element(p_right(parse_element(pr_a, base))) << "\n";
            return 0;
        };
    });

    std::string coprod_base = "trivial", coprod_a;
    auto *coprod_cmd = app.add_subcommand("coprod", "coproduct Delta_T(A)");
    coprod_cmd->add_option("A", coprod_a, "element")->required();
    add_base_option(coprod_cmd, coprod_base);
    coprod_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(coprod_base);
            std::cout << render_pair(coproduct(base, parse_element(coprod_a, base))) << "\n";
            return 0;
        };
    });

    std::string counit_base = "trivial", counit_a;
    auto *counit_cmd = app.add_subcommand("counit", "counit eps_T(A)");
    counit_cmd->add_option("A", counit_a, "element")->required();
    add_base_option(counit_cmd, counit_base);
    counit_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(counit_base);
            std::cout << counit(base, parse_element(counit_a, base)).str() << "\n";
            return 0;
        };
    });

    std::string antipode_base = "trivial", antipode_a;
    bool antipode_allow = false;
    auto *antipode_cmd = app.add_subcommand("antipode", "right antipode S(A)");
    antipode_cmd->add_option("A", antipode_a, "element")->required();
    antipode_cmd->add_flag("--allow-inadmissible", antipode_allow,
                           "compute even when the base is not admissible");
    add_base_option(antipode_cmd, antipode_base);
    antipode_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(antipode_base);
            std::cout << render_element(
                             antipode(base, parse_element(antipode_a, base), antipode_allow))
                      << "\n";
            return 0;
        };
    });

    std::string conv_base = "trivial", conv_a;
    bool conv_allow = false;
    auto *conv_cmd = app.add_subcommand("conv", "convolution (id * S)(A)");
    conv_cmd->add_option("A", conv_a, "element")->required();
    conv_cmd->add_flag("--allow-inadmissible", conv_allow,
                       "compute even when the base is not admissible");
    add_base_option(conv_cmd, conv_base);
    conv_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(conv_base);
            std::cout << render_element(convolve(base, EndoHandle::identity,
                                                 EndoHandle::antipode,
                                                 parse_element(conv_a, base), conv_allow))
                      << "\n";
            return 0;
        };
    });

    std::string stuffle_base = "trivial";
    std::size_t stuffle_m = 0, stuffle_n = 0;
    std::string stuffle_lambda = "1";
    auto *stuffle_cmd = app.add_subcommand("stuffle", "weighted stuffle u_M *_lambda u_N");
    stuffle_cmd->add_option("M", stuffle_m, "left u-word index")->required();
    stuffle_cmd->add_option("N", stuffle_n, "right u-word index")->required();
    stuffle_cmd->add_option("--lambda", stuffle_lambda, "weight (a rational, e.g. -1 or 3/2)")
        ->capture_default_str();
    add_base_option(stuffle_cmd, stuffle_base);
    stuffle_cmd->callback([&] {
        action = [&]() {
            const Base &base = Base::from_name(stuffle_base);
            const Weight w{parse_rational(stuffle_lambda)};
            std::cout << render_element(stuffle_u(base, stuffle_m, stuffle_n, w)) << "\n";
            return 0;
        };
    });

    std::size_t table_max = 12;
    auto *table_cmd = app.add_subcommand(
        "identity-table", "alternating stuffle coefficient sums (each equals 1)");
    table_cmd->add_option("--max", table_max, "grid bound for m and n")->capture_default_str();
    table_cmd->callback([&] {
        action = [&]() {
            std::cout << "m\\n";
            for (std::size_t n = 0; n <= table_max; ++n) std::cout << "\t" << n;
            std::cout << "\n";
            for (std::size_t m = 0; m <= table_max; ++m) {
                std::cout << m;
                for (std::size_t n = 0; n <= table_max; ++n) {
                    std::cout << "\t" << identity_sum(m, n).get_str();
                }
                std::cout << "\n";
            }
            return 0;
        };
    });

    SuiteConfig cfg;
    bool check_json = false;
    std::string check_out;
    auto *check_cmd = app.add_subcommand("check", "run the axiom suite and report a verdict");
    check_cmd->add_option("--base", cfg.base, "base bialgebra: trivial | onesided | binomial")
        ->capture_default_str();
    check_cmd->add_option("--max-len", cfg.max_len, "word length bound for exhaustive axioms")
        ->capture_default_str();
    check_cmd->add_option("--max-exp", cfg.max_exp, "letter exponent bound")
        ->capture_default_str();
    check_cmd->add_option("--max-u", cfg.max_u, "u-word index bound")->capture_default_str();
    check_cmd->add_option("--trials", cfg.trials, "instance count for randomized axioms")
        ->capture_default_str();
    check_cmd->add_option("--seed", cfg.seed, "seed for randomized axioms")
        ->capture_default_str();
    check_cmd
        ->add_option("--axioms", cfg.axioms,
                     "comma-separated axiom names (default: the whole registry)")
        ->delimiter(',');
    check_cmd->add_flag("--json", check_json, "emit the structured report");
    check_cmd->add_flag("--allow-inadmissible", cfg.allow_inadmissible,
                        "run antipode axioms even on inadmissible bases");
    check_cmd->add_option("--out", check_out, "write the report to this file instead of stdout");
    check_cmd->callback([&] {
        action = [&]() {
            cfg.output = check_json ? OutputMode::json : OutputMode::text;
            const SuiteReport report = run_axiom_suite(cfg);
            const std::string text = check_json ? report.to_json() : report.to_text();
            if (check_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(check_out, std::ios::binary);
                if (!f) throw Error("cannot open '" + check_out + "' for writing");
                f << text;
                std::cout << "verdict: " << (report.verdict_pass() ? "pass" : "fail") << "\n";
            }
            return report.verdict_pass() ? 0 : 1;
        };
    });

    // let the global flags also be written after the subcommand name
    for (CLI::App *sub : app.get_subcommands([](CLI::App *) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
        if (serial) set_exec_mode(ExecMode::serial);
        if (threads > 0) omp_set_num_threads(threads);
        return action ? action() : 0;
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
