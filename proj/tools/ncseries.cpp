#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include <ncseries/cli.hpp>

int main(int argc, char **argv)
{
    using namespace ncs::cli;

    CLI::App app{"Non-commutative power series: Catalan families, identities and path oracles"};
    app.require_subcommand(1);

    const std::map<std::string, output_format> formats{{"text", output_format::text}, {"json", output_format::json}};
    const std::map<std::string, x_mode> x_modes{{"keep", x_mode::keep}, {"comm", x_mode::comm}, {"one", x_mode::one}};

    std::string family;
    int n = 1;
    family_options fopt;
    auto *fam = app.add_subcommand("family", "Print d_n, c_n, u_n or t_n");
    fam->add_option("family", family, "d | c | u | t")->required();
    fam->add_option("n", n, "Index n >= 1")->required();
    fam->add_option("--format", fopt.format, "text | json")->transform(CLI::CheckedTransformer(formats));
    fam->add_option("--x", fopt.x, "keep | comm (x = ab - ba) | one (x = 1)")
        ->transform(CLI::CheckedTransformer(x_modes));
    fam->add_flag("--zero-diag", fopt.zero_diag, "Set a_{1,1} = 0 (family t)");

    std::string suite;
    int degree = 8;
    bool timings = false;
    auto *ver = app.add_subcommand("verify", "Check identities to a truncation degree");
    ver->add_option("suite", suite,
                    "theorem1 | eq2 | eq3-sec2 | theorem4 | remark5 | extraction | involution | dyck | quasidet | all")
        ->required();
    ver->add_option("--degree", degree, "Truncation degree N >= 0");
    ver->add_flag("--timings", timings, "Append elapsed time to each report");

    std::string count_family;
    int n_max = 1;
    bool count_zero_diag = false;
    auto *cnt = app.add_subcommand("counts", "Tabulate monomial counts against their expected sequences");
    cnt->add_option("family", count_family, "d | u | t")->required();
    cnt->add_option("n_max", n_max, "Largest n")->required();
    cnt->add_flag("--zero-diag", count_zero_diag, "Set a_{1,1} = 0 (family t)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage_error;
    }

    try {
        if (*fam) {
            return cmd_family(family, n, fopt, std::cout, std::cerr);
        }
        if (*ver) {
            return cmd_verify(suite, degree, timings, std::cout, std::cerr);
        }
        return cmd_counts(count_family, n_max, count_zero_diag, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_error;
    }
}
