#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schwarz/cli_commands.hpp"

namespace {

using namespace schwarz;

const std::map<std::string, Functional> kFunctionalNames{
    {"F1", Functional::F1}, {"F2", Functional::F2}, {"F3", Functional::F3}};
const std::map<std::string, Th3Variant> kVariantNames{{"stated", Th3Variant::stated},
                                                      {"proof_final", Th3Variant::proof_final},
                                                      {"remark", Th3Variant::remark}};
const std::map<std::string, ExtremalKind> kKindNames{{"omega1", ExtremalKind::omega1},
                                                     {"omega2", ExtremalKind::omega2},
                                                     {"omega3", ExtremalKind::omega3}};
const std::map<std::string, cli::Format> kFormatNames{{"csv", cli::Format::csv},
                                                      {"json", cli::Format::json}};

template <typename T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

int run_to(const std::string& out_path, const std::function<int(std::ostream&)>& body) {
    if (out_path.empty()) return body(std::cout);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    return body(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coefficient bounds for derivative-bounded analytic self-maps of the disk",
                 "schwarz-bounds"};
    app.require_subcommand(1);

    int rc = 0;
    std::string out_path;
    std::string format_name = "csv";
    std::string functional_name;
    double mu = 1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember(keys(kFormatNames)));
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };
    auto add_functional = [&](CLI::App* cmd) {
        cmd->add_option("--functional", functional_name, "Coefficient functional")
            ->required()
            ->check(CLI::IsMember(keys(kFunctionalNames)));
        cmd->add_option("--mu", mu, "Functional weight mu (F1/F2)");
    };

    cli::TableArgs table;
    std::string table_variant;
    CLI::App* table_cmd = app.add_subcommand("table", "Tabulate a closed-form bound over a t grid");
    add_functional(table_cmd);
    table_cmd->add_option("--grid", table.grid, "Grid points on [0,1]");
    table_cmd->add_option("--variant", table_variant, "F2 printed-form variant to tabulate")
        ->check(CLI::IsMember(keys(kVariantNames)));
    add_common(table_cmd);
    table_cmd->callback([&]() {
        table.spec.kind = kFunctionalNames.at(functional_name);
        table.spec.mu = Cx{mu, 0.0};
        if (!table_variant.empty()) table.variant = kVariantNames.at(table_variant);
        table.format = kFormatNames.at(format_name);
        rc = run_to(out_path, [&](std::ostream& os) { return cli::cmd_table(table, os); });
    });

    cli::VerifyArgs verify;
    std::string verify_variant = "remark";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Sample class members and check every inequality");
    verify_cmd->add_option("--samples", verify.opts.samples, "Random members per class");
    verify_cmd->add_option("--depth", verify.opts.depth,
                           "Schur parameters per member (0 = cycle 2..6)");
    verify_cmd->add_option("--seed", verify.opts.seed, "Base RNG seed");
    verify_cmd
        ->add_option("--check-th3-variant", verify_variant,
                     "Which printed form of the |c1 c3 - c2^2| bound to check")
        ->check(CLI::IsMember(keys(kVariantNames)));
    add_common(verify_cmd);
    verify_cmd->callback([&]() {
        verify.opts.th3_variant = kVariantNames.at(verify_variant);
        verify.format = kFormatNames.at(format_name);
        rc = run_to(out_path, [&](std::ostream& os) { return cli::cmd_verify(verify, os); });
    });

    cli::SharpnessArgs sharp;
    CLI::App* sharp_cmd =
        app.add_subcommand("sharpness", "Maximize a functional numerically and report gaps");
    add_functional(sharp_cmd);
    sharp_cmd->add_option("--grid", sharp.grid, "Grid points on [0,1] (ignored with --t)");
    sharp_cmd->add_option("--t", sharp.t_values, "Explicit t values (repeatable)");
    sharp_cmd->add_option("--depth", sharp.cfg.depth, "Schur parameters in the search space");
    sharp_cmd->add_option("--starts", sharp.cfg.starts, "Multistart count");
    sharp_cmd->add_option("--iters", sharp.cfg.iters, "Refinement sweeps per start");
    sharp_cmd->add_option("--seed", sharp.cfg.seed, "Base RNG seed");
    add_common(sharp_cmd);
    sharp_cmd->callback([&]() {
        sharp.spec.kind = kFunctionalNames.at(functional_name);
        sharp.spec.mu = Cx{mu, 0.0};
        sharp.format = kFormatNames.at(format_name);
        rc = run_to(out_path, [&](std::ostream& os) { return cli::cmd_sharpness(sharp, os); });
    });

    cli::ExtremalArgs extremal;
    std::string kind_name;
    CLI::App* extremal_cmd =
        app.add_subcommand("extremal", "Print an extremal's closed-form vs engine coefficients");
    extremal_cmd->add_option("kind", kind_name, "Extremal family")
        ->required()
        ->check(CLI::IsMember(keys(kKindNames)));
    extremal_cmd->add_option("--t", extremal.t, "Family parameter t = |c_1| (ignored by omega1)");
    extremal_cmd->add_option("--order", extremal.order, "Highest coefficient index to print");
    add_common(extremal_cmd);
    extremal_cmd->callback([&]() {
        extremal.kind = kKindNames.at(kind_name);
        extremal.format = kFormatNames.at(format_name);
        rc = run_to(out_path, [&](std::ostream& os) { return cli::cmd_extremal(extremal, os); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "schwarz-bounds: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
