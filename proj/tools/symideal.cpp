// symideal: membership certificates and Groebner exploration for the
// symmetric power-difference ideals. See README.md for the subcommands.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "symideal/cli.hpp"

namespace {

int emit(const symideal::RunReport& report, const std::string& format) {
    std::cout << report.render(format);
    if (format == "json") std::cout << "\n";
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact membership certificates for symmetric power ideals"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int cert_n = 1;
    std::string cert_method = "structured";
    auto* certificate = app.add_subcommand("certificate",
                                           "certificate for (x*y)^(2n-1) in J(2n)");
    certificate->add_option("n", cert_n, "half the generator exponent")->required();
    certificate->add_option("--method", cert_method, "structured or generic")
        ->check(CLI::IsMember({"structured", "generic"}));

    int sym_n = 1, sym_i = 3, sym_j = 4;
    auto* symmetric = app.add_subcommand(
        "symmetric", "four-variable certificate for (x1-x2)^(2n-1)*(xi-xj)^(2n-1)");
    symmetric->add_option("n", sym_n)->required();
    symmetric->add_option("i", sym_i)->required();
    symmetric->add_option("j", sym_j)->required();

    std::string member_ideal, member_poly;
    auto* member = app.add_subcommand("member", "ideal membership by Groebner normal form");
    member->add_option("--ideal", member_ideal, "J:N, Ird:r:d, or a JSON generator file")
        ->required();
    member->add_option("--poly", member_poly, "polynomial in the ideal's variables")->required();

    int contract_N = 2;
    auto* contract = app.add_subcommand("contract", "generators of J(N) /\\ k[x,y]");
    contract->add_option("N", contract_N)->required();

    int betti_r = 1, betti_d = 2;
    auto* betti = app.add_subcommand("betti", "Betti table of R/I_r^(d)");
    betti->add_option("r", betti_r)->required();
    betti->add_option("d", betti_d)->required();

    std::string which;
    int conj_N = 2, conj_r = 1, conj_n = 1;
    bool grid = false;
    std::optional<long long> budget_ms;
    auto* conjecture = app.add_subcommand("conjecture", "test a conjecture instance");
    conjecture->add_option("which", which, "3.5 or 4.1")
        ->required()
        ->check(CLI::IsMember({"3.5", "4.1"}));
    conjecture->add_option("--N", conj_N, "contraction exponent (3.5)");
    conjecture->add_option("--r", conj_r, "number of t-variables (4.1)");
    conjecture->add_option("--n", conj_n, "power parameter (4.1)");
    conjecture->add_flag("--grid", grid, "sweep all instances up to the given bounds");
    long long budget_opt = -1;
    conjecture->add_option("--budget-ms", budget_opt, "wall-clock budget per instance");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate JSON file");
    verify->add_option("file", verify_path)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    if (budget_opt >= 0) budget_ms = budget_opt;

    if (certificate->parsed()) return emit(symideal::cmd_certificate(cert_n, cert_method), format);
    if (symmetric->parsed()) return emit(symideal::cmd_symmetric(sym_n, sym_i, sym_j), format);
    if (member->parsed()) return emit(symideal::cmd_member(member_ideal, member_poly), format);
    if (contract->parsed()) return emit(symideal::cmd_contract(contract_N), format);
    if (betti->parsed()) return emit(symideal::cmd_betti(betti_r, betti_d), format);
    if (conjecture->parsed()) {
        if (which == "3.5") {
            if (grid) {
                // sweep N = 2..conj_N
                int rc = 0;
                for (int N = 2; N <= conj_N; ++N)
                    rc = std::max(rc, emit(symideal::cmd_conjecture35(N), format));
                return rc;
            }
            return emit(symideal::cmd_conjecture35(conj_N), format);
        }
        if (grid) return emit(symideal::cmd_conjecture41_grid(conj_r, conj_n, budget_ms), format);
        return emit(symideal::cmd_conjecture41(conj_r, conj_n, budget_ms), format);
    }
    if (verify->parsed()) return emit(symideal::cmd_verify_file(verify_path), format);
    return 1;
}
