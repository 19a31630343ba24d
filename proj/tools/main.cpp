#include <iostream>
#include <iterator>
#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/parser.hpp"

namespace {

using omega::cli::CliConfig;

std::string read_expression(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return text;
}

void add_common(CLI::App* cmd, CliConfig& cfg) {
    static const std::map<std::string, omega::Mode> modes{
        {"direct", omega::Mode::direct}, {"dual", omega::Mode::dual}, {"auto", omega::Mode::automatic}};
    static const std::map<std::string, omega::cli::Output> outputs{{"text", omega::cli::Output::text},
                                                                  {"latex", omega::cli::Output::latex},
                                                                  {"json", omega::cli::Output::json}};
    cmd->add_option("--order", cfg.order, "Variable order, comma separated")->delimiter(',');
    cmd->add_option("--lambda", cfg.lambdas, "Lambda variables (default: names starting with 'l')")
        ->delimiter(',');
    cmd->add_option("--elim-order", cfg.elim_order, "Lambda elimination order or 'auto'")->delimiter(',');
    cmd->add_option("--mode", cfg.mode, "direct | dual | auto")->transform(CLI::CheckedTransformer(modes));
    cmd->add_option("--degree", cfg.degree, "Oracle truncation degree");
    cmd->add_option("--output", cfg.output, "text | latex | json")->transform(CLI::CheckedTransformer(outputs));
    cmd->add_flag("--expand", cfg.expand, "Print the denominator expanded");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Omega_>= elimination on Elliott rational functions"};
    app.require_subcommand(1);
    CliConfig cfg;
    std::string expr;
    std::string candidate;

    auto* eliminate = app.add_subcommand("eliminate", "Eliminate every lambda and print the result");
    auto* classify = app.add_subcommand("classify", "Contributing / dually contributing factors per lambda");
    auto* trace = app.add_subcommand("trace", "Print each elimination step");
    auto* verify = app.add_subcommand("verify", "Compare with the truncated-series oracle");
    auto* catalog = app.add_subcommand("catalog", "Check every built-in identity");
    for (auto* cmd : {eliminate, classify, trace, verify, catalog}) add_common(cmd, cfg);
    for (auto* cmd : {eliminate, classify, trace, verify})
        cmd->add_option("expr", expr, "Expression (read from stdin when omitted or '-')");
    verify->add_option("candidate", candidate, "Claimed value; defaults to the engine result");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : omega::cli::input_error;
    }

    try {
        if (*catalog) return omega::cli::run_catalog(cfg, std::cout);
        std::string text = read_expression(expr);
        if (*eliminate) return omega::cli::run_eliminate(text, cfg, std::cout);
        if (*classify) return omega::cli::run_classify(text, cfg, std::cout);
        if (*trace) return omega::cli::run_trace(text, cfg, std::cout);
        std::optional<std::string> cand;
        if (!candidate.empty()) cand = candidate;
        return omega::cli::run_verify(text, cand, cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return omega::cli::input_error;
    }
}
