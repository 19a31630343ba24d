#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omega/omega.hpp"

namespace omega::cli {

enum class Output { text, latex, json };

struct CliConfig {
    std::vector<std::string> order;
    std::vector<std::string> lambdas;
    std::vector<std::string> elim_order;  ///< empty or {"auto"}: heuristic
    Mode mode = Mode::automatic;
    std::optional<int> degree;
    Output output = Output::text;
    bool expand = false;
};

enum ExitCode { ok = 0, failed = 1, input_error = 2 };

int run_eliminate(const std::string& expr, const CliConfig& cfg, std::ostream& out);
int run_classify(const std::string& expr, const CliConfig& cfg, std::ostream& out);
int run_trace(const std::string& expr, const CliConfig& cfg, std::ostream& out);
/// Without a candidate, checks the engine's own result.
int run_verify(const std::string& expr, const std::optional<std::string>& candidate, const CliConfig& cfg,
               std::ostream& out);
int run_catalog(const CliConfig& cfg, std::ostream& out);

/// Resolves --elim-order names against the order of e.
EliminationStrategy make_strategy(const ElliottRational& e, const CliConfig& cfg);

}  // namespace omega::cli
