#include "cli/commands.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cli/parser.hpp"
#include "cli/render.hpp"
#include "omega/catalog.hpp"
#include "omega/oracle.hpp"
#include "omega/print.hpp"

namespace omega::cli {

namespace {

using json = nlohmann::ordered_json;

ParseOptions parse_options(const CliConfig& cfg) { return {cfg.order, cfg.lambdas}; }

std::string render(const ElliottRational& e, const CliConfig& cfg) {
    switch (cfg.output) {
        case Output::latex: return to_latex(e, cfg.expand);
        case Output::json: return to_json(e).dump();
        case Output::text: break;
    }
    return cfg.expand ? to_string_expanded(e) : to_string(e);
}

json factors_json(const std::vector<Factor>& fs, const VariableOrder& order) {
    json arr = json::array();
    for (const auto& f : sorted_factors(fs, order)) arr.push_back(to_json(f, order));
    return arr;
}

std::string factor_list(const std::vector<Factor>& fs, const VariableOrder& order, bool latex) {
    if (fs.empty()) return "-";
    std::string out;
    for (const auto& f : sorted_factors(fs, order)) {
        if (!out.empty()) out += latex ? "" : " ";
        out += latex ? to_latex(f, order) : to_string(f, order);
    }
    return out;
}

}  // namespace

EliminationStrategy make_strategy(const ElliottRational& e, const CliConfig& cfg) {
    EliminationStrategy s;
    s.mode = cfg.mode;
    if (cfg.elim_order.empty() || (cfg.elim_order.size() == 1 && cfg.elim_order[0] == "auto")) return s;
    for (const auto& name : cfg.elim_order) {
        Symbol sym(name);
        if (!e.order().is_lambda(sym)) throw Error("--elim-order: '" + name + "' is not a lambda variable");
        s.lambda_order.push_back(sym);
    }
    return s;
}

int run_eliminate(const std::string& expr, const CliConfig& cfg, std::ostream& out) {
    auto e = parse(expr, parse_options(cfg));
    auto [result, log] = omega_eliminate_all(e, make_strategy(e, cfg));
    out << render(result, cfg) << '\n';
    return ok;
}

int run_classify(const std::string& expr, const CliConfig& cfg, std::ostream& out) {
    auto e = parse(expr, parse_options(cfg));
    const auto& order = e.order();
    auto rows = classify(e);
    if (cfg.output == Output::json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"lambda", r.lambda.name()},
                           {"numerator", to_json(e).at("numerator")},
                           {"contributing", factors_json(r.contributing, order)},
                           {"c_num", r.c_num},
                           {"dually_contributing", factors_json(r.dually_contributing, order)},
                           {"dc_num", r.dc_num}});
        }
        out << arr.dump() << '\n';
        return ok;
    }
    const bool latex = cfg.output == Output::latex;
    std::vector<std::array<std::string, 6>> table;
    table.push_back({"lambda", "numerator", "contributing", "C-Num", "dually contributing", "DC-Num"});
    for (const auto& r : rows) {
        const auto& num = e.numerator();
        table.push_back({latex ? latex_name(r.lambda.name()) : r.lambda.name(),
                         latex ? to_latex(num, order) : to_string(num, order),
                         factor_list(r.contributing, order, latex), std::to_string(r.c_num),
                         factor_list(r.dually_contributing, order, latex), std::to_string(r.dc_num)});
    }
    if (latex) {
        out << "\\begin{array}{|c|c|c|c|c|c|}\\hline\n";
        for (const auto& row : table) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " & " : "") << row[i];
            out << " \\\\ \\hline\n";
        }
        out << "\\end{array}\n";
        return ok;
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : table)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : table) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size()) cell.resize(width[i] + 2, ' ');
            line += cell;
        }
        out << line << '\n';
    }
    return ok;
}

int run_trace(const std::string& expr, const CliConfig& cfg, std::ostream& out) {
    auto e = parse(expr, parse_options(cfg));
    auto [result, log] = omega_eliminate_all(e, make_strategy(e, cfg));
    const auto& order = e.order();
    if (cfg.output == Output::json) {
        json steps = json::array();
        for (const auto& s : log.steps) {
            steps.push_back({{"lambda", s.lambda.name()},
                             {"mode", mode_name(s.mode)},
                             {"underlined", factors_json(s.underlined, order)},
                             {"input", to_json(s.input)},
                             {"result", to_json(s.result)}});
        }
        out << json{{"input", to_json(e)}, {"steps", steps}, {"result", to_json(result)}}.dump() << '\n';
        return ok;
    }
    const bool latex = cfg.output == Output::latex;
    out << "input: " << render(e, cfg) << '\n';
    int n = 0;
    for (const auto& s : log.steps) {
        out << "step " << ++n << ": " << s.lambda.name() << ' ' << mode_name(s.mode) << ", underlined "
            << factor_list(s.underlined, order, latex) << '\n';
        out << "  in:  " << render(s.input, cfg) << '\n';
        out << "  out: " << render(s.result, cfg) << '\n';
    }
    out << "result: " << render(result, cfg) << '\n';
    return ok;
}

int run_verify(const std::string& expr, const std::optional<std::string>& candidate, const CliConfig& cfg,
               std::ostream& out) {
    const int degree = cfg.degree.value_or(6);
    auto idents = identifiers(expr);
    if (candidate)
        for (auto& v : identifiers(*candidate))
            if (std::find(idents.begin(), idents.end(), v) == idents.end()) idents.push_back(v);
    auto order = resolve_order(idents, parse_options(cfg));
    auto e = parse(expr, order);
    ElliottRational r = candidate ? parse(*candidate, order) : omega_eliminate_all(e, make_strategy(e, cfg)).first;
    for (Symbol l : order->lambdas())
        if (r.contains(l)) throw Error("candidate must be free of lambda variables");
    auto v = verify(e, r, degree);
    if (cfg.output == Output::json) {
        json mm = nullptr;
        if (v.mismatch)
            mm = {{"monomial", to_json(v.mismatch->monomial, *order)},
                  {"expected", v.mismatch->expected.get_str()},
                  {"got", v.mismatch->got.get_str()}};
        out << json{{"ok", v.ok}, {"degree", degree}, {"mismatch", mm}}.dump() << '\n';
    } else if (v.ok) {
        out << "PASS: oracle agrees through degree " << degree << '\n';
    } else {
        out << "FAIL: coefficient of " << to_string(v.mismatch->monomial, *order) << ": oracle "
            << v.mismatch->expected.get_str() << ", candidate " << v.mismatch->got.get_str() << '\n';
    }
    return v.ok ? ok : failed;
}

int run_catalog(const CliConfig& cfg, std::ostream& out) {
    const int degree = cfg.degree.value_or(4);
    auto entries = all_entries();
    std::size_t passed = 0;
    json arr = json::array();
    std::size_t id_width = 0;
    for (const auto& e : entries) id_width = std::max(id_width, e.id.size());
    for (const auto& e : entries) {
        auto rep = check_entry(e, degree);
        passed += rep.ok() ? 1 : 0;
        if (cfg.output == Output::json) {
            json params = json::object();
            for (const auto& [k, v] : e.parameters) params[k] = v;
            arr.push_back({{"id", e.id},
                           {"parameters", params},
                           {"provenance", e.provenance},
                           {"symbolic", rep.symbolic_ok},
                           {"oracle", rep.oracle_ok},
                           {"error", rep.error},
                           {"millis", rep.millis}});
            continue;
        }
        std::ostringstream line;
        line << (rep.ok() ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(id_width) + 2) << e.id
             << std::right << std::fixed << std::setprecision(2) << std::setw(9) << rep.millis << " ms  "
             << e.provenance;
        if (!rep.error.empty()) line << "  [" << rep.error << "]";
        else if (!rep.symbolic_ok) line << "  [closed form differs]";
        else if (!rep.oracle_ok) line << "  [oracle mismatch]";
        out << line.str() << '\n';
    }
    if (cfg.output == Output::json)
        out << arr.dump() << '\n';
    else
        out << passed << '/' << entries.size() << " entries passed (oracle degree " << degree << ")\n";
    return passed == entries.size() ? ok : failed;
}

}  // namespace omega::cli
