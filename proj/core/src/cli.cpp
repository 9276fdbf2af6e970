#include "zetac/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "zetac/classify.hpp"
#include "zetac/dominance.hpp"
#include "zetac/eval.hpp"
#include "zetac/parser.hpp"
#include "zetac/polar.hpp"
#include "zetac/printer.hpp"
#include "zetac/schedule.hpp"
#include "zetac/simplify.hpp"
#include "zetac/transform.hpp"

namespace zetac {

namespace {

constexpr const char* kVersion = "zetac 0.1.0";

struct UsageError {
    std::string message;
};

// A ParseError plus the exact text it points into, for caret rendering.
struct ParseFailure {
    ParseError error;
    std::string input;
};

// ── output cells ────────────────────────────────────────────────────────────

struct Cell {
    enum class Type { Number, Integer, Text, Empty };
    Type type = Type::Empty;
    double number = 0.0;
    std::int64_t integer = 0;
    std::string text;
};

Cell num_cell(double v) { return {Cell::Type::Number, v, 0, {}}; }
Cell int_cell(std::int64_t v) { return {Cell::Type::Integer, 0.0, v, {}}; }
Cell text_cell(std::string s) { return {Cell::Type::Text, 0.0, 0, std::move(s)}; }
Cell empty_cell() { return {}; }

// 17 significant digits: enough for a bit-faithful double round trip.
std::string num17(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string num6(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_field(const Cell& c) {
    switch (c.type) {
        case Cell::Type::Number: return num17(c.number);
        case Cell::Type::Integer: return std::to_string(c.integer);
        case Cell::Type::Text: return c.text;
        case Cell::Type::Empty: return "";
    }
    return "";
}

std::string json_field(const Cell& c) {
    switch (c.type) {
        case Cell::Type::Number:
            if (!std::isfinite(c.number)) return "null";  // JSON has no inf/nan
            return num17(c.number);
        case Cell::Type::Integer: return std::to_string(c.integer);
        case Cell::Type::Text: return "\"" + json_escape(c.text) + "\"";
        case Cell::Type::Empty: return "null";
    }
    return "null";
}

std::string table_field(const Cell& c) {
    switch (c.type) {
        case Cell::Type::Number: return num6(c.number);
        case Cell::Type::Integer: return std::to_string(c.integer);
        case Cell::Type::Text: return c.text;
        case Cell::Type::Empty: return "";
    }
    return "";
}

using Row = std::vector<Cell>;

std::string render_csv(const std::vector<std::string>& headers,
                       const std::vector<Row>& rows) {
    std::string out;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c) out += ',';
        out += headers[c];
    }
    out += '\n';
    for (const Row& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_field(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<std::string>& headers,
                        const std::vector<Row>& rows) {
    std::string out = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += r == 0 ? "\n" : ",\n";
        out += "{";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += ",";
            out += "\"" + headers[c] + "\":" + json_field(rows[r][c]);
        }
        out += "}";
    }
    out += "\n]\n";
    return out;
}

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<Row>& rows) {
    std::vector<std::size_t> width(headers.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
    for (const Row& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(table_field(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out += line[c];
            if (c + 1 < line.size()) {
                out += std::string(width[c] - line[c].size() + 2, ' ');
            }
        }
        out += '\n';
    };
    emit(headers);
    for (const auto& line : cells) emit(line);
    return out;
}

std::string render_rows(const std::string& format,
                        const std::vector<std::string>& headers,
                        const std::vector<Row>& rows) {
    if (format == "csv") return render_csv(headers, rows);
    if (format == "json") return render_json(headers, rows);
    return render_table(headers, rows);
}

// ── diagnostics ─────────────────────────────────────────────────────────────

const char* parse_error_kind_name(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::UnexpectedCharacter: return "unexpected character";
        case ParseErrorKind::UnexpectedToken: return "unexpected token";
        case ParseErrorKind::UnbalancedParenthesis: return "unbalanced parenthesis";
        case ParseErrorKind::UnknownFunction: return "unknown function";
        case ParseErrorKind::MalformedNumber: return "malformed number";
        case ParseErrorKind::EmptyInput: return "empty input";
    }
    return "parse error";
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        out += (static_cast<unsigned char>(c) >= 0x20 && c != 0x7f) ? c : '?';
    }
    return out;
}

std::string render_parse_error(const std::string& input, const ParseError& e) {
    std::ostringstream os;
    os << "error: " << parse_error_kind_name(e.kind()) << " at " << e.span().start
       << ".." << e.span().end << ": " << e.what() << "\n";
    os << "  " << sanitize(input) << "\n";
    os << "  " << std::string(std::min(e.span().start, input.size()), ' ');
    const std::size_t caret_width =
        e.span().end > e.span().start ? e.span().end - e.span().start : 1;
    os << std::string(caret_width, '^') << "\n";
    return os.str();
}

// ── shared option plumbing ──────────────────────────────────────────────────

struct Options {
    std::string schedule_text;
    std::string format = "table";
    double log_base = std::numbers::e;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    long long tail_window = 0;  // 0: schedule default
    double alpha = 1.0;
    double beta = 0.0;
    std::string out_path;
    double phase_tol = 1e-3;
    long long phase_flips = 3;

    std::string expr1, expr2;
    long long eval_n = 0;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--schedule", opt.schedule_text,
                    "Sample schedule: geometric:<start>:<factor>:<count> or list:v1,v2,... "
                    "(default from ZETA_DEFAULT_SCHEDULE, else geometric:2:2:40)");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--log-base", opt.log_base,
                    "Base for the bare 'log' keyword (default: natural)");
    cmd->add_option("--tol-abs", opt.tol_abs, "Absolute realness tolerance")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol-rel", opt.tol_rel, "Relative realness tolerance")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tail-window", opt.tail_window,
                    "Trailing points used for limit and ratio estimates");
}

EvalSettings settings_of(const Options& opt) {
    if (!(std::isfinite(opt.log_base) && opt.log_base > 0.0 && opt.log_base != 1.0)) {
        throw UsageError{"--log-base must be a finite real > 0 and != 1"};
    }
    EvalSettings s;
    s.log_base_for_bare_log = opt.log_base;
    return s;
}

ExprPtr parse_checked(const std::string& text, const EvalSettings& settings) {
    try {
        return parse(text, settings);
    } catch (const ParseError& e) {
        throw ParseFailure{e, text};
    }
}

SampleSchedule resolve_schedule(const Options& opt) {
    std::string text = opt.schedule_text;
    if (text.empty()) {
        if (const char* env = std::getenv("ZETA_DEFAULT_SCHEDULE")) text = env;
    }
    SampleSchedule schedule = [&] {
        if (text.empty()) return default_schedule();
        try {
            return parse_schedule(text);
        } catch (const ParseError& e) {
            throw ParseFailure{e, text};
        }
    }();
    if (opt.tail_window != 0) {
        if (opt.tail_window < 1 ||
            static_cast<std::size_t>(opt.tail_window) > schedule.size()) {
            throw UsageError{"--tail-window must be in [1, schedule length]"};
        }
        schedule = schedule.with_tail_window(static_cast<std::size_t>(opt.tail_window));
    }
    return schedule;
}

const char* relation_token(Dominance d) {
    switch (d) {
        case Dominance::StrictlyDominated: return "DOMINATED";
        case Dominance::StrictlyDominates: return "DOMINATES";
        case Dominance::ThetaEquivalent: return "THETA";
        case Dominance::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

// ── commands ────────────────────────────────────────────────────────────────

void cmd_eval(const Options& opt, CommandResult& result) {
    if (opt.eval_n < 2) throw UsageError{"n must be an integer >= 2"};
    const EvalSettings settings = settings_of(opt);
    const ExprPtr f = parse_checked(opt.expr1, settings);
    const ComplexValue v = evaluate(f, opt.eval_n, settings);
    result.stdout_payload = render_rows(
        opt.format, {"n", "re", "im"},
        {{int_cell(opt.eval_n), num_cell(v.re), num_cell(v.im)}});
}

void cmd_decompose(const Options& opt, CommandResult& result) {
    const EvalSettings settings = settings_of(opt);
    const ExprPtr f = parse_checked(opt.expr1, settings);
    const SampleSchedule schedule = resolve_schedule(opt);
    std::vector<Row> rows;
    for (std::int64_t n : schedule.points()) {
        const PolarSample s = decompose_at(f, n, settings);
        rows.push_back({int_cell(n), num_cell(s.value.re), num_cell(s.value.im),
                        num_cell(s.g), num_cell(s.phi)});
    }
    result.stdout_payload =
        render_rows(opt.format, {"n", "re", "im", "g", "phi"}, rows);
}

void cmd_plot(const Options& opt, CommandResult& result) {
    const EvalSettings settings = settings_of(opt);
    const ExprPtr f = parse_checked(opt.expr1, settings);
    const SampleSchedule schedule = resolve_schedule(opt);
    std::vector<Row> rows;
    bool have_prev = false;
    double prev_phi = 0.0;
    for (std::int64_t n : schedule.points()) {
        const PolarSample s = decompose_at(f, n, settings);
        Cell darg = have_prev ? num_cell(s.phi - prev_phi) : empty_cell();
        rows.push_back({int_cell(n), num_cell(s.value.re), num_cell(s.value.im),
                        num_cell(s.g), num_cell(s.phi), darg});
        prev_phi = s.phi;
        have_prev = true;
    }
    const std::string csv = render_csv({"n", "re", "im", "g", "phi", "darg"}, rows);
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << csv) || !out.flush()) {
        result.exit_code = 1;
        result.stderr_diagnostics = "error: cannot write '" + opt.out_path + "'\n";
        return;
    }
    result.stdout_payload = std::to_string(rows.size()) + "\n";
}

void cmd_compare(const Options& opt, CommandResult& result) {
    const EvalSettings settings = settings_of(opt);
    const ExprPtr f1 = parse_checked(opt.expr1, settings);
    const ExprPtr f2 = parse_checked(opt.expr2, settings);
    const SampleSchedule schedule = resolve_schedule(opt);
    const DominanceVerdict v = compare_modulus(f1, f2, schedule);

    if (opt.format == "table") {
        std::string out;
        out += "relation: " + std::string(relation_token(v.relation)) + "\n";
        out += "trend_slope: " + num6(v.trend_slope) + "\n\n";
        std::vector<Row> rows;
        for (const RatioPoint& p : v.ratio_evidence) {
            rows.push_back({int_cell(p.n), num_cell(p.ratio)});
        }
        out += render_table({"n", "ratio"}, rows);
        result.stdout_payload = out;
        return;
    }
    std::vector<Row> rows;
    for (const RatioPoint& p : v.ratio_evidence) {
        rows.push_back({text_cell(relation_token(v.relation)), num_cell(v.trend_slope),
                        int_cell(p.n), num_cell(p.ratio)});
    }
    result.stdout_payload =
        render_rows(opt.format, {"relation", "trend_slope", "n", "ratio"}, rows);
}

void cmd_transform(const Options& opt, CommandResult& result) {
    if (opt.alpha == 0.0 || !std::isfinite(opt.alpha) || !std::isfinite(opt.beta)) {
        throw UsageError{"--alpha must be a finite nonzero real (--beta finite)"};
    }
    const EvalSettings settings = settings_of(opt);
    const ExprPtr g = parse_checked(opt.expr1, settings);
    const SampleSchedule schedule = resolve_schedule(opt);
    const ExprPtr f = transform_to_real(g, {opt.alpha, opt.beta}, schedule,
                                        opt.tol_abs, opt.tol_rel, settings);
    const std::string text = print_canonical(f);
    if (opt.format == "table") {
        result.stdout_payload = text + "\n";
        return;
    }
    result.stdout_payload = render_rows(opt.format, {"expr"}, {{text_cell(text)}});
}

void cmd_classify(const Options& opt, CommandResult& result) {
    const EvalSettings settings = settings_of(opt);
    const ExprPtr f = parse_checked(opt.expr1, settings);
    SampleSchedule schedule = resolve_schedule(opt);
    if (opt.phase_tol <= 0.0) throw UsageError{"--phase-tol must be > 0"};
    if (opt.phase_flips < 1) throw UsageError{"--phase-flips must be >= 1"};

    GrowthLabel label = classify_zeta(f, schedule, settings);
    PhaseLimitOptions phase_options;
    phase_options.convergence_window = opt.phase_tol;
    phase_options.min_sign_flips = static_cast<int>(opt.phase_flips);
    label.limiting_phase = phase_limit(f, schedule, settings, phase_options);

    const bool poly = label.family == GrowthFamily::Polynomial;
    const PhaseLimit& ph = label.limiting_phase;

    if (opt.format == "table") {
        std::string out = growth_family_name(label.family);
        if (poly) out += " degree≈" + num6(label.degree);
        out += ", phase→";
        switch (ph.kind) {
            case PhaseLimitKind::ConvergesTo: out += num6(ph.value); break;
            case PhaseLimitKind::Oscillates: out += "oscillates"; break;
            case PhaseLimitKind::Undetermined: out += "undetermined"; break;
        }
        result.stdout_payload = out + "\n";
        return;
    }
    Row row{text_cell(growth_family_name(label.family)),
            poly ? num_cell(label.degree) : empty_cell(),
            text_cell(ph.kind == PhaseLimitKind::ConvergesTo  ? "converges"
                      : ph.kind == PhaseLimitKind::Oscillates ? "oscillates"
                                                              : "undetermined"),
            ph.kind == PhaseLimitKind::ConvergesTo ? num_cell(ph.value) : empty_cell()};
    result.stdout_payload = render_rows(
        opt.format, {"family", "degree", "phase", "phase_value"}, {row});
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CommandResult result;
    Options opt;

    CLI::App app{"Complex-valued growth analysis for complexity functions", "zetac"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Sample f(n) and emit n, re, im, modulus g, phase phi");
    decompose->add_option("expr", opt.expr1, "Complexity expression")->required();
    add_common_flags(decompose, opt);

    CLI::App* compare = app.add_subcommand(
        "compare", "Compare modulus growth of two expressions over the schedule tail");
    compare->add_option("expr1", opt.expr1, "Left expression")->required();
    compare->add_option("expr2", opt.expr2, "Right expression")->required();
    add_common_flags(compare, opt);

    CLI::App* transform = app.add_subcommand(
        "transform", "Map a real nonnegative complexity through (g - beta)/alpha");
    transform->add_option("expr", opt.expr1, "Complexity expression")->required();
    transform->add_option("--alpha", opt.alpha, "Affine scale (nonzero)");
    transform->add_option("--beta", opt.beta, "Affine offset");
    add_common_flags(transform, opt);

    CLI::App* plot = app.add_subcommand(
        "plot", "Write trajectory CSV (decompose columns plus phase step darg)");
    plot->add_option("expr", opt.expr1, "Complexity expression")->required();
    plot->add_option("--out", opt.out_path, "Output CSV path")->required();
    add_common_flags(plot, opt);

    CLI::App* classify = app.add_subcommand(
        "classify", "Label modulus growth and the limiting phase");
    classify->add_option("expr", opt.expr1, "Complexity expression")->required();
    classify->add_option("--phase-tol", opt.phase_tol,
                         "Phase convergence window in radians (default 1e-3)");
    classify->add_option("--phase-flips", opt.phase_flips,
                         "Sign flips needed to call the phase oscillating (default 3)");
    add_common_flags(classify, opt);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate f(n) at one cardinality");
    eval->add_option("expr", opt.expr1, "Complexity expression")->required();
    eval->add_option("n", opt.eval_n, "Cardinality (integer >= 2)")->required();
    add_common_flags(eval, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.stdout_payload = app.help();
        return result;
    } catch (const CLI::CallForVersion&) {
        result.stdout_payload = std::string(kVersion) + "\n";
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.stderr_diagnostics = std::string("usage error: ") + e.what() + "\n";
        return result;
    }

    try {
        if (decompose->parsed()) {
            cmd_decompose(opt, result);
        } else if (compare->parsed()) {
            cmd_compare(opt, result);
        } else if (transform->parsed()) {
            cmd_transform(opt, result);
        } else if (plot->parsed()) {
            cmd_plot(opt, result);
        } else if (classify->parsed()) {
            cmd_classify(opt, result);
        } else if (eval->parsed()) {
            cmd_eval(opt, result);
        } else {
            result.exit_code = 2;
            result.stderr_diagnostics =
                "usage error: expected a subcommand "
                "(decompose|compare|transform|plot|classify|eval)\n" +
                app.help();
        }
    } catch (const UsageError& e) {
        result.exit_code = 2;
        result.stderr_diagnostics = "usage error: " + e.message + "\n";
    } catch (const ParseFailure& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = render_parse_error(e.input, e.error);
    } catch (const ParseError& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const TransformError& e) {
        result.exit_code = e.kind() == TransformErrorKind::ZeroAlpha ? 2 : 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const EvalError& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const ZeroDenominatorError& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const ScheduleError& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.stderr_diagnostics = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace zetac
