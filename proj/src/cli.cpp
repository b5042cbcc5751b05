#include "chomp3/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "chomp3/errors.hpp"
#include "chomp3/play.hpp"
#include "chomp3/recurrence.hpp"
#include "chomp3/table_io.hpp"
#include "chomp3/verify.hpp"

namespace chomp3::cli {

namespace {

struct Config {
    Value n_max = 2000;
    std::string engine = "sparse";
    Value oracle_bound = 120;
    Value cubic_bound = 150;
    std::string format = "csv";
    std::string out_path;
    std::size_t memory_ceiling = kDefaultMemoryCeiling;
    std::string inject_fault;
};

void add_engine_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--engine", cfg.engine, "Table engine")
        ->check(CLI::IsMember({"reference", "sparse"}))
        ->capture_default_str();
    cmd->add_option("--memory-ceiling", cfg.memory_ceiling,
                    "Abort with exit code 3 above this many bytes (suffixes k, m, g)")
        ->transform(CLI::AsSizeValue(false))
        ->capture_default_str();
}

FTable build(const Config& cfg, std::ostream& err, bool progress) {
    const ResourceLimits limits{cfg.memory_ceiling};
    const auto start = std::chrono::steady_clock::now();
    if (progress) {
        err << "building f(q,r) for q <= " << cfg.n_max << " with the " << cfg.engine
            << " engine\n";
    }
    FTable table = cfg.engine == "reference" ? build_reference(cfg.n_max, limits)
                                             : build_sparse(cfg.n_max, limits);
    if (progress) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        err << "built " << table.mex_cell_count() << " mex cells in " << ms << " ms, "
            << table.memory_bytes() << " bytes\n";
    }
    return table;
}

int cmd_compute(const Config& cfg, std::ostream& out, std::ostream& err) {
    const ExportFormat format = parse_format(cfg.format);
    const FTable table = build(cfg, err, true);
    if (cfg.out_path.empty()) {
        write_table(out, table, format);
        return kOk;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "cannot open " << cfg.out_path << " for writing\n";
        return kUsage;
    }
    write_table(file, table, format);
    return kOk;
}

int cmd_move(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n_max == 0) {
        err << "move: --n must be at least 1\n";
        return kUsage;
    }
    const FTable table = build(cfg, err, false);
    const OpeningMove m = unique_opening_move(table, cfg.n_max);
    out << "n=" << m.n << " kind=" << to_string(m.kind) << " cut=" << m.move.cut()
        << " target=" << m.target.to_string() << "\n";
    return kOk;
}

int cmd_query(Config cfg, const std::string& literal, std::ostream& out, std::ostream& err) {
    const Position3 pos = parse_position(literal);
    cfg.n_max = pos.p();
    const FTable table = build(cfg, err, false);
    if (is_p_position(table, pos) == Outcome::P) {
        out << "P\n";
        return kOk;
    }
    out << "N winning:";
    const auto wins = winning_moves(table, pos);
    for (std::size_t i = 0; i < wins.size(); ++i) out << (i == 0 ? " " : "; ") << wins[i];
    out << "\n";
    return kOk;
}

struct Fault {
    Value q;
    Value r;
    Value value;
};

Fault parse_fault(const std::string& text) {
    Fault fault{};
    Value* fields[] = {&fault.q, &fault.r, &fault.value};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = i < 2 ? text.find(',', pos) : text.size();
        const std::string_view token = comma == std::string::npos
                                           ? std::string_view{}
                                           : std::string_view(text).substr(pos, comma - pos);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *fields[i]);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw FormatError("--inject-fault expects q,r,value, got '" + text + "'");
        }
        pos = comma + 1;
    }
    return fault;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.oracle_bound > cfg.n_max || cfg.cubic_bound > cfg.n_max) {
        err << "verify: --oracle-bound and --cubic-bound must not exceed --n\n";
        return kUsage;
    }
    FTable table = [&] {
        if (cfg.inject_fault.empty()) return build(cfg, err, true);
        // Faults are injected into a dense copy.
        Config dense = cfg;
        dense.engine = "reference";
        return build(dense, err, true);
    }();
    if (!cfg.inject_fault.empty()) {
        const auto [q, r, value] = parse_fault(cfg.inject_fault);
        table.overwrite(q, r, value);
        err << "injected f(" << q << "," << r << ") = " << value << "\n";
    }
    SuiteBounds bounds;
    if (cfg.oracle_bound > 0) bounds.oracle_bound = cfg.oracle_bound;
    if (cfg.cubic_bound > 0) bounds.cubic_bound = cfg.cubic_bound;

    const auto reports = run_suite(
        table, bounds, ResourceLimits{cfg.memory_ceiling}, [&](const VerificationReport& report) {
            out << to_jsonl(report) << "\n" << std::flush;
            err << report.name << ": " << (report.passed ? "pass" : "FAIL") << " ("
                << report.elapsed.count() << " ms)\n";
        });
    return all_passed(reports) ? kOk : kVerificationFailed;
}

int cmd_play(const Config& cfg, bool engine_first, std::istream& in, std::ostream& out,
             std::ostream& err) {
    if (cfg.n_max == 0) {
        err << "play: --n must be at least 1\n";
        return kUsage;
    }
    const FTable table = build(cfg, err, false);
    return play_session(table, Position3(cfg.n_max, cfg.n_max, cfg.n_max),
                        engine_first ? FirstPlayer::Engine : FirstPlayer::Human, in, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Three-row Chomp solver and table checker", "chomp3"};
    app.require_subcommand(1);

    Config cfg;
    std::string literal;
    bool engine_first = false;

    auto* compute = app.add_subcommand("compute", "Compute and export the f(q,r) table");
    compute->add_option("--n", cfg.n_max, "Largest q")->capture_default_str();
    compute->add_option("--format", cfg.format, "csv, jsonl or runs")
        ->check(CLI::IsMember({"csv", "jsonl", "runs"}))
        ->capture_default_str();
    compute->add_option("--out", cfg.out_path, "Output file (default: standard output)");
    add_engine_flags(compute, cfg);

    auto* move = app.add_subcommand("move", "Print the winning opening move of the 3 x n board");
    move->add_option("--n", cfg.n_max, "Board width")->required();
    add_engine_flags(move, cfg);

    auto* query = app.add_subcommand("query", "Classify a position and list its winning moves");
    query->add_option("position", literal, "Position literal p,q,r")->required();
    add_engine_flags(query, cfg);

    auto* verify = app.add_subcommand("verify", "Run the table checks and the oracle comparison");
    verify->add_option("--n", cfg.n_max, "Largest q of the checked table")->capture_default_str();
    verify->add_option("--oracle-bound", cfg.oracle_bound, "Oracle bound (0 skips)")
        ->capture_default_str();
    verify
        ->add_option("--cubic-bound", cfg.cubic_bound,
                     "Bound for the interval-blocking and rightmost-hole scans (0 skips)")
        ->capture_default_str();
    verify->add_option("--inject-fault", cfg.inject_fault,
                       "Overwrite one cell before checking, as q,r,value");
    add_engine_flags(verify, cfg);

    auto* play = app.add_subcommand("play", "Play against the engine on the 3 x n board");
    play->add_option("--n", cfg.n_max, "Board width")->required();
    play->add_flag("--engine-first", engine_first, "Let the engine make the first move");
    add_engine_flags(play, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(cfg, out, err);
        if (*move) return cmd_move(cfg, out, err);
        if (*query) return cmd_query(cfg, literal, out, err);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*play) return cmd_play(cfg, engine_first, in, out, err);
    } catch (const ResourceExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kResourceCeiling;
    } catch (const TheoremViolation& e) {
        err << e.what() << "\n" << e.dump() << "\n";
        return kTheoremViolation;
    } catch (const InvalidPosition& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace chomp3::cli
