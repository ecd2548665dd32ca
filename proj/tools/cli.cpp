#include "cli.hpp"

#include "seki/bench.hpp"
#include "seki/seki_db.hpp"
#include "seki/seki_verifier.hpp"
#include "seki/solver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace seki::cli {

namespace {

struct BadFlag : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "5", "5..8", "5-8" or "5,7".
std::set<int> parse_sizes(const std::string& text) {
    std::set<int> sizes;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw BadFlag("bad size list: " + text);
        }
        if (used != s.size()) throw BadFlag("bad size list: " + text);
        if (v < kMinAreaSize || v > kMaxAreaSize) throw BadFlag("sizes must lie in 5..8: " + text);
        return v;
    };
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto range = item.find("..");
        std::size_t skip = 2;
        if (range == std::string::npos) {
            range = item.find('-');
            skip = 1;
        }
        if (range == std::string::npos) {
            sizes.insert(number(item));
            continue;
        }
        int lo = number(item.substr(0, range)), hi = number(item.substr(range + skip));
        if (lo > hi) throw BadFlag("empty size range: " + item);
        for (int n = lo; n <= hi; ++n) sizes.insert(n);
    }
    if (sizes.empty()) throw BadFlag("no sizes given");
    return sizes;
}

Board read_board(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream text;
    text << in.rdbuf();
    return Board(Position::from_text(text.str()));
}

SekiDatabase read_db(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw IoError("cannot open " + path);
    return SekiDatabase::load_file(path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local seki database and Killall-Go solver"};
    app.require_subcommand(1, 1);

    std::string sizes_text = "5..8", out_path;
    int threads = 1;
    auto* gen = app.add_subcommand("gen", "Enumerate, verify and store seki patterns");
    gen->add_option("--sizes", sizes_text, "Area sizes, e.g. 5..8 or 5,6");
    gen->add_option("--out", out_path, "Database file")->required();
    gen->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

    std::string pattern_text;
    auto* verify = app.add_subcommand("verify-one", "Classify one pattern");
    verify->add_option("--pattern", pattern_text, "Rows split by '/': e empty, b black, - outside")->required();

    std::string db_path, board_path, last_text;
    auto* query_cmd = app.add_subcommand("query", "Look up the region around a move");
    query_cmd->add_option("--db", db_path)->required();
    query_cmd->add_option("--board", board_path)->required();
    query_cmd->add_option("--last-move", last_text, "col,row")->required();

    std::uint64_t max_nodes = SolveLimits{}.max_nodes;
    double max_seconds = SolveLimits{}.max_seconds;
    auto* solve_cmd = app.add_subcommand("solve", "Prove the value of a board");
    solve_cmd->add_option("--board", board_path)->required();
    solve_cmd->add_option("--db", db_path);
    solve_cmd->add_option("--max-nodes", max_nodes);
    solve_cmd->add_option("--max-seconds", max_seconds);

    std::string suite_dir;
    std::uint64_t budget = BenchOptions{}.node_budget;
    auto* bench_cmd = app.add_subcommand("bench", "Solve a fixture suite with and without the database");
    bench_cmd->add_option("--suite", suite_dir)->required();
    bench_cmd->add_option("--db", db_path)->required();
    bench_cmd->add_option("--max-nodes", max_nodes);
    bench_cmd->add_option("--budget", budget, "Node budget for solve rates");

    auto* stats_cmd = app.add_subcommand("stats", "Per-size counts and seki rates");
    stats_cmd->add_option("--db", db_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadFlags;
    }

    try {
        if (gen->parsed()) {
            BuildOptions options;
            options.threads = threads;
            options.on_size_done = [&](const DatabaseStats& s) { out << format_stats_line(s) << '\n'; };
            SekiDatabase db = build_database(parse_sizes(sizes_text), options);
            if (auto dir = std::filesystem::path(out_path).parent_path(); !dir.empty()) std::filesystem::create_directories(dir);
            db.save_file(out_path);
        } else if (verify->parsed()) {
            Pattern p;
            try {
                p = parse_pattern(pattern_text);
            } catch (const std::invalid_argument& e) {
                throw BadFlag(e.what());
            }
            if (p.size() < kMinAreaSize || p.size() > kMaxAreaSize) throw BadFlag("pattern area must have 5..8 cells");
            out << to_string(verify_local_outcome(p)) << '\n';
        } else if (query_cmd->parsed()) {
            auto last = parse_coord(last_text);
            if (!last) throw BadFlag("bad coordinate: " + last_text);
            SekiDatabase db = read_db(db_path);
            Board board = read_board(board_path);
            auto r = query(db, board, *last);
            out << (r.hit ? "Hit" : "Miss") << '\n';
        } else if (solve_cmd->parsed()) {
            std::optional<SekiDatabase> db;
            if (!db_path.empty()) db = read_db(db_path);
            Board board = read_board(board_path);
            SolveLimits limits;
            limits.max_nodes = max_nodes;
            limits.max_seconds = max_seconds;
            out << format_result(solve(board, limits, db ? &*db : nullptr)) << '\n';
        } else if (bench_cmd->parsed()) {
            SekiDatabase db = read_db(db_path);
            if (!std::filesystem::is_directory(suite_dir)) throw IoError("not a directory: " + suite_dir);
            BenchOptions options;
            options.limits.max_nodes = max_nodes;
            options.node_budget = budget;
            out << format_report(bench(load_suite(suite_dir), db, options));
        } else if (stats_cmd->parsed()) {
            SekiDatabase db = read_db(db_path);
            if (db.stats().empty()) {
                for (int n = kMinAreaSize; n <= kMaxAreaSize; ++n)
                    if (db.size(n)) out << "size=" << n << " seki=" << db.size(n) << '\n';
            }
            for (const auto& s : db.stats()) out << format_stats_line(s) << '\n';
        }
    } catch (const BadFlag& e) {
        err << e.what() << '\n';
        return kBadFlags;
    } catch (const DatabaseError& e) {
        err << e.what() << '\n';
        return kCorruptDatabase;
    } catch (const IoError& e) {
        err << e.what() << '\n';
        return kIoFailure;
    } catch (const std::ios_base::failure& e) {
        std::string what = e.what();
        if (auto at = what.find(": iostream error"); at != std::string::npos) what.erase(at);
        err << what << '\n';
        return kIoFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << e.what() << '\n';
        return kIoFailure;
    } catch (const ParseError& e) {
        err << board_path << ": " << e.what() << '\n';
        return kIoFailure;
    }
    return kOk;
}

}  // namespace seki::cli
