#include "seki/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace seki {

std::vector<Fixture> load_suite(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Fixture> suite;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::ios_base::failure("cannot open " + f.string());
        std::stringstream text;
        text << in.rdbuf();
        suite.push_back({f.stem().string(), Board(Position::from_text(text.str()))});
    }
    return suite;
}

int hit_rate_bucket(double rate) {
    if (rate <= 0.0) return 0;
    if (rate < 0.1) return 1;
    if (rate < 0.5) return 2;
    return 3;
}

double BenchRow::reduction() const {
    if (without_db.nodes == 0) return 0.0;
    return 1.0 - static_cast<double>(with_db.nodes) / static_cast<double>(without_db.nodes);
}

std::uint64_t BenchReport::nodes_with_db() const {
    std::uint64_t n = 0;
    for (const auto& r : rows) n += r.with_db.nodes;
    return n;
}

std::uint64_t BenchReport::nodes_without_db() const {
    std::uint64_t n = 0;
    for (const auto& r : rows) n += r.without_db.nodes;
    return n;
}

double BenchReport::aggregate_reduction() const {
    const auto without = nodes_without_db();
    return without ? 1.0 - static_cast<double>(nodes_with_db()) / static_cast<double>(without) : 0.0;
}

BenchReport bench(const std::vector<Fixture>& suite, const SekiDatabase& db, const BenchOptions& options) {
    BenchReport report;
    report.node_budget = options.node_budget;
    SolveLimits budget = options.limits;
    budget.max_nodes = options.node_budget;
    for (const auto& f : suite) {
        BenchRow row;
        row.name = f.name;
        row.with_db = solve(f.board, options.limits, &db);
        row.without_db = solve(f.board, options.limits, nullptr);
        row.bucket = row.with_db.terminal_nodes ? hit_rate_bucket(hit_rate(row.with_db).hit_rate) : 0;
        row.solved_with_db_in_budget = solve(f.board, budget, &db).value != GameValue::Unknown;
        row.solved_without_db_in_budget = solve(f.board, budget, nullptr).value != GameValue::Unknown;
        auto& b = report.buckets[static_cast<std::size_t>(row.bucket)];
        ++b.fixtures;
        b.solved_with_db += row.solved_with_db_in_budget;
        b.solved_without_db += row.solved_without_db_in_budget;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_report(const BenchReport& report) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-16s %-9s %10s %-9s %10s %9s %8s\n", "fixture", "with", "nodes", "without", "nodes",
                  "reduction", "hit_rate");
    out += line;
    for (const auto& r : report.rows) {
        char rate[16] = "-";
        if (r.with_db.terminal_nodes) std::snprintf(rate, sizeof rate, "%.4f", hit_rate(r.with_db).hit_rate);
        std::snprintf(line, sizeof line, "%-16s %-9s %10llu %-9s %10llu %8.2f%% %8s\n", r.name.c_str(),
                      std::string(to_string(r.with_db.value)).c_str(), static_cast<unsigned long long>(r.with_db.nodes),
                      std::string(to_string(r.without_db.value)).c_str(),
                      static_cast<unsigned long long>(r.without_db.nodes), 100.0 * r.reduction(), rate);
        out += line;
    }
    std::snprintf(line, sizeof line, "total nodes with=%llu without=%llu reduction=%.2f%%\n",
                  static_cast<unsigned long long>(report.nodes_with_db()),
                  static_cast<unsigned long long>(report.nodes_without_db()), 100.0 * report.aggregate_reduction());
    out += line;
    std::snprintf(line, sizeof line, "\nsolve rate within %llu nodes\n%-12s %8s %10s %10s\n",
                  static_cast<unsigned long long>(report.node_budget), "hit rate", "fixtures", "with", "without");
    out += line;
    for (int i = 0; i < kBucketCount; ++i) {
        const auto& b = report.buckets[static_cast<std::size_t>(i)];
        std::snprintf(line, sizeof line, "%-12s %8d %9.2f%% %9.2f%%\n", kBucketLabels[static_cast<std::size_t>(i)],
                      b.fixtures, 100.0 * b.rate_with_db(), 100.0 * b.rate_without_db());
        out += line;
    }
    return out;
}

}  // namespace seki
