#pragma once

#include "seki/goban.hpp"
#include "seki/seki_db.hpp"
#include "seki/solver.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace seki {

struct Fixture {
    std::string name;
    Board board;
};

// Every *.txt board under `dir`, sorted by file name.
std::vector<Fixture> load_suite(const std::filesystem::path& dir);

inline constexpr int kBucketCount = 4;
inline constexpr std::array<const char*, kBucketCount> kBucketLabels = {"0%", "(0%-10%)", "[10%-50%)", "[50%-100%]"};
int hit_rate_bucket(double rate);

struct BenchOptions {
    SolveLimits limits;                 // for the reduction table
    std::uint64_t node_budget = 200;    // for solve rates
};

struct BenchRow {
    std::string name;
    SolveResult with_db;
    SolveResult without_db;
    int bucket = 0;
    bool solved_with_db_in_budget = false;
    bool solved_without_db_in_budget = false;

    double reduction() const;  // 1 - with/without, 0 when without is 0
};

struct BucketSummary {
    int fixtures = 0;
    int solved_with_db = 0;
    int solved_without_db = 0;

    double rate_with_db() const { return fixtures ? static_cast<double>(solved_with_db) / fixtures : 0.0; }
    double rate_without_db() const { return fixtures ? static_cast<double>(solved_without_db) / fixtures : 0.0; }
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::array<BucketSummary, kBucketCount> buckets{};
    std::uint64_t node_budget = 0;

    std::uint64_t nodes_with_db() const;
    std::uint64_t nodes_without_db() const;
    double aggregate_reduction() const;
};

// Solves each fixture with and without the database. The bucket comes from
// the hit rate of the full with-db solve.
BenchReport bench(const std::vector<Fixture>& suite, const SekiDatabase& db, const BenchOptions& options = {});

std::string format_report(const BenchReport& report);

}  // namespace seki
