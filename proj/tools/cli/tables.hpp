#pragma once

// Regeneration of the known solution tables for
// m in {1, 2, 4, 22, 103, 956} (irreducible) and m = 3 (reducible),
// diffed against embedded golden rows.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqk/thue.hpp"

namespace sqk::cli {

struct TableRow {
    Int m;
    Rat n;
    Int c;
    Int m2_plus_16;
    Int xy;
    std::vector<Point> points;  // the four ±(x,y), ±(y,-x), sorted

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline const std::vector<long> kTableParameters = {1, 2, 4, 22, 103, 956, 3};

std::vector<TableRow> golden_rows();

/// Golden rows from CSV "m,N,c,m2plus16,xy,pairs" where pairs is "x:y;x:y"
/// listing representatives that are expanded by sign.
std::vector<TableRow> load_golden_csv(const std::filesystem::path& path);

/// Rows regenerated from the bounded search, grouped by (m, c).
std::vector<TableRow> generate_rows(const std::vector<long>& params, long bound);

/// Human-readable differences; empty when the tables agree.
std::vector<std::string> diff_rows(const std::vector<TableRow>& golden, const std::vector<TableRow>& generated);

nlohmann::json to_json(const TableRow& row);

}  // namespace sqk::cli
