#include "cli/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sqk::cli {

namespace {

std::vector<Point> expand(std::initializer_list<std::pair<long, long>> reps) {
    std::vector<Point> out;
    for (auto [x, y] : reps) {
        out.push_back({Int(x), Int(y)});
        out.push_back({Int(-x), Int(-y)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TableRow row(long m, long n, const char* c, const char* k, long xy, std::initializer_list<std::pair<long, long>> reps) {
    return {Int(m), Rat(n), Int(c), Int(k), Int(xy), expand(reps)};
}

std::string point_list(const std::vector<Point>& pts) {
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty()) s += " ";
        s += "(" + p.x.get_str() + "," + p.y.get_str() + ")";
    }
    return s;
}

}  // namespace

std::vector<TableRow> golden_rows() {
    return {
        row(1, 103, "-1", "17", -6, {{-2, 1}, {1, 2}}),
        row(1, 103, "4", "17", 24, {{3, 1}, {-1, 3}}),
        row(2, -22, "5", "20", -6, {{-2, 1}, {1, 2}}),
        row(2, -22, "-20", "20", 24, {{3, 1}, {-1, 3}}),
        row(4, -956, "1", "32", -30, {{-3, 2}, {2, 3}}),
        row(4, -956, "-4", "32", 120, {{5, 1}, {-1, 5}}),
        row(22, -2, "125", "500", -6, {{-2, 1}, {1, 2}}),
        row(22, -2, "-500", "500", 24, {{3, 1}, {-1, 3}}),
        row(103, 1, "-625", "10625", 6, {{2, 1}, {-1, 2}}),
        row(103, 1, "2500", "10625", -24, {{-3, 1}, {1, 3}}),
        row(956, -4, "28561", "913952", -30, {{-3, 2}, {2, 3}}),
        row(956, -4, "-114244", "913952", 120, {{5, 1}, {-1, 5}}),
        row(3, -3, "-25", "25", 6, {{2, 1}, {-1, 2}}),
        row(3, -3, "100", "25", -24, {{-3, 1}, {1, 3}}),
    };
}

std::vector<TableRow> load_golden_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::vector<TableRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 6) throw std::runtime_error("golden row needs 6 cells: " + line);
        TableRow r;
        auto need_int = [&](const std::string& s) {
            auto v = parse_int(s);
            if (!v) throw std::runtime_error("bad integer '" + s + "' in golden row");
            return *v;
        };
        r.m = need_int(cells[0]);
        auto n = parse_rat(cells[1]);
        if (!n) throw std::runtime_error("bad N in golden row");
        r.n = *n;
        r.c = need_int(cells[2]);
        r.m2_plus_16 = need_int(cells[3]);
        r.xy = need_int(cells[4]);
        std::stringstream ps(cells[5]);
        std::string pair;
        while (std::getline(ps, pair, ';')) {
            const auto colon = pair.find(':');
            if (colon == std::string::npos) throw std::runtime_error("bad pair '" + pair + "'");
            Point p{need_int(pair.substr(0, colon)), need_int(pair.substr(colon + 1))};
            r.points.push_back(p);
            r.points.push_back(-p);
        }
        std::sort(r.points.begin(), r.points.end());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<TableRow> generate_rows(const std::vector<long>& params, long bound) {
    std::vector<TableRow> out;
    for (long m : params) {
        std::map<Int, TableRow> by_c;
        for (const auto& s : search_bounded(Int(m), Int(bound))) {
            if (s.trivial) continue;
            auto [it, inserted] = by_c.try_emplace(s.c);
            TableRow& r = it->second;
            if (inserted) {
                r.m = s.m;
                r.n = *s.n_value;
                r.c = s.c;
                r.m2_plus_16 = s.m * s.m + 16;
                r.xy = xy_product(s.x, s.y);
            }
            r.points.push_back({s.x, s.y});
        }
        // odd c first, matching the golden layout
        std::vector<TableRow> rows;
        for (auto& [c, r] : by_c) {
            std::sort(r.points.begin(), r.points.end());
            rows.push_back(std::move(r));
        }
        std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
            return mpz_odd_p(a.c.get_mpz_t()) > mpz_odd_p(b.c.get_mpz_t());
        });
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<std::string> diff_rows(const std::vector<TableRow>& golden, const std::vector<TableRow>& generated) {
    std::vector<std::string> diffs;
    auto find = [](const std::vector<TableRow>& rows, const TableRow& key) {
        return std::find_if(rows.begin(), rows.end(),
                            [&](const TableRow& r) { return r.m == key.m && r.c == key.c; });
    };
    for (const auto& g : golden) {
        const std::string tag = "m=" + g.m.get_str() + " c=" + g.c.get_str();
        auto it = find(generated, g);
        if (it == generated.end()) {
            diffs.push_back("missing row " + tag);
            continue;
        }
        if (it->n != g.n) diffs.push_back(tag + ": N expected " + g.n.str() + ", got " + it->n.str());
        if (it->m2_plus_16 != g.m2_plus_16) {
            diffs.push_back(tag + ": m^2+16 expected " + g.m2_plus_16.get_str() + ", got " + it->m2_plus_16.get_str());
        }
        if (it->xy != g.xy) diffs.push_back(tag + ": xy(x+y)(x-y) expected " + g.xy.get_str() + ", got " + it->xy.get_str());
        if (it->points != g.points) {
            diffs.push_back(tag + ": points expected " + point_list(g.points) + ", got " + point_list(it->points));
        }
    }
    for (const auto& r : generated) {
        if (find(golden, r) == golden.end()) diffs.push_back("unexpected row m=" + r.m.get_str() + " c=" + r.c.get_str());
    }
    return diffs;
}

nlohmann::json to_json(const TableRow& row) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : row.points) pts.push_back({p.x.get_str(), p.y.get_str()});
    return {{"m", row.m.get_str()},   {"N", row.n.str()},   {"c", row.c.get_str()},
            {"m2_plus_16", row.m2_plus_16.get_str()}, {"xy", row.xy.get_str()}, {"points", pts}};
}

}  // namespace sqk::cli
