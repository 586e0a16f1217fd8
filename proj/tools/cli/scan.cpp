#include "cli/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace sqk::cli {

ScanRecord make_scan_record(const Int& m, const Int& n, const IsoWitness& w) {
    ScanRecord r;
    r.m = m;
    r.n = n;
    r.branch = w.branch;
    r.z = representative_root(w.roots_z());
    r.x = r.z.num();
    r.y = r.z.den();
    r.c = f_eval(m, r.x, r.y);
    return r;
}

namespace {

std::vector<ScanRecord> scan_row(long m, long n_max) {
    std::vector<ScanRecord> out;
    const Rat a(m);
    for (long n = m + 1; n <= n_max; ++n) {
        const IsoWitness w = iso_test(a, Rat(n));
        if (w.same_field) out.push_back(make_scan_record(Int(m), Int(n), w));
    }
    return out;
}

}  // namespace

std::vector<ScanRecord> run_scan(long m_max, long n_max, unsigned jobs) {
    if (m_max < 0) return {};
    const auto rows = static_cast<std::size_t>(m_max + 1);
    std::vector<std::vector<ScanRecord>> per_m(rows);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows; i = next++) per_m[i] = scan_row(static_cast<long>(i), n_max);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::vector<ScanRecord> out;
    for (auto& v : per_m) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    return out;
}

std::string scan_cache_header(long m_max, long n_max) {
    std::ostringstream os;
    os << "# sqk-scan version=" << kVersion << " m_max=" << m_max << " n_max=" << n_max;
    return os.str();
}

std::string render_scan_cache(long m_max, long n_max, const std::vector<ScanRecord>& rows) {
    std::ostringstream os;
    os << scan_cache_header(m_max, n_max) << '\n' << scan_csv_header() << '\n';
    for (const auto& r : rows) os << to_csv(r) << '\n';
    return os.str();
}

std::optional<std::vector<ScanRecord>> load_scan_cache(const std::filesystem::path& path, long m_max, long n_max) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != scan_cache_header(m_max, n_max)) return std::nullopt;
    if (!std::getline(in, line) || line != scan_csv_header()) return std::nullopt;
    std::vector<ScanRecord> rows;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ScanRecord r = scan_record_from_csv(line);
            if (r.m < 0 || r.m > m_max || r.n <= r.m || r.n > n_max) return std::nullopt;
            const IsoWitness w = iso_test(Rat(r.m), Rat(r.n));
            if (!w.same_field || make_scan_record(r.m, r.n, w) != r) return std::nullopt;
            rows.push_back(std::move(r));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!std::is_sorted(rows.begin(), rows.end(), [](const ScanRecord& a, const ScanRecord& b) {
            return a.m != b.m ? a.m < b.m : a.n < b.n;
        })) {
        return std::nullopt;
    }
    return rows;
}

void write_scan_cache(const std::filesystem::path& path, long m_max, long n_max, const std::vector<ScanRecord>& rows) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << render_scan_cache(m_max, n_max, rows);
    if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sqk::cli
