#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cli/serialize.hpp"

namespace sqk::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Builds the record for a pair already known to share a splitting field.
ScanRecord make_scan_record(const Int& m, const Int& n, const IsoWitness& w);

/// All pairs 0 <= m <= m_max, m < n <= n_max with equal splitting fields,
/// ordered by (m, n) independently of the job count.
std::vector<ScanRecord> run_scan(long m_max, long n_max, unsigned jobs);

std::string scan_cache_header(long m_max, long n_max);

/// Records from an existing cache whose header matches and whose rows all
/// re-verify; nullopt otherwise.
std::optional<std::vector<ScanRecord>> load_scan_cache(const std::filesystem::path& path, long m_max, long n_max);

/// Throws std::runtime_error when the file cannot be written.
void write_scan_cache(const std::filesystem::path& path, long m_max, long n_max, const std::vector<ScanRecord>& rows);

std::string render_scan_cache(long m_max, long n_max, const std::vector<ScanRecord>& rows);

}  // namespace sqk::cli
