#pragma once

// JSON and CSV encodings of the record types. Big integers travel as
// decimal strings and rationals as "num/den" (plain "num" for integers).

#include <string>
#include <vector>

#include <json.hpp>

#include "sqk/isomorphism.hpp"
#include "sqk/thue.hpp"

namespace sqk::cli {

struct ScanRecord {
    Int m;
    Int n;
    Branch branch = Branch::None;
    Rat z;
    Int c;
    Int x;
    Int y;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

nlohmann::json to_json(const ThueSolution& s);
ThueSolution thue_solution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IsoWitness& w);
nlohmann::json to_json(const IntersectionReport& r);
nlohmann::json to_json(const BezoutCertificate& c);

std::string thue_csv_header();
std::string to_csv(const ThueSolution& s);
ThueSolution thue_solution_from_csv(const std::string& line);

std::string scan_csv_header();
std::string to_csv(const ScanRecord& r);
ScanRecord scan_record_from_csv(const std::string& line);

Branch parse_branch(const std::string& s);

std::string join(const std::vector<Rat>& values, const std::string& sep);

}  // namespace sqk::cli
