#include "cli/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace sqk::cli {

using nlohmann::json;

namespace {

Int int_field(const json& j, const char* key) {
    auto v = parse_int(j.at(key).get<std::string>());
    if (!v) throw std::invalid_argument(std::string("bad integer field ") + key);
    return *v;
}

Rat rat_field(const std::string& text, const char* key) {
    auto v = parse_rat(text);
    if (!v) throw std::invalid_argument(std::string("bad rational field ") + key);
    return *v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

Int int_cell(const std::string& s) {
    auto v = parse_int(s);
    if (!v) throw std::invalid_argument("bad integer cell '" + s + "'");
    return *v;
}

bool bool_cell(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("bad boolean cell '" + s + "'");
}

json rats(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

}  // namespace

Branch parse_branch(const std::string& s) {
    for (Branch b : {Branch::None, Branch::A1, Branch::A2, Branch::Both, Branch::Degenerate}) {
        if (s == to_string(b)) return b;
    }
    throw std::invalid_argument("unknown branch '" + s + "'");
}

std::string join(const std::vector<Rat>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].str();
    }
    return out;
}

json to_json(const ThueSolution& s) {
    return json{{"m", s.m.get_str()},
                {"x", s.x.get_str()},
                {"y", s.y.get_str()},
                {"c", s.c.get_str()},
                {"N", s.n_value ? json(s.n_value->str()) : json(nullptr)},
                {"trivial", s.trivial},
                {"primitive", s.primitive},
                {"parity", std::string(to_string(s.parity))}};
}

ThueSolution thue_solution_from_json(const json& j) {
    ThueSolution s;
    s.m = int_field(j, "m");
    s.x = int_field(j, "x");
    s.y = int_field(j, "y");
    s.c = int_field(j, "c");
    if (!j.at("N").is_null()) s.n_value = rat_field(j.at("N").get<std::string>(), "N");
    s.trivial = j.at("trivial").get<bool>();
    s.primitive = j.at("primitive").get<bool>();
    auto p = parse_parity(j.at("parity").get<std::string>());
    if (!p) throw std::invalid_argument("bad parity field");
    s.parity = *p;
    return s;
}

json to_json(const ScanRecord& r) {
    return json{{"m", r.m.get_str()}, {"n", r.n.get_str()},     {"branch", std::string(to_string(r.branch))},
                {"z", r.z.str()},     {"c", r.c.get_str()},     {"x", r.x.get_str()},
                {"y", r.y.get_str()}};
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord r;
    r.m = int_field(j, "m");
    r.n = int_field(j, "n");
    r.branch = parse_branch(j.at("branch").get<std::string>());
    r.z = rat_field(j.at("z").get<std::string>(), "z");
    r.c = int_field(j, "c");
    r.x = int_field(j, "x");
    r.y = int_field(j, "y");
    return r;
}

json to_json(const IsoWitness& w) {
    return json{{"same_field", w.same_field},
                {"branch", std::string(to_string(w.branch))},
                {"sign", w.sign()},
                {"roots_a1", rats(w.roots_a1)},
                {"roots_a2", rats(w.roots_a2)}};
}

json to_json(const IntersectionReport& r) {
    json j{{"a", r.a.str()},
           {"b", r.b.str()},
           {"swapped", r.swapped},
           {"g1", std::string(to_string(r.g1))},
           {"g2", std::string(to_string(r.g2))},
           {"g", r.g_joint},
           {"intersection", std::string(to_string(r.intersection))}};
    j["quadratic_class"] = r.quadratic_class ? json(r.quadratic_class->get_str()) : json(nullptr);
    j["dt1"] = r.dt1 ? json(r.dt1->parts) : json(nullptr);
    j["dt2"] = r.dt2 ? json(r.dt2->parts) : json(nullptr);
    return j;
}

json to_json(const BezoutCertificate& c) {
    return json{{"H", c.h.get_str()},         {"F", c.f.get_str()},         {"P", c.p.get_str()},
                {"Q", c.q.get_str()},         {"P_rot", c.p_rot.get_str()}, {"Q_rot", c.q_rot.get_str()},
                {"lhs1", c.lhs1.get_str()},   {"rhs1", c.rhs1.get_str()},   {"lhs2", c.lhs2.get_str()},
                {"rhs2", c.rhs2.get_str()},   {"holds", c.holds()}};
}

std::string thue_csv_header() { return "m,x,y,c,N,trivial,primitive,parity"; }

std::string to_csv(const ThueSolution& s) {
    std::ostringstream os;
    os << s.m << ',' << s.x << ',' << s.y << ',' << s.c << ',' << (s.n_value ? s.n_value->str() : "") << ','
       << (s.trivial ? "true" : "false") << ',' << (s.primitive ? "true" : "false") << ',' << to_string(s.parity);
    return os.str();
}

ThueSolution thue_solution_from_csv(const std::string& line) {
    const auto cells = split_csv(line);
    if (cells.size() != 8) throw std::invalid_argument("expected 8 CSV cells: " + line);
    ThueSolution s;
    s.m = int_cell(cells[0]);
    s.x = int_cell(cells[1]);
    s.y = int_cell(cells[2]);
    s.c = int_cell(cells[3]);
    if (!cells[4].empty()) s.n_value = rat_field(cells[4], "N");
    s.trivial = bool_cell(cells[5]);
    s.primitive = bool_cell(cells[6]);
    auto p = parse_parity(cells[7]);
    if (!p) throw std::invalid_argument("bad parity cell");
    s.parity = *p;
    return s;
}

std::string scan_csv_header() { return "m,n,branch,z,c,x,y"; }

std::string to_csv(const ScanRecord& r) {
    std::ostringstream os;
    os << r.m << ',' << r.n << ',' << to_string(r.branch) << ',' << r.z << ',' << r.c << ',' << r.x << ',' << r.y;
    return os.str();
}

ScanRecord scan_record_from_csv(const std::string& line) {
    const auto cells = split_csv(line);
    if (cells.size() != 7) throw std::invalid_argument("expected 7 CSV cells: " + line);
    ScanRecord r;
    r.m = int_cell(cells[0]);
    r.n = int_cell(cells[1]);
    r.branch = parse_branch(cells[2]);
    r.z = rat_field(cells[3], "z");
    r.c = int_cell(cells[4]);
    r.x = int_cell(cells[5]);
    r.y = int_cell(cells[6]);
    return r;
}

}  // namespace sqk::cli
