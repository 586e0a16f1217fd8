#include "cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/scan.hpp"
#include "cli/serialize.hpp"
#include "cli/tables.hpp"
#include "sqk/isomorphism.hpp"
#include "sqk/polynomial.hpp"
#include "sqk/quartic_family.hpp"
#include "sqk/thue.hpp"

namespace sqk::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Globals {
    bool json = false;
    bool csv = false;
    std::string out_path;
    unsigned jobs = 1;

    Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Text); }
};

Rat need_rat(const std::string& flag, const std::string& text) {
    auto v = parse_rat(text);
    if (!v) throw UsageError("invalid rational for " + flag + ": '" + text + "'");
    return *v;
}

Int need_int(const std::string& flag, const std::string& text) {
    auto v = parse_int(text);
    if (!v) throw UsageError("invalid integer for " + flag + ": '" + text + "'");
    return *v;
}

long need_long(const std::string& flag, const std::string& text) {
    const Int v = need_int(flag, text);
    if (!v.fits_slong_p()) throw UsageError(flag + " out of range");
    return v.get_si();
}

std::string subfield_name(const Int& d) {
    if (d == 1) return "Q";
    return "Q(sqrt(" + d.get_str() + "))";
}

std::string roots_text(const std::vector<Rat>& roots) { return roots.empty() ? "none" : join(roots, ", "); }

std::string dt_text(const std::optional<DecompositionType>& dt) { return dt ? "{" + dt->str() + "}" : "-"; }

// ---- classify ------------------------------------------------------------

int cmd_classify(const Globals& g, const std::string& a_text, std::ostream& os) {
    const Rat a = need_rat("--a", a_text);
    const GaloisClass cls = galois_class(a);
    const auto factors = factorize_family(a);
    const auto roots = family_rational_roots(a);
    const Int d = quadratic_subfield_class(a);
    if (g.format() == Format::Json) {
        json fs = json::array();
        for (const auto& f : factors) fs.push_back(f.str());
        json rs = json::array();
        for (const auto& r : roots) rs.push_back(r.str());
        os << json{{"a", a.str()},
                   {"polynomial", family_poly(a).str()},
                   {"discriminant", discriminant(a).str()},
                   {"galois", std::string(to_string(cls))},
                   {"factors", fs},
                   {"roots", rs},
                   {"quadratic_subfield_class", d.get_str()}}
                  .dump(2)
           << '\n';
        return kOk;
    }
    os << "a: " << a << '\n'
       << "f_a: " << family_poly(a) << '\n'
       << "discriminant: " << discriminant(a) << '\n'
       << "galois: " << to_string(cls) << '\n'
       << "factors:";
    for (const auto& f : factors) os << " (" << f << ")";
    os << '\n'
       << "rational roots: " << roots_text(roots) << '\n'
       << "quadratic subfield: " << subfield_name(d) << '\n';
    return kOk;
}

// ---- iso / intersect -----------------------------------------------------

void write_report_text(const IntersectionReport& r, std::ostream& os) {
    os << "G1: " << to_string(r.g1) << "  G2: " << to_string(r.g2) << (r.swapped ? "  (a, b swapped)" : "") << '\n'
       << "G: " << r.g_joint << '\n'
       << "intersection: " << to_string(r.intersection) << '\n';
    if (r.quadratic_class) os << "common quadratic field: " << subfield_name(*r.quadratic_class) << '\n';
    os << "DT(R1): " << dt_text(r.dt1) << "  DT(R2): " << dt_text(r.dt2) << '\n';
}

int cmd_iso(const Globals& g, const std::string& a_text, const std::string& b_text, std::ostream& os) {
    const Rat a = need_rat("--a", a_text);
    const Rat b = need_rat("--b", b_text);
    const IsoWitness w = iso_test(a, b);
    const IntersectionReport rep = intersection_report(a, b);
    if (g.format() == Format::Json) {
        json j{{"a", a.str()}, {"b", b.str()}, {"witness", to_json(w)}, {"intersection", to_json(rep)}};
        if (w.branch != Branch::Degenerate) {
            const APair p = a_pair(a, b);
            j["A1"] = p.a1.str();
            j["A2"] = p.a2.str();
        }
        os << j.dump(2) << '\n';
        return kOk;
    }
    os << "a: " << a << "  b: " << b << '\n' << "same field: " << (w.same_field ? "yes" : "no") << '\n';
    if (w.branch == Branch::Degenerate) {
        os << "branch: degenerate (b = +-a)\n";
    } else {
        const APair p = a_pair(a, b);
        os << "branch: " << to_string(w.branch);
        if (w.branch == Branch::A1) os << " (B = b)";
        if (w.branch == Branch::A2) os << " (B = -b)";
        if (w.branch == Branch::Both) os << " (B = b and B = -b)";
        os << '\n'
           << "A1 = " << p.a1 << "  roots: " << roots_text(w.roots_a1) << '\n'
           << "A2 = " << p.a2 << "  roots: " << roots_text(w.roots_a2) << '\n';
    }
    write_report_text(rep, os);
    return kOk;
}

int cmd_intersect(const Globals& g, const std::string& a_text, const std::string& b_text, std::ostream& os) {
    const Rat a = need_rat("--a", a_text);
    const Rat b = need_rat("--b", b_text);
    const IntersectionReport rep = intersection_report(a, b);
    if (g.format() == Format::Json) {
        os << to_json(rep).dump(2) << '\n';
    } else {
        write_report_text(rep, os);
    }
    return kOk;
}

// ---- generate --------------------------------------------------------------

int cmd_generate(const Globals& g, const std::string& a_text, const std::string& z_text, std::ostream& os) {
    const Rat a = need_rat("--a", a_text);
    const Rat z = need_rat("--z", z_text);
    const Rat b = generate_equivalent(a, z);
    const IsoWitness w = iso_test(a, b);
    if (g.format() == Format::Json) {
        os << json{{"a", a.str()}, {"z", z.str()}, {"b", b.str()}, {"witness", to_json(w)}}.dump(2) << '\n';
    } else {
        os << "b: " << b << '\n'
           << "same field: " << (w.same_field ? "yes" : "no") << "  branch: " << to_string(w.branch) << '\n';
    }
    return w.same_field ? kOk : kMismatch;
}

// ---- thue ----------------------------------------------------------------

int cmd_thue(const Globals& g, const std::string& m_text, const std::string& bound_text, bool nontrivial_only,
             std::ostream& os) {
    const Int m = need_int("--m", m_text);
    const Int bound = need_int("--bound", bound_text);
    if (bound < 1) throw UsageError("--bound must be at least 1");
    std::vector<ThueSolution> rows;
    for (auto& s : search_bounded(m, bound)) {
        if (nontrivial_only && s.trivial) continue;
        rows.push_back(std::move(s));
    }
    switch (g.format()) {
        case Format::Json: {
            json arr = json::array();
            for (const auto& s : rows) arr.push_back(to_json(s));
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << thue_csv_header() << '\n';
            for (const auto& s : rows) os << to_csv(s) << '\n';
            break;
        case Format::Text:
            os << "m = " << m << ", bound = " << bound << ", 4(m^2+16) = " << Int(4 * (m * m + 16)) << '\n';
            for (const auto& s : rows) {
                os << "(" << s.x << ", " << s.y << ")  c = " << s.c
                   << "  N = " << (s.n_value ? s.n_value->str() : "undefined")
                   << (s.trivial ? "  trivial" : "  non-trivial") << "  parity " << to_string(s.parity) << '\n';
            }
            os << rows.size() << " solution(s)\n";
            break;
    }
    return kOk;
}

// ---- scan ----------------------------------------------------------------

int cmd_scan(const Globals& g, const std::string& m_text, const std::string& n_text, std::ostream& os,
             std::ostream& err) {
    const long m_max = need_long("--m-max", m_text);
    const long n_max = need_long("--n-max", n_text);
    if (m_max < 0 || m_max > n_max) throw UsageError("scan needs 0 <= m_max <= n_max");

    std::vector<ScanRecord> rows;
    bool cache_hit = false;
    if (!g.out_path.empty()) {
        if (auto cached = load_scan_cache(g.out_path, m_max, n_max)) {
            rows = std::move(*cached);
            cache_hit = true;
        }
    }
    if (!cache_hit) rows = run_scan(m_max, n_max, g.jobs);

    if (!g.out_path.empty()) {
        if (!cache_hit) {
            try {
                write_scan_cache(g.out_path, m_max, n_max, rows);
            } catch (const std::runtime_error& e) {
                err << "error: " << e.what() << '\n';
                return kDomain;
            }
        }
        os << "scan: " << rows.size() << " pair(s); cache " << (cache_hit ? "validated" : "written") << ": "
           << g.out_path << '\n';
        for (const auto& r : rows) os << "(" << r.m << ", " << r.n << ")\n";
        return kOk;
    }
    if (g.format() == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
    } else {
        os << render_scan_cache(m_max, n_max, rows);
    }
    return kOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& m_text, const std::string& x_text, const std::string& y_text,
               std::ostream& os) {
    const Int m = need_int("--m", m_text);
    const Int x = need_int("--x", x_text);
    const Int y = need_int("--y", y_text);
    const ThueSolution s = classify(m, x, y);
    const BezoutCertificate cert = bezout_certificate(m, x, y);
    const Int k = m * m + 16;
    const Int target = 4 * k;
    const bool divides = sgn(s.c) != 0 && mpz_divisible_p(target.get_mpz_t(), s.c.get_mpz_t());

    const RationalPoly h({Rat(0), Rat(-k), Rat(0), Rat(k)});
    const RationalPoly f = family_poly(Rat(m));
    const Rat res = sylvester_resultant(h, f);
    const Int expected_res = 16 * pow(k, 4);
    const bool res_ok = res == Rat(expected_res);
    const bool ok = cert.holds() && res_ok;

    if (g.format() == Format::Json) {
        os << json{{"solution", to_json(s)},
                   {"divides", divides},
                   {"four_m2_plus_16", target.get_str()},
                   {"bezout", to_json(cert)},
                   {"resultant", res.str()},
                   {"resultant_expected", expected_res.get_str()},
                   {"resultant_holds", res_ok}}
                  .dump(2)
           << '\n';
    } else {
        os << "m = " << m << "  (x, y) = (" << x << ", " << y << ")\n"
           << "c = F_m(x, y) = " << s.c << '\n'
           << "4(m^2+16) = " << target << "  c divides: " << (divides ? "yes" : "no") << '\n'
           << "N = " << (s.n_value ? s.n_value->str() : "undefined") << '\n'
           << (s.trivial ? "trivial" : "non-trivial") << ", " << (s.primitive ? "primitive" : "non-primitive")
           << ", parity " << to_string(s.parity) << '\n'
           << "H = " << cert.h << "  P = " << cert.p << "  Q = " << cert.q << '\n'
           << "H*P + F*Q = " << cert.lhs1 << "  4(m^2+16)y^7 = " << cert.rhs1
           << (cert.lhs1 == cert.rhs1 ? "  holds" : "  FAILS") << '\n'
           << "H*P(y,-x) + F*Q(y,-x) = " << cert.lhs2 << "  -4(m^2+16)x^7 = " << cert.rhs2
           << (cert.lhs2 == cert.rhs2 ? "  holds" : "  FAILS") << '\n'
           << "Res(h_m, f_m) = " << res << "  16(m^2+16)^4 = " << expected_res << (res_ok ? "  holds" : "  FAILS")
           << '\n';
    }
    return ok ? kOk : kMismatch;
}

// ---- tables --------------------------------------------------------------

int cmd_tables(const Globals& g, const std::string& golden_path, std::ostream& os) {
    const auto golden = golden_path.empty() ? golden_rows() : load_golden_csv(golden_path);
    const auto generated = generate_rows(kTableParameters, 10);
    const auto diffs = diff_rows(golden, generated);
    if (g.format() == Format::Json) {
        json rows = json::array();
        for (const auto& r : generated) rows.push_back(to_json(r));
        os << json{{"rows", rows}, {"diffs", diffs}}.dump(2) << '\n';
    } else {
        for (const auto& d : diffs) os << "diff: " << d << '\n';
        os << (diffs.empty() ? "tables reproduced: " : "tables mismatch: ") << generated.size() << " rows, "
           << diffs.size() << " diffs\n";
    }
    return diffs.empty() ? kOk : kMismatch;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("SQK_JOBS")) {
        auto v = parse_int(env);
        if (v && *v >= 1 && *v <= 1024) return static_cast<unsigned>(v->get_ui());
    }
    return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simplest quartic fields: isomorphism tests and the related Thue equations", "sqk"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.jobs = default_jobs();
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--csv", g.csv, "CSV output");
    app.add_option("--out", g.out_path, "Write output (or the scan cache) to PATH");
    app.add_option("--jobs", g.jobs, "Worker threads (default: SQK_JOBS or 1)")->check(CLI::Range(1u, 1024u));

    std::string a, b, z, m, x, y, bound = "10", m_max, n_max, golden;
    bool nontrivial_only = false;

    auto* classify_cmd = app.add_subcommand("classify", "Galois class, factors and quadratic subfield of f_a");
    classify_cmd->add_option("--a", a, "Parameter a (p or p/q)")->required();

    auto* iso_cmd = app.add_subcommand("iso", "Decide whether f_a and f_b share a splitting field");
    iso_cmd->add_option("--a", a)->required();
    iso_cmd->add_option("--b", b)->required();

    auto* intersect_cmd = app.add_subcommand("intersect", "Intersection of the splitting fields of f_a and f_b");
    intersect_cmd->add_option("--a", a)->required();
    intersect_cmd->add_option("--b", b)->required();

    auto* generate_cmd = app.add_subcommand("generate", "Parameter b with the same splitting field as f_a, from z");
    generate_cmd->add_option("--a", a)->required();
    generate_cmd->add_option("--z", z)->required();

    auto* thue_cmd = app.add_subcommand("thue", "Primitive solutions of F_m(x, y) | 4(m^2+16) in a box");
    thue_cmd->add_option("--m", m)->required();
    thue_cmd->add_option("--bound", bound, "Box half-width (default 10)");
    thue_cmd->add_flag("--nontrivial-only", nontrivial_only, "Drop solutions with xy(x+y)(x-y) = 0");

    auto* scan_cmd = app.add_subcommand("scan", "All pairs m < n with equal splitting fields");
    scan_cmd->add_option("--m-max", m_max)->required();
    scan_cmd->add_option("--n-max", n_max)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Certificates for one point (x, y)");
    verify_cmd->add_option("--m", m)->required();
    verify_cmd->add_option("--x", x)->required();
    verify_cmd->add_option("--y", y)->required();

    auto* tables_cmd = app.add_subcommand("tables", "Regenerate the solution tables and diff against golden rows");
    tables_cmd->add_option("--golden", golden, "CSV with replacement golden rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    if (g.json && g.csv) {
        err << "usage error: --json and --csv are mutually exclusive\n";
        return kUsage;
    }

    std::ostringstream buf;
    int code = kOk;
    const bool scan = scan_cmd->parsed();
    try {
        if (classify_cmd->parsed()) code = cmd_classify(g, a, buf);
        else if (iso_cmd->parsed()) code = cmd_iso(g, a, b, buf);
        else if (intersect_cmd->parsed()) code = cmd_intersect(g, a, b, buf);
        else if (generate_cmd->parsed()) code = cmd_generate(g, a, z, buf);
        else if (thue_cmd->parsed()) code = cmd_thue(g, m, bound, nontrivial_only, buf);
        else if (scan) code = cmd_scan(g, m_max, n_max, buf, err);
        else if (verify_cmd->parsed()) code = cmd_verify(g, m, x, y, buf);
        else if (tables_cmd->parsed()) code = cmd_tables(g, golden, buf);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::logic_error& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kMismatch;
    }

    if (!g.out_path.empty() && !scan) {
        std::ofstream f(g.out_path, std::ios::trunc);
        if (!f || !(f << buf.str()) || !f.flush()) {
            err << "error: cannot write " << g.out_path << '\n';
            return kDomain;
        }
    } else {
        out << buf.str();
    }
    return code;
}

}  // namespace sqk::cli
