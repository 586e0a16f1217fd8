#include "sqk/thue.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sqk {

std::string_view to_string(Parity p) {
    switch (p) {
        case Parity::P00: return "00";
        case Parity::P01: return "01";
        case Parity::P10: return "10";
        case Parity::P11: return "11";
    }
    return "??";
}

std::optional<Parity> parse_parity(std::string_view s) {
    if (s == "00") return Parity::P00;
    if (s == "01") return Parity::P01;
    if (s == "10") return Parity::P10;
    if (s == "11") return Parity::P11;
    return std::nullopt;
}

Parity parity_of(const Int& x, const Int& y) {
    const bool xo = mpz_odd_p(x.get_mpz_t()) != 0;
    const bool yo = mpz_odd_p(y.get_mpz_t()) != 0;
    if (xo && yo) return Parity::P11;
    if (xo) return Parity::P10;
    if (yo) return Parity::P01;
    return Parity::P00;
}

Int f_eval(const Int& m, const Int& x, const Int& y) {
    const Int x2 = x * x;
    const Int y2 = y * y;
    const Int xy = x * y;
    return x2 * x2 - m * x2 * xy - 6 * x2 * y2 + m * xy * y2 + y2 * y2;
}

Int xy_product(const Int& x, const Int& y) { return x * y * (x + y) * (x - y); }

Rat n_map(const Int& m, const Int& x, const Int& y) {
    const Int c = f_eval(m, x, y);
    if (sgn(c) == 0) throw DomainError("F_m(x, y) = 0");
    return Rat(m) + Rat(Int((m * m + 16) * xy_product(x, y)), c);
}

ThueSolution classify(const Int& m, const Int& x, const Int& y) {
    if (sgn(x) == 0 && sgn(y) == 0) throw DomainError("(x, y) = (0, 0)");
    ThueSolution s;
    s.m = m;
    s.x = x;
    s.y = y;
    s.c = f_eval(m, x, y);
    if (sgn(s.c) != 0) s.n_value = n_map(m, x, y);
    s.trivial = sgn(xy_product(x, y)) == 0;
    s.primitive = gcd(x, y) == 1;
    s.parity = parity_of(x, y);
    return s;
}

Point parity_transform(const Int& x, const Int& y) {
    if (gcd(x, y) != 1) throw DomainError("parity transform needs a primitive point");
    return {x - y, x + y};
}

Point parity_inverse(const Int& x, const Int& y) {
    if (parity_of(x, y) != Parity::P11) throw DomainError("inverse parity transform needs both coordinates odd");
    Int u = x + y;
    Int v = y - x;
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), 2);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    return {u, v};
}

Orbit8 orbit8(const Int& x, const Int& y) {
    if (gcd(x, y) != 1) throw DomainError("orbit of a non-primitive point");
    if (sgn(xy_product(x, y)) == 0) throw DomainError("orbit of a trivial point");
    Point base{x, y};
    if (parity_of(x, y) == Parity::P11) base = parity_inverse(x, y);
    const Point rot{base.y, Int(-base.x)};
    const Point t = parity_transform(base.x, base.y);
    const Point t_rot{t.y, Int(-t.x)};
    return {{base, -base, rot, -rot}, {t, -t, t_rot, -t_rot}};
}

namespace {

// True when (2|m| + 8) * bound^4 and 4(m^2 + 16) fit comfortably in int64,
// which bounds every intermediate of the fixed-width evaluation below.
bool fits_fixed_width(const Int& m, const Int& bound) {
    const Int limit = Int(1) << 62;
    const Int b4 = pow(bound, 4);
    return (2 * ::abs(m) + 8) * b4 < limit && 4 * (m * m + 16) < limit;
}

std::int64_t f_eval_i64(std::int64_t m, std::int64_t x, std::int64_t y) {
    const std::int64_t x2 = x * x;
    const std::int64_t y2 = y * y;
    return x2 * x2 - m * x2 * x * y - 6 * x2 * y2 + m * x * y * y2 + y2 * y2;
}

}  // namespace

std::vector<ThueSolution> search_bounded(const Int& m, const Int& bound) {
    if (bound < 1) throw DomainError("search bound must be at least 1");
    const Int target = 4 * (m * m + 16);
    std::vector<Point> hits;

    // F_m(-x, -y) = F_m(x, y): scan y >= 1 and the point (1, 0), then mirror.
    if (fits_fixed_width(m, bound)) {
        const std::int64_t mm = m.get_si();
        const std::int64_t b = bound.get_si();
        const std::int64_t t = target.get_si();
        for (std::int64_t y = 1; y <= b; ++y) {
            for (std::int64_t x = -b; x <= b; ++x) {
                if (std::gcd(x, y) != 1) continue;
                const std::int64_t c = f_eval_i64(mm, x, y);
                if (c != 0 && t % c == 0) hits.push_back({Int(x), Int(y)});
            }
        }
    } else {
        for (Int y = 1; y <= bound; ++y) {
            for (Int x = -bound; x <= bound; ++x) {
                if (gcd(x, y) != 1) continue;
                const Int c = f_eval(m, x, y);
                if (sgn(c) != 0 && mpz_divisible_p(target.get_mpz_t(), c.get_mpz_t())) hits.push_back({x, y});
            }
        }
    }
    hits.push_back({Int(1), Int(0)});  // F_m(1, 0) = 1 always divides

    std::vector<Point> all;
    all.reserve(2 * hits.size());
    for (const auto& p : hits) {
        all.push_back(p);
        all.push_back(-p);
    }
    std::sort(all.begin(), all.end());

    std::vector<ThueSolution> out;
    out.reserve(all.size());
    for (const auto& p : all) out.push_back(classify(m, p.x, p.y));
    return out;
}

Rat representative_root(const std::vector<Rat>& orbit) {
    if (orbit.empty()) throw DomainError("empty root orbit");
    auto key = [](const Rat& z) {
        const bool odd = parity_of(z.num(), z.den()) != Parity::P11;
        return std::tuple<int, Int, Int>(odd ? 0 : 1, Int(::abs(z.num()) + z.den()), z.num());
    };
    return *std::min_element(orbit.begin(), orbit.end(), [&](const Rat& a, const Rat& b) { return key(a) < key(b); });
}

std::vector<FieldPartner> search_via_fields(const Int& m, const Int& n_max) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    std::vector<FieldPartner> out;
    const Int am = ::abs(m);
    for (Int n = 1; n <= n_max; ++n) {
        if (n == am) continue;
        IsoWitness w = iso_test(Rat(m), Rat(n));
        if (!w.same_field) continue;
        const Rat z = representative_root(w.roots_z());
        Point sol{z.num(), z.den()};
        Int c = f_eval(m, sol.x, sol.y);
        out.push_back({n, std::move(w), z, std::move(sol), std::move(c)});
    }
    return out;
}

BezoutCertificate bezout_certificate(const Int& m, const Int& x, const Int& y) {
    const Int k = m * m + 16;
    auto P = [&](const Int& u, const Int& v) -> Int {
        return 5 * u * u * u - 5 * m * u * u * v - 29 * u * v * v + 4 * m * v * v * v;
    };
    auto Q = [&](const Int& u, const Int& v) -> Int { return -k * v * (5 * u * u - 4 * v * v); };

    BezoutCertificate cert;
    cert.h = k * xy_product(x, y);
    cert.f = f_eval(m, x, y);
    cert.p = P(x, y);
    cert.q = Q(x, y);
    cert.p_rot = P(y, Int(-x));
    cert.q_rot = Q(y, Int(-x));
    cert.lhs1 = cert.h * cert.p + cert.f * cert.q;
    cert.rhs1 = 4 * k * pow(y, 7);
    cert.lhs2 = cert.h * cert.p_rot + cert.f * cert.q_rot;
    cert.rhs2 = -4 * k * pow(x, 7);
    return cert;
}

std::size_t count_fields(const Int& m, const Int& bound) {
    if (m == 0 || m == 3 || m == -3) throw DomainError("count_fields needs f_m irreducible (m not in {0, 3, -3})");
    const auto sols = search_bounded(m, bound);
    const auto nontrivial = static_cast<std::size_t>(
        std::count_if(sols.begin(), sols.end(), [](const ThueSolution& s) { return !s.trivial; }));
    if (nontrivial % 8 != 0) {
        throw std::logic_error("non-trivial primitive solution count " + std::to_string(nontrivial) +
                               " is not a multiple of 8 for m = " + m.get_str());
    }
    return nontrivial / 8;
}

}  // namespace sqk
