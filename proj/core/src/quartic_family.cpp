#include "sqk/quartic_family.hpp"

#include <algorithm>

namespace sqk {

std::string_view to_string(GaloisClass g) {
    switch (g) {
        case GaloisClass::C4: return "C4";
        case GaloisClass::C2: return "C2";
        case GaloisClass::Trivial: return "Trivial";
    }
    return "?";
}

int group_order(GaloisClass g) {
    switch (g) {
        case GaloisClass::C4: return 4;
        case GaloisClass::C2: return 2;
        case GaloisClass::Trivial: return 1;
    }
    return 0;
}

RationalPoly family_poly(const Rat& a) { return RationalPoly({Rat(1), a, Rat(-6), -a, Rat(1)}); }

Rat discriminant(const Rat& a) {
    const Rat t = a * a + Rat(16);
    return Rat(4) * t * t * t;
}

namespace {

// Roots u of u^2 - a u - 4, smaller first; empty when irrational.
std::vector<Rat> u_roots(const Rat& a) {
    const Rat d = a * a + Rat(16);
    if (!is_square(d)) return {};
    const Rat s = exact_sqrt(d);
    return {(a - s) / Rat(2), (a + s) / Rat(2)};
}

}  // namespace

std::vector<Rat> family_rational_roots(const Rat& a) {
    std::vector<Rat> roots;
    for (const Rat& u : u_roots(a)) {
        // X^2 - uX - 1 = 0
        const Rat e = u * u + Rat(4);
        if (!is_square(e)) continue;
        const Rat s = exact_sqrt(e);
        roots.push_back((u - s) / Rat(2));
        roots.push_back((u + s) / Rat(2));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

GaloisClass galois_class(const Rat& a) {
    if (!family_rational_roots(a).empty()) return GaloisClass::Trivial;
    if (is_square(a * a + Rat(16))) return GaloisClass::C2;
    return GaloisClass::C4;
}

std::vector<RationalPoly> factorize_family(const Rat& a) {
    const auto roots = family_rational_roots(a);
    if (!roots.empty()) {
        std::vector<RationalPoly> out;
        for (const auto& r : roots) out.push_back(RationalPoly::linear_factor(r));
        return out;
    }
    const auto us = u_roots(a);
    if (us.empty()) return {family_poly(a)};
    std::vector<RationalPoly> out;
    for (const auto& u : us) out.push_back(RationalPoly({Rat(-1), -u, Rat(1)}));
    return out;
}

std::array<Rat, 4> mobius_orbit(const Rat& z) {
    if (z.is_zero() || z == Rat(1) || z == Rat(-1)) {
        throw DomainError("Möbius orbit undefined at z = " + z.str());
    }
    const Rat one(1);
    return {z, (z - one) / (z + one), -one / z, -(z + one) / (z - one)};
}

Rat param_from_root(const Rat& z) {
    if (z.is_zero() || z == Rat(1) || z == Rat(-1)) {
        throw DomainError("parameter undefined at z = " + z.str());
    }
    const Rat z2 = z * z;
    return (z2 * z2 - Rat(6) * z2 + Rat(1)) / (z * (z2 - Rat(1)));
}

Int quadratic_subfield_class(const Rat& a) {
    switch (galois_class(a)) {
        case GaloisClass::Trivial: return Int(1);
        case GaloisClass::C2: {
            // both quadratic factors share the class: v^2 + 4 = 4 (u^2 + 4) / u^2
            const Rat u = u_roots(a).back();
            return square_class(u * u + Rat(4));
        }
        case GaloisClass::C4: break;
    }
    return square_class(a * a + Rat(16));
}

}  // namespace sqk
