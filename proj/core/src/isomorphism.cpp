#include "sqk/isomorphism.hpp"

#include <stdexcept>

namespace sqk {

namespace {

void require_distinct(const Rat& a, const Rat& b) {
    if (a == b || a == -b) throw DomainError("resolvent parameters undefined for b = +-a");
}

}  // namespace

APair a_pair(const Rat& a, const Rat& b) {
    require_distinct(a, b);
    const Rat ab = a * b;
    return {(ab + Rat(16)) / (b - a), (ab - Rat(16)) / (a + b)};
}

std::pair<RationalPoly, RationalPoly> resolvent_quartics(const Rat& a, const Rat& b) {
    const APair p = a_pair(a, b);
    return {family_poly(p.a1), family_poly(p.a2)};
}

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::None: return "none";
        case Branch::A1: return "A1";
        case Branch::A2: return "A2";
        case Branch::Both: return "both";
        case Branch::Degenerate: return "degenerate";
    }
    return "?";
}

int IsoWitness::sign() const {
    switch (branch) {
        case Branch::A1:
        case Branch::Both: return 1;
        case Branch::A2: return -1;
        default: return 0;
    }
}

const std::vector<Rat>& IsoWitness::roots_z() const { return roots_a1.empty() ? roots_a2 : roots_a1; }

IsoWitness iso_test(const Rat& a, const Rat& b) {
    IsoWitness w;
    if (a == b || a == -b) {
        w.same_field = true;
        w.branch = Branch::Degenerate;
        return w;
    }
    const APair p = a_pair(a, b);
    w.roots_a1 = family_rational_roots(p.a1);
    w.roots_a2 = family_rational_roots(p.a2);
    const bool s1 = !w.roots_a1.empty();
    const bool s2 = !w.roots_a2.empty();
    w.same_field = s1 || s2;
    if (s1 && s2) {
        w.branch = Branch::Both;
    } else if (s1) {
        w.branch = Branch::A1;
    } else if (s2) {
        w.branch = Branch::A2;
    }
    return w;
}

Rat generate_equivalent(const Rat& a, const Rat& z) {
    const Rat fz = eval(family_poly(a), z);
    if (fz.is_zero()) throw DomainError("f_a(z) = 0 at z = " + z.str());
    return a + (a * a + Rat(16)) * z * (z + Rat(1)) * (z - Rat(1)) / fz;
}

std::pair<std::vector<Rat>, std::vector<Rat>> recover_z(const Rat& a, const Rat& b) {
    const APair p = a_pair(a, b);
    return {family_rational_roots(p.a1), family_rational_roots(p.a2)};
}

BiquadraticResolvents biquadratic_resolvents(const Rat& a, const Rat& b, int variant) {
    const Rat prod = (a * a + Rat(16)) * (b * b + Rat(16));
    const Rat dm = (a - b) * (a - b);
    const Rat dp = (a + b) * (a + b);
    BiquadraticResolvents out;
    if (variant == 1) {
        out.r1 = RationalPoly({prod * Rat(4) * dm, Rat(0), -prod, Rat(0), Rat(1)});
        out.r2 = RationalPoly({prod * Rat(4) * dp, Rat(0), -prod, Rat(0), Rat(1)});
    } else if (variant == 2) {
        out.r1 = RationalPoly({Rat(4) * dm / prod, Rat(0), Rat(-1), Rat(0), Rat(1)});
        out.r2 = RationalPoly({Rat(4) * dp / prod, Rat(0), Rat(-1), Rat(0), Rat(1)});
    } else {
        throw DomainError("biquadratic resolvent variant must be 1 or 2");
    }
    out.r1_squarefree = is_squarefree(out.r1);
    out.r2_squarefree = is_squarefree(out.r2);
    return out;
}

std::string_view to_string(Intersection i) {
    switch (i) {
        case Intersection::Base: return "L1 ∩ L2 = Q";
        case Intersection::Quadratic: return "[L1 ∩ L2 : Q] = 2";
        case Intersection::Equal: return "L1 = L2";
        case Intersection::Contains: return "L1 ⊃ L2";
        case Intersection::ContainsBase: return "L1 ⊃ L2 = Q";
        case Intersection::EqualBase: return "L1 = L2 = Q";
    }
    return "?";
}

DecompositionType family_dt(GaloisClass g) {
    switch (g) {
        case GaloisClass::C4: return {{4}};
        case GaloisClass::C2: return {{2, 2}};
        case GaloisClass::Trivial: return {{1, 1, 1, 1}};
    }
    return {};
}

IntersectionReport intersection_report(const Rat& a, const Rat& b) {
    IntersectionReport r;
    r.a = a;
    r.b = b;
    r.g1 = galois_class(a);
    r.g2 = galois_class(b);
    if (group_order(r.g1) < group_order(r.g2)) {
        std::swap(r.a, r.b);
        std::swap(r.g1, r.g2);
        r.swapped = true;
    }

    using G = GaloisClass;
    using I = Intersection;

    if (a == b || a == -b) {
        switch (r.g1) {
            case G::C4: r.g_joint = "C4"; r.intersection = I::Equal; break;
            case G::C2: r.g_joint = "C2"; r.intersection = I::Equal; break;
            case G::Trivial: r.g_joint = "1"; r.intersection = I::EqualBase; break;
        }
        if (r.g1 != G::Trivial) r.quadratic_class = quadratic_subfield_class(r.a);
        return r;
    }

    const APair p = a_pair(r.a, r.b);
    const DecompositionType dt1 = family_dt(galois_class(p.a1));
    const DecompositionType dt2 = family_dt(galois_class(p.a2));
    r.dt1 = dt1;
    r.dt2 = dt2;

    const DecompositionType d4{{4}}, d22{{2, 2}}, d1111{{1, 1, 1, 1}};
    auto is = [&](const DecompositionType& x, const DecompositionType& y) { return dt1 == x && dt2 == y; };
    auto no_row = [&]() -> IntersectionReport {
        throw std::logic_error("no intersection table row for (" + r.a.str() + ", " + r.b.str() + ") with types " +
                               dt1.str() + " / " + dt2.str());
    };

    if (r.g1 == G::C4 && r.g2 == G::C4) {
        if (is(d4, d4)) {
            r.g_joint = "C4xC4";
            r.intersection = I::Base;
        } else if (is(d22, d22)) {
            r.g_joint = "C4xC2";
            r.intersection = I::Quadratic;
            r.quadratic_class = quadratic_subfield_class(r.a);
        } else if (is(d22, d1111) || is(d1111, d22)) {
            r.g_joint = "C4";
            r.intersection = I::Equal;
            r.quadratic_class = quadratic_subfield_class(r.a);
        } else {
            return no_row();
        }
    } else if (r.g1 == G::C4 && r.g2 == G::C2) {
        if (!is(d4, d4)) return no_row();
        // Both rows read {4},{4}; they differ in whether L2 is the quadratic subfield of L1.
        const Int d1 = quadratic_subfield_class(r.a);
        const Int d2 = quadratic_subfield_class(r.b);
        if (d1 == d2) {
            r.g_joint = "C4";
            r.intersection = I::Contains;
            r.quadratic_class = d1;
        } else {
            r.g_joint = "C4xC2";
            r.intersection = I::Base;
        }
    } else if (r.g1 == G::C4 && r.g2 == G::Trivial) {
        if (!is(d4, d4)) return no_row();
        r.g_joint = "C4";
        r.intersection = I::ContainsBase;
    } else if (r.g1 == G::C2 && r.g2 == G::C2) {
        if (is(d22, d22)) {
            r.g_joint = "C2xC2";
            r.intersection = I::Base;
        } else if (is(d1111, d1111)) {
            r.g_joint = "C2";
            r.intersection = I::Equal;
            r.quadratic_class = quadratic_subfield_class(r.a);
        } else {
            return no_row();
        }
    } else if (r.g1 == G::C2 && r.g2 == G::Trivial) {
        if (!is(d22, d22)) return no_row();
        r.g_joint = "C2";
        r.intersection = I::Contains;
    } else {
        if (!is(d1111, d1111)) return no_row();
        r.g_joint = "1";
        r.intersection = I::EqualBase;
    }
    return r;
}

}  // namespace sqk
