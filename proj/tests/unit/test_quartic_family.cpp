#include <doctest.h>

#include <random>

#include "sqk/quartic_family.hpp"
#include "support/oracles.hpp"

using namespace sqk;

namespace {

Rat random_admissible(oracle::RandomRat& gen) {
    for (;;) {
        const Rat z = gen();
        if (!z.is_zero() && z != 1 && z != -1) return z;
    }
}

// Res(f, f') / lc(f) with the degree-four sign, straight from the Sylvester matrix.
Rat generic_discriminant(const RationalPoly& f) {
    return sylvester_resultant(f, derivative(f)) / f.leading();
}

}  // namespace

TEST_SUITE("quartic_family") {

TEST_CASE("family polynomial and discriminant") {
    CHECK(family_poly(Rat(1)).str() == "1 + X - 6*X^2 - X^3 + X^4");
    CHECK(discriminant(Rat(1)) == 19652);
    CHECK(discriminant(Rat(0)) == 16384);
    CHECK(to_string(GaloisClass::C4) == "C4");
    CHECK(group_order(GaloisClass::C2) == 2);
    CHECK(group_order(GaloisClass::Trivial) == 1);
}

TEST_CASE("discriminant formula matches the generic discriminant") {
    oracle::RandomRat gen(21, 2000, 500);
    for (int i = 0; i < 100; ++i) {
        const Rat a = gen();
        CHECK(discriminant(a) == generic_discriminant(family_poly(a)));
    }
}

TEST_CASE("classification examples") {
    CHECK(galois_class(Rat(1)) == GaloisClass::C4);
    CHECK(galois_class(Rat(3)) == GaloisClass::C2);
    CHECK(galois_class(Rat(0)) == GaloisClass::C2);
    CHECK(galois_class(Rat(Int(87), Int(104))) == GaloisClass::C2);
    CHECK(galois_class(Rat(Int(7), Int(6))) == GaloisClass::Trivial);
    CHECK(family_rational_roots(Rat(Int(7), Int(6))) ==
          std::vector<Rat>{Rat(-2), Rat(Int(-1), Int(3)), Rat(Int(1), Int(2)), Rat(3)});
    const auto fs = factorize_family(Rat(3));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].str() == "-1 + X + X^2");
    CHECK(fs[1].str() == "-1 - 4*X + X^2");
}

TEST_CASE("integer parameters up to 1000") {
    for (long m = -1000; m <= 1000; ++m) {
        const bool reducible = m == 0 || m == 3 || m == -3;
        CHECK(galois_class(Rat(m)) == (reducible ? GaloisClass::C2 : GaloisClass::C4));
        CHECK(is_square(Int(m) * m + 16) == reducible);
    }
}

TEST_CASE("fast roots agree with the generic rational root finder") {
    oracle::RandomRat gen(22, 40, 40);
    for (int i = 0; i < 400; ++i) {
        // alternate between arbitrary parameters and ones built from a root
        const Rat a = i % 2 ? gen() : param_from_root(random_admissible(gen));
        CHECK(family_rational_roots(a) == rational_roots(family_poly(a)));
    }
}

TEST_CASE("a rational root brings its whole orbit") {
    oracle::RandomRat gen(23, 60, 60);
    for (int i = 0; i < 300; ++i) {
        const Rat z = random_admissible(gen);
        const Rat s = param_from_root(z);
        const auto orbit = mobius_orbit(z);
        for (const auto& w : orbit) {
            CHECK(eval(family_poly(s), w).is_zero());
            CHECK(param_from_root(w) == s);
        }
        const auto roots = family_rational_roots(s);
        REQUIRE(roots.size() == 4);
        std::vector<Rat> sorted(orbit.begin(), orbit.end());
        std::sort(sorted.begin(), sorted.end());
        CHECK(roots == sorted);
        for (const auto& r : roots) {
            CHECK(r != 0);
            CHECK(r != 1);
            CHECK(r != -1);
        }
        CHECK(galois_class(s) == GaloisClass::Trivial);
    }
    CHECK_THROWS_AS(mobius_orbit(Rat(1)), DomainError);
    CHECK_THROWS_AS(param_from_root(Rat(0)), DomainError);
}

TEST_CASE("factorization reproduces the family polynomial") {
    oracle::RandomRat gen(24, 300, 50);
    for (int i = 0; i < 200; ++i) {
        Rat a;
        switch (i % 3) {
            case 0: a = gen(); break;
            case 1: {
                // a = u - 4/u gives a C2 or split member
                Rat u = gen();
                if (u.is_zero()) u = Rat(5);
                a = u - Rat(4) / u;
                break;
            }
            default: a = param_from_root(random_admissible(gen));
        }
        const auto fs = factorize_family(a);
        RationalPoly prod = RationalPoly::constant(Rat(1));
        for (const auto& f : fs) prod *= f;
        CHECK(prod == family_poly(a));
        const auto g = galois_class(a);
        if (g == GaloisClass::C4) CHECK(fs.size() == 1);
        if (g == GaloisClass::Trivial) CHECK(fs.size() == 4);
        if (g == GaloisClass::C2) {
            REQUIRE(fs.size() == 2);
            // X^2 - uX - 1 and X^2 - vX - 1
            const Rat u = -fs[0].coeff(1);
            const Rat v = -fs[1].coeff(1);
            CHECK(fs[0].coeff(0) == -1);
            CHECK(fs[1].coeff(0) == -1);
            CHECK(u < v);
            CHECK(u + v == a);
            CHECK(u * v == -4);
        }
    }
}

TEST_CASE("quadratic subfield classes") {
    CHECK(quadratic_subfield_class(Rat(1)) == 17);
    CHECK(quadratic_subfield_class(Rat(103)) == 17);
    CHECK(quadratic_subfield_class(Rat(2)) == 5);
    CHECK(quadratic_subfield_class(Rat(22)) == 5);
    CHECK(quadratic_subfield_class(Rat(4)) == 2);
    CHECK(quadratic_subfield_class(Rat(956)) == 2);
    CHECK(quadratic_subfield_class(Rat(3)) == 5);
    CHECK(quadratic_subfield_class(Rat(0)) == 2);
    CHECK(quadratic_subfield_class(Rat(Int(7), Int(6))) == 1);
}

TEST_CASE("quadratic subfield class against independent discriminants") {
    oracle::RandomRat gen(25, 500, 40);
    for (int i = 0; i < 300; ++i) {
        Rat a = gen();
        if (i % 2) {
            Rat u = gen();
            if (u.is_zero()) u = Rat(7);
            a = u - Rat(4) / u;
        }
        const auto g = galois_class(a);
        if (g == GaloisClass::C4) {
            // Q(sqrt disc) is the fixed field of the index-2 subgroup
            CHECK(quadratic_subfield_class(a) == square_class(generic_discriminant(family_poly(a))));
        } else if (g == GaloisClass::C2) {
            // both quadratic factors define the same field: b^2 - 4c
            const auto fs = factorize_family(a);
            const Rat d0 = fs[0].coeff(1) * fs[0].coeff(1) - 4 * fs[0].coeff(0);
            const Rat d1 = fs[1].coeff(1) * fs[1].coeff(1) - 4 * fs[1].coeff(0);
            CHECK(square_class(d0) == square_class(d1));
            CHECK(quadratic_subfield_class(a) == square_class(d0));
        } else {
            CHECK(quadratic_subfield_class(a) == 1);
        }
    }
}

}
