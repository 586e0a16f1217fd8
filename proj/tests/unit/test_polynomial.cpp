#include <doctest.h>

#include <random>

#include "sqk/polynomial.hpp"
#include "support/oracles.hpp"

using namespace sqk;

namespace {

RationalPoly from_roots(const std::vector<Rat>& roots, const Rat& lead) {
    RationalPoly p = RationalPoly::constant(lead);
    for (const auto& r : roots) p *= RationalPoly::linear_factor(r);
    return p;
}

RationalPoly random_poly(oracle::RandomRat& gen, int degree) {
    std::vector<Rat> cs;
    for (int i = 0; i <= degree; ++i) cs.push_back(gen());
    if (cs.back().is_zero()) cs.back() = Rat(1);
    return RationalPoly(cs);
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("construction trims and prints") {
    RationalPoly p{Rat(-1), Rat(-4), Rat(1), Rat(0), Rat(0)};
    CHECK(p.degree() == 2);
    CHECK(p.str() == "-1 - 4*X + X^2");
    CHECK(RationalPoly{}.degree() == -1);
    CHECK(RationalPoly{Rat(0)}.is_zero());
    CHECK(RationalPoly{Rat(0)}.str() == "0");
    CHECK(RationalPoly{Rat(Int(1), Int(2)), Rat(0), Rat(-3)}.str() == "1/2 - 3*X^2");
    CHECK(RationalPoly::linear_factor(Rat(3)) == RationalPoly{Rat(-3), Rat(1)});
}

TEST_CASE("eval and derivative") {
    RationalPoly f{Rat(1), Rat(1), Rat(-6), Rat(-1), Rat(1)};  // f_1
    CHECK(eval(f, Rat(0)) == 1);
    CHECK(eval(f, Rat(1)) == -4);
    CHECK(eval(f, Rat(-1)) == -4);
    CHECK(eval(f, Rat(2)) == -13);
    CHECK(derivative(f) == RationalPoly{Rat(1), Rat(-12), Rat(-3), Rat(4)});
    CHECK(derivative(RationalPoly::constant(Rat(5))).is_zero());
}

TEST_CASE("eval agrees with a naive power sum and is multiplicative") {
    oracle::RandomRat gen(11, 50, 20);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_poly(gen, 1 + i % 5);
        const auto q = random_poly(gen, 1 + i % 3);
        const Rat x = gen();
        CHECK(eval(p, x) == oracle::eval_naive(p.coeffs(), x));
        CHECK(eval(p * q, x) == eval(p, x) * eval(q, x));
    }
}

TEST_CASE("division and gcd") {
    const auto a = from_roots({Rat(1), Rat(2), Rat(Int(-1), Int(3))}, Rat(3));
    const auto b = from_roots({Rat(2), Rat(5)}, Rat(1));
    const auto dm = divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
    CHECK(gcd(a, b) == RationalPoly::linear_factor(Rat(2)));
    CHECK_THROWS_AS(divmod(a, RationalPoly{}), DomainError);
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(from_roots({Rat(1), Rat(2)}, Rat(1))));
    CHECK_FALSE(is_squarefree(from_roots({Rat(1), Rat(1)}, Rat(1))));
    CHECK(is_squarefree(RationalPoly{Rat(1), Rat(0), Rat(1)}));
}

TEST_CASE("rational roots of family members") {
    // 6 f_{7/6} cleared
    RationalPoly f{Rat(6), Rat(7), Rat(-36), Rat(-7), Rat(6)};
    CHECK(rational_roots(f) == std::vector<Rat>{Rat(-2), Rat(Int(-1), Int(3)), Rat(Int(1), Int(2)), Rat(3)});
    CHECK(rational_roots(RationalPoly{Rat(1), Rat(0), Rat(-6), Rat(0), Rat(1)}).empty());
    CHECK(rational_roots(RationalPoly{Rat(1), Rat(3), Rat(-6), Rat(-3), Rat(1)}).empty());
}

TEST_CASE("rational roots keep multiplicity and handle zero roots") {
    const auto p = from_roots({Rat(0), Rat(Int(2), Int(3)), Rat(Int(2), Int(3)), Rat(-5)}, Rat(Int(7), Int(2)));
    CHECK(rational_roots(p) == std::vector<Rat>{Rat(-5), Rat(0), Rat(Int(2), Int(3)), Rat(Int(2), Int(3))});
}

TEST_CASE("rational roots match exhaustive evaluation over the candidate grid") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> small(-6, 6);
    std::uniform_int_distribution<long> pos(1, 6);
    for (int i = 0; i < 150; ++i) {
        std::vector<Rat> roots;
        const int k = static_cast<int>(pos(rng)) % 4;
        for (int j = 0; j < k; ++j) roots.push_back(Rat(Int(small(rng)), Int(pos(rng))));
        // an irreducible quadratic factor keeps some candidates honest
        RationalPoly p = from_roots(roots, Rat(pos(rng))) * RationalPoly{Rat(pos(rng)), Rat(0), Rat(1)};
        // every root has |num| <= 6 and den <= 6; the grid covers all of them
        std::vector<Rat> expect;
        for (const auto& r : oracle::roots_by_grid(p.coeffs(), 6)) expect.push_back(r);
        std::vector<Rat> got = rational_roots(p);
        got.erase(std::unique(got.begin(), got.end()), got.end());
        CHECK(got == expect);
    }
}

TEST_CASE("primitive integer scaling") {
    RationalPoly p{Rat(Int(1), Int(2)), Rat(Int(-3), Int(4))};
    CHECK(primitive_integer_coeffs(p) == std::vector<Int>{-2, 3});
    CHECK(primitive_integer_coeffs(RationalPoly{Rat(6), Rat(4)}) == std::vector<Int>{3, 2});
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    oracle::RandomRat gen(13, 20, 5);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 20; ++t) {
            std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
            for (auto& row : m)
                for (auto& v : row) v = (t % 3 == 0 && gen().sign() > 0) ? Rat(0) : gen();
            CHECK(determinant(m) == oracle::determinant_leibniz(m));
        }
    }
}

TEST_CASE("resultant against the root product formula") {
    oracle::RandomRat gen(14, 9, 4);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> roots;
        const int dp = 1 + i % 4;
        for (int j = 0; j < dp; ++j) roots.push_back(gen());
        Rat lead = gen();
        if (lead.is_zero()) lead = Rat(2);
        const auto p = from_roots(roots, lead);
        const auto q = random_poly(gen, 1 + i % 3);
        Rat expect = pow(lead, static_cast<unsigned long>(q.degree()));
        for (const auto& r : roots) expect *= oracle::eval_naive(q.coeffs(), r);
        CHECK(sylvester_resultant(p, q) == expect);
    }
}

TEST_CASE("resultant vanishes exactly on shared roots") {
    oracle::RandomRat gen(15, 12, 6);
    for (int i = 0; i < 100; ++i) {
        const auto p1 = random_poly(gen, 1 + i % 3);
        const auto q1 = random_poly(gen, 1 + i % 2);
        const Rat r = gen();
        const auto shared = RationalPoly::linear_factor(r);
        CHECK(sylvester_resultant(p1 * shared, q1 * shared).is_zero());
        const bool coprime = gcd(p1, q1).degree() == 0;
        CHECK(sylvester_resultant(p1, q1).is_zero() == !coprime);
    }
}

TEST_CASE("family resultant law") {
    for (long m = -50; m <= 50; ++m) {
        const Int k = Int(m) * m + 16;
        RationalPoly h{Rat(0), Rat(-k), Rat(0), Rat(k)};
        RationalPoly f{Rat(1), Rat(m), Rat(-6), Rat(-m), Rat(1)};
        CHECK(sylvester_resultant(h, f) == Rat(16 * pow(k, 4)));
        // roots of h are 0, 1, -1
        const Rat alt = pow(Rat(k), 4) * eval(f, Rat(0)) * eval(f, Rat(1)) * eval(f, Rat(-1));
        CHECK(sylvester_resultant(h, f) == alt);
    }
}

TEST_CASE("biquadratic decomposition types on fixed examples") {
    CHECK(biquadratic_dt(RationalPoly{Rat(4), Rat(0), Rat(-5), Rat(0), Rat(1)}).parts == std::vector<int>{1, 1, 1, 1});
    CHECK(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(-6), Rat(0), Rat(1)}).parts == std::vector<int>{2, 2});
    CHECK(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(1), Rat(0), Rat(1)}).parts == std::vector<int>{2, 2});
    CHECK(biquadratic_dt(RationalPoly{Rat(-4), Rat(0), Rat(3), Rat(0), Rat(1)}).parts == std::vector<int>{2, 1, 1});
    CHECK(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}).parts == std::vector<int>{4});
    CHECK(biquadratic_dt(RationalPoly{Rat(-2), Rat(0), Rat(0), Rat(0), Rat(1)}).parts == std::vector<int>{4});
    CHECK(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)}).parts == std::vector<int>{4});
    CHECK(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)}).str() == "4");
    CHECK_THROWS_AS(biquadratic_dt(RationalPoly{Rat(1), Rat(0), Rat(-2), Rat(0), Rat(1)}), DomainError);
    CHECK_THROWS_AS(biquadratic_dt(RationalPoly{Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)}), DomainError);
}

TEST_CASE("biquadratic decomposition types against brute-force factor search") {
    // monic integer biquadratics: by Gauss's lemma any factor can be taken monic with integer coefficients
    int checked = 0;
    for (long e = -20; e <= 20; ++e) {
        for (long g = -20; g <= 20; ++g) {
            const RationalPoly f{Rat(g), Rat(0), Rat(e), Rat(0), Rat(1)};
            if (g == 0 || !is_squarefree(f)) continue;
            ++checked;
            const auto roots = oracle::roots_by_grid(f.coeffs(), 20);
            bool quadratic_factor = false;
            for (long p = -20; p <= 20 && !quadratic_factor; ++p)
                for (long q = -20; q <= 20 && !quadratic_factor; ++q)
                    quadratic_factor = divmod(f, RationalPoly{Rat(q), Rat(p), Rat(1)}).remainder.is_zero();
            std::vector<int> expect;
            if (roots.size() == 4) expect = {1, 1, 1, 1};
            else if (roots.size() == 2) expect = {2, 1, 1};
            else if (quadratic_factor) expect = {2, 2};
            else expect = {4};
            CHECK(biquadratic_dt(f).parts == expect);
            CHECK(std::vector<Rat>(rational_roots(f)) == roots);
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("biquadratic decomposition types on constructed products") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long> dist(-30, 30);
    std::uniform_int_distribution<long> den(1, 5);
    auto nonsquare = [&] {
        for (;;) {
            const Rat a(Int(dist(rng)), Int(den(rng)));
            if (!a.is_zero() && !is_square(a)) return a;
        }
    };
    auto square = [&] {
        for (;;) {
            const Rat s(Int(dist(rng)), Int(den(rng)));
            if (!s.is_zero()) return s * s;
        }
    };
    auto pure = [](const Rat& a) { return RationalPoly{-a, Rat(0), Rat(1)}; };
    for (int i = 0; i < 200; ++i) {
        const Rat s1 = square(), s2 = square(), n1 = nonsquare(), n2 = nonsquare();
        if (s1 != s2) CHECK(biquadratic_dt(pure(s1) * pure(s2)).parts == std::vector<int>{1, 1, 1, 1});
        CHECK(biquadratic_dt(pure(s1) * pure(n1)).parts == std::vector<int>{2, 1, 1});
        if (n1 != n2) CHECK(biquadratic_dt(pure(n1) * pure(n2)).parts == std::vector<int>{2, 2});
        // (X^2 + pX + q)(X^2 - pX + q) with an irreducible first factor
        const Rat p(Int(dist(rng) | 1), Int(den(rng)));
        const Rat q(Int(dist(rng)), Int(den(rng)));
        if (q.is_zero() || is_square(p * p - 4 * q)) continue;
        const auto prod = RationalPoly{q, p, Rat(1)} * RationalPoly{q, -p, Rat(1)};
        if (!is_squarefree(prod)) continue;
        CHECK(biquadratic_dt(prod).parts == std::vector<int>{2, 2});
    }
}

}
