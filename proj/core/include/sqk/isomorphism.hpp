#pragma once

// Field isomorphism and intersection tests for pairs f_a, f_b.
//
// The pair resolvents are again family members: f_{A1} and f_{A2} with
//   A1 = (ab + 16) / (b - a),   A2 = (ab - 16) / (a + b).
// Spl f_a = Spl f_b exactly when one of them splits over Q, and a rational
// root z of f_{A1} (resp. f_{A2}) is the same z that produces b (resp. -b)
// through  B = a + (a^2 + 16) z (z^2 - 1) / f_a(z).
//
// The complementary resolvent is not always irreducible: at (a, b) = (1, 103)
// f_{A1} splits and f_{A2} = f_{87/104} factors as two quadratics. The
// intersection table below follows the decomposition types in that case.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqk/numeric.hpp"
#include "sqk/polynomial.hpp"
#include "sqk/quartic_family.hpp"

namespace sqk {

struct APair {
    Rat a1;
    Rat a2;
};

/// Requires a != +-b.
APair a_pair(const Rat& a, const Rat& b);

/// (f_{A1}, f_{A2}); requires a != +-b.
std::pair<RationalPoly, RationalPoly> resolvent_quartics(const Rat& a, const Rat& b);

enum class Branch { None, A1, A2, Both, Degenerate };

std::string_view to_string(Branch b);

struct IsoWitness {
    bool same_field = false;
    Branch branch = Branch::None;
    /// Rational roots of f_{A1} (solutions of B = b) and f_{A2} (B = -b).
    std::vector<Rat> roots_a1;
    std::vector<Rat> roots_a2;

    /// +1 when b itself is reached (A1 branch), -1 for -b (A2 branch), 0 otherwise.
    int sign() const;
    /// Roots on the witnessed branch (A1 preferred when both split).
    const std::vector<Rat>& roots_z() const;
};

IsoWitness iso_test(const Rat& a, const Rat& b);

/// B = a + (a^2 + 16) z (z + 1)(z - 1) / f_a(z); requires f_a(z) != 0.
Rat generate_equivalent(const Rat& a, const Rat& z);

/// (roots of f_{A1}, roots of f_{A2}); requires a != +-b.
std::pair<std::vector<Rat>, std::vector<Rat>> recover_z(const Rat& a, const Rat& b);

struct BiquadraticResolvents {
    RationalPoly r1;
    RationalPoly r2;
    bool r1_squarefree = false;
    bool r2_squarefree = false;
};

/// The two biquadratic resolvent pairs:
///   variant 1: X^4 - (a^2+16)(b^2+16)(X^2 - 4(a -+ b)^2)
///   variant 2: X^4 - X^2 + 4(a -+ b)^2 / ((a^2+16)(b^2+16))
BiquadraticResolvents biquadratic_resolvents(const Rat& a, const Rat& b, int variant);

enum class Intersection {
    Base,          // L1 ∩ L2 = Q
    Quadratic,     // [L1 ∩ L2 : Q] = 2
    Equal,         // L1 = L2
    Contains,      // L1 ⊃ L2
    ContainsBase,  // L1 ⊃ L2 = Q
    EqualBase,     // L1 = L2 = Q
};

std::string_view to_string(Intersection i);

struct IntersectionReport {
    Rat a;  // after ordering so that #G1 >= #G2
    Rat b;
    bool swapped = false;
    GaloisClass g1 = GaloisClass::C4;
    GaloisClass g2 = GaloisClass::C4;
    std::string g_joint;  // "C4xC4", "C4xC2", "C4", "C2xC2", "C2", "1"
    Intersection intersection = Intersection::Base;
    /// Square class of the common quadratic field when it is quadratic.
    std::optional<Int> quadratic_class;
    /// Unset for the degenerate inputs b = +-a.
    std::optional<DecompositionType> dt1;
    std::optional<DecompositionType> dt2;
};

DecompositionType family_dt(GaloisClass g);

IntersectionReport intersection_report(const Rat& a, const Rat& b);

}  // namespace sqk
