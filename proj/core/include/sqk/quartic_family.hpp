#pragma once

// The simplest quartic family f_a(X) = X^4 - a X^3 - 6 X^2 + a X + 1.
//
// Every member is the orbit polynomial of a root z under the order-four
// Möbius map z -> (z - 1)/(z + 1). Two facts drive the classification below:
//   * one rational root forces four (the whole orbit is rational);
//   * f_a(X) / X^2 = u^2 - a u - 4 with u = X - 1/X, so any rational
//     quadratic split has the shape (X^2 - uX - 1)(X^2 - vX - 1) with
//     u + v = a and uv = -4, which needs a^2 + 16 to be a rational square.

#include <array>
#include <string_view>
#include <vector>

#include "sqk/numeric.hpp"
#include "sqk/polynomial.hpp"

namespace sqk {

enum class GaloisClass { C4, C2, Trivial };

std::string_view to_string(GaloisClass g);

/// Order of the Galois group (4, 2 or 1).
int group_order(GaloisClass g);

RationalPoly family_poly(const Rat& a);

/// 4 (a^2 + 16)^3.
Rat discriminant(const Rat& a);

/// Rational roots of f_a through the u = X - 1/X reduction: empty or a full
/// Möbius orbit of four values, ascending.
std::vector<Rat> family_rational_roots(const Rat& a);

GaloisClass galois_class(const Rat& a);

/// Monic irreducible factors of f_a over Q. Linear factors ascend by root;
/// quadratic factors X^2 - uX - 1 ascend by u.
std::vector<RationalPoly> factorize_family(const Rat& a);

/// {z, (z-1)/(z+1), -1/z, -(z+1)/(z-1)}; z must avoid {0, 1, -1}.
std::array<Rat, 4> mobius_orbit(const Rat& z);

/// s = (z^4 - 6 z^2 + 1) / (z (z^2 - 1)), the parameter with f_s(z) = 0.
Rat param_from_root(const Rat& z);

/// Squarefree d such that Q(sqrt d) is the quadratic subfield of the
/// splitting field of f_a (1 when f_a splits over Q).
Int quadratic_subfield_class(const Rat& a);

}  // namespace sqk
