#pragma once

// The Thue side: F_m(X, Y) = X^4 - m X^3 Y - 6 X^2 Y^2 + m X Y^3 + Y^4 = c.
//
// F_m(X, 1) = f_m(X). A primitive (x, y) with F_m(x, y) | 4(m^2 + 16) and
// xy(x+y)(x-y) != 0 corresponds to a field partner through
//   N = m + (m^2 + 16) xy(x+y)(x-y) / F_m(x, y),
// and every such solution sits in an 8-element orbit sharing one N.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqk/isomorphism.hpp"
#include "sqk/numeric.hpp"

namespace sqk {

struct Point {
    Int x;
    Int y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    Point operator-() const { return {-x, -y}; }
};

/// (x mod 2, y mod 2).
enum class Parity { P00, P01, P10, P11 };

std::string_view to_string(Parity p);
std::optional<Parity> parse_parity(std::string_view s);
Parity parity_of(const Int& x, const Int& y);

struct ThueSolution {
    Int m;
    Int x;
    Int y;
    Int c;
    /// N from the correspondence map; unset when c = 0.
    std::optional<Rat> n_value;
    bool trivial = false;
    bool primitive = false;
    Parity parity = Parity::P00;

    friend bool operator==(const ThueSolution&, const ThueSolution&) = default;
};

Int f_eval(const Int& m, const Int& x, const Int& y);

/// xy(x+y)(x-y).
Int xy_product(const Int& x, const Int& y);

/// Requires (x, y) != (0, 0).
ThueSolution classify(const Int& m, const Int& x, const Int& y);

/// m + (m^2 + 16) xy(x+y)(x-y) / F_m(x, y); requires F_m(x, y) != 0.
Rat n_map(const Int& m, const Int& x, const Int& y);

/// The eight primitive solutions attached to a primitive non-trivial point.
/// F takes one odd value c on odd_side and -4c on even_side. The input lands
/// on odd_side when its parity is (0,1)/(1,0) and on even_side for (1,1).
struct Orbit8 {
    std::array<Point, 4> odd_side;   // ±(x, y), ±(y, -x)
    std::array<Point, 4> even_side;  // ±(x-y, x+y), ±(x+y, -x+y)
};

Orbit8 orbit8(const Int& x, const Int& y);

/// (x - y, x + y); requires gcd(x, y) = 1. Multiplies F_m by -4.
Point parity_transform(const Int& x, const Int& y);

/// ((x + y)/2, (-x + y)/2); requires both coordinates odd. Divides F_m by -4.
Point parity_inverse(const Int& x, const Int& y);

/// Primitive (x, y) in the box |x|, |y| <= bound with F_m(x, y) dividing
/// 4(m^2 + 16), ordered by (x, y). Only complete inside the box.
std::vector<ThueSolution> search_bounded(const Int& m, const Int& bound);

/// Picks the orbit member used to report a solution: odd F value first,
/// then smallest |x| + |y|, then smallest x (z = x/y with y > 0).
Rat representative_root(const std::vector<Rat>& orbit);

struct FieldPartner {
    Int n;
    IsoWitness witness;
    Rat z;
    Point solution;
    Int c;
};

/// Every 0 < n <= n_max, n != |m|, whose splitting field equals that of f_m.
std::vector<FieldPartner> search_via_fields(const Int& m, const Int& n_max);

struct BezoutCertificate {
    Int h;  // (m^2+16) xy(x+y)(x-y)
    Int f;  // F_m(x, y)
    Int p;  // P(x, y)
    Int q;  // Q(x, y)
    Int p_rot;  // P(y, -x)
    Int q_rot;  // Q(y, -x)
    Int lhs1, rhs1;  // H P + F Q  vs  4(m^2+16) y^7
    Int lhs2, rhs2;  // H P(y,-x) + F Q(y,-x)  vs  -4(m^2+16) x^7

    bool holds() const { return lhs1 == rhs1 && lhs2 == rhs2; }
};

BezoutCertificate bezout_certificate(const Int& m, const Int& x, const Int& y);

/// Number of positive partners n != |m| from the count of non-trivial
/// primitive solutions in the box (which must be a multiple of 8).
/// Rejects the reducible parameters m in {0, 3, -3}.
std::size_t count_fields(const Int& m, const Int& bound);

}  // namespace sqk
