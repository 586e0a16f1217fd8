#pragma once

// Dense univariate polynomials over Q.

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "sqk/numeric.hpp"

namespace sqk {

class RationalPoly {
public:
    RationalPoly() = default;
    /// Coefficients in ascending degree; trailing zeros are trimmed.
    explicit RationalPoly(std::vector<Rat> coeffs);
    RationalPoly(std::initializer_list<Rat> coeffs);

    static RationalPoly constant(const Rat& c);
    /// X - root.
    static RationalPoly linear_factor(const Rat& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i (zero beyond the degree).
    Rat coeff(int i) const;
    const Rat& leading() const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const Rat& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rat& c) { return a *= c; }
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    RationalPoly monic() const;

    /// "c0 + c1*X + ... + cn*X^n", zero terms omitted.
    std::string str() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoly& p);

struct DivMod {
    RationalPoly quotient;
    RationalPoly remainder;
};

/// Euclidean division; throws DomainError for a zero divisor.
DivMod divmod(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd (zero only when both inputs are zero).
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

Rat eval(const RationalPoly& p, const Rat& x);

RationalPoly derivative(const RationalPoly& p);

bool is_squarefree(const RationalPoly& p);

/// Scales p to a primitive integer polynomial with positive leading coefficient.
std::vector<Int> primitive_integer_coeffs(const RationalPoly& p);

/// All rational roots with multiplicity, ascending. Candidate enumeration
/// over r/s with r | constant term and s | leading coefficient of the
/// cleared polynomial.
std::vector<Rat> rational_roots(const RationalPoly& p);

/// Determinant of the Sylvester matrix of p and q.
Rat sylvester_resultant(const RationalPoly& p, const RationalPoly& q);

/// Exact determinant of a square rational matrix (row-major).
Rat determinant(std::vector<std::vector<Rat>> m);

/// Degrees of the irreducible factors, sorted descending.
struct DecompositionType {
    std::vector<int> parts;

    int degree() const;
    std::string str() const;
    friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

std::ostream& operator<<(std::ostream& os, const DecompositionType& dt);

/// Decomposition type of a squarefree X^4 + e*X^2 + g over Q.
DecompositionType biquadratic_dt(const RationalPoly& p);

}  // namespace sqk
