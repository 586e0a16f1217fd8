#pragma once

// Exact integer and rational arithmetic shared by every other module.
//
// Int is GMP's mpz_class. Rat is a reduced fraction over Int with a strictly
// positive denominator; zero is always 0/1.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sqk {

/// Raised when an operation is called outside its mathematical domain
/// (zero denominator, degenerate Möbius input, and so on).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Int = mpz_class;

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
    Rat(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// Reduces num/den; throws DomainError when den == 0.
    Rat(Int num, Int den);

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return sgn(num_) == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return sgn(num_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "num/den", or just "num" when the value is an integer.
    std::string str() const;

private:
    struct Raw {};
    Rat(Raw, Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {}

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat normalize(const Int& num, const Int& den);

Rat abs(const Rat& r);

/// Parses "p", "-p", "p/q" (q may carry a sign). No whitespace allowed.
std::optional<Rat> parse_rat(std::string_view text);
std::optional<Int> parse_int(std::string_view text);

std::string to_string(const Int& v);

/// All signed divisors of n in ascending order.
std::vector<Int> divisors_signed(const Int& n);

/// Positive divisors of |n| in ascending order (n != 0).
std::vector<Int> divisors_positive(const Int& n);

/// Squarefree d with r = d * q^2 for some rational q.
Int square_class(const Rat& r);

/// Squarefree part of a nonzero integer, sign preserved.
Int squarefree_part(const Int& n);

bool is_square(const Int& n);
bool is_square(const Rat& r);

/// Exact square root of a rational square; throws DomainError otherwise.
Rat exact_sqrt(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// a^e for small non-negative e.
Int pow(const Int& a, unsigned long e);
Rat pow(const Rat& a, unsigned long e);

/// Returns the value if it fits in int64_t.
std::optional<std::int64_t> to_int64(const Int& v);

}  // namespace sqk
