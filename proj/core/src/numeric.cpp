#include "sqk/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace sqk {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw DomainError("rational with zero denominator");
    if (sgn(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (sgn(num_) == 0) {
        den_ = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rat Rat::operator-() const { return Rat(Raw{}, -num_, den_); }

Rat& Rat::operator+=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ += o.num_;
        return *this;
    }
    *this = Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ -= o.num_;
        return *this;
    }
    *this = Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ *= o.num_;
        return *this;
    }
    *this = Rat(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    *this = Rat(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat normalize(const Int& num, const Int& den) { return Rat(num, den); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::optional<Int> parse_int(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) return std::nullopt;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
    }
    std::string digits(text.substr(i));
    Int v(digits, 10);
    if (text[0] == '-') v = -v;
    return v;
}

std::optional<Rat> parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto v = parse_int(text);
        if (!v) return std::nullopt;
        return Rat(*v);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || sgn(*den) == 0) return std::nullopt;
    return Rat(*num, *den);
}

std::string to_string(const Int& v) { return v.get_str(); }

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Rat pow(const Rat& a, unsigned long e) {
    Rat r(1);
    for (unsigned long i = 0; i < e; ++i) r *= a;
    return r;
}

std::optional<std::int64_t> to_int64(const Int& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return static_cast<std::int64_t>(v.get_si());
}

std::vector<Int> divisors_positive(const Int& n) {
    if (sgn(n) == 0) throw DomainError("divisors of zero");
    Int m = ::abs(n);
    std::vector<Int> small;
    std::vector<Int> large;
    for (Int d = 1; d * d <= m; ++d) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            Int q = m / d;
            if (q != d) large.push_back(std::move(q));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Int> divisors_signed(const Int& n) {
    auto pos = divisors_positive(n);
    std::vector<Int> out;
    out.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

namespace {

// Squarefree kernel of a positive 64-bit value by trial division.
std::uint64_t squarefree_u64(std::uint64_t m) {
    std::uint64_t out = 1;
    for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1) out *= p;
    }
    return out * m;
}

}  // namespace

Int squarefree_part(const Int& n) {
    if (sgn(n) == 0) throw DomainError("square class of zero");
    const int s = sgn(n);
    Int m = ::abs(n);
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        Int out(squarefree_u64(m.get_ui()));
        return s < 0 ? Int(-out) : out;
    }
    Int out = 1;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e % 2 == 1) out *= p;
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            m = 1;
            break;
        }
    }
    out *= m;
    return s < 0 ? Int(-out) : out;
}

Int square_class(const Rat& r) {
    if (r.is_zero()) throw DomainError("square class of zero");
    return squarefree_part(r.num() * r.den());
}

bool is_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& r) { return is_square(r.num()) && is_square(r.den()); }

Rat exact_sqrt(const Rat& r) {
    if (!is_square(r)) throw DomainError("not a rational square: " + r.str());
    Int a, b;
    mpz_sqrt(a.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), r.den().get_mpz_t());
    return Rat(a, b);
}

}  // namespace sqk
