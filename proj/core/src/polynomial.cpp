#include "sqk/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqk {

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly RationalPoly::constant(const Rat& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear_factor(const Rat& root) { return RationalPoly({-root, Rat(1)}); }

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat RationalPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RationalPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rat& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    const Rat inv = Rat(1) / leading();
    return *this * inv;
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rat(1)) os << mag << "*";
        os << "X";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << p.str(); }

DivMod divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {RationalPoly(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(da - db + 1));
    const Rat lead_inv = Rat(1) / b.leading();
    for (int k = da - db; k >= 0; --k) {
        const Rat q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a;
    RationalPoly y = b;
    while (!y.is_zero()) {
        RationalPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Rat eval(const RationalPoly& p, const Rat& x) {
    Rat acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RationalPoly derivative(const RationalPoly& p) {
    if (p.degree() < 1) return RationalPoly();
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeffs()[static_cast<std::size_t>(i)] * Rat(i));
    return RationalPoly(std::move(out));
}

bool is_squarefree(const RationalPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree test of the zero polynomial");
    return gcd(p, derivative(p)).degree() == 0;
}

std::vector<Int> primitive_integer_coeffs(const RationalPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    Int l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        out.emplace_back(c.num() * (l / c.den()));
        content = gcd(content, out.back());
    }
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

namespace {

// s^n * A(r/s) for integer coefficients A.
Int homogeneous_eval(const std::vector<Int>& a, const Int& r, const Int& s) {
    Int acc = 0;
    Int s_pow = 1;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * r + *it * s_pow;
        s_pow *= s;
    }
    return acc;
}

// Exact quotient of A(X) by (sX - r); requires A(r/s) = 0.
std::vector<Int> deflate(const std::vector<Int>& a, const Int& r, const Int& s) {
    const std::size_t n = a.size() - 1;
    std::vector<Int> b(n);
    Int carry = 0;
    for (std::size_t i = n; i >= 1; --i) {
        b[i - 1] = (a[i] + r * carry);
        mpz_divexact(b[i - 1].get_mpz_t(), b[i - 1].get_mpz_t(), s.get_mpz_t());
        carry = b[i - 1];
    }
    return b;
}

}  // namespace

std::vector<Rat> rational_roots(const RationalPoly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    if (p.degree() < 1) return {};
    std::vector<Int> a = primitive_integer_coeffs(p);
    std::vector<Rat> roots;
    std::size_t lead_zero = 0;
    while (sgn(a[lead_zero]) == 0) {
        roots.emplace_back(0);
        ++lead_zero;
    }
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lead_zero));
    if (a.size() < 2) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    std::vector<Rat> candidates;
    const auto rs = divisors_positive(a.front());
    const auto ss = divisors_positive(a.back());
    for (const auto& r : rs) {
        for (const auto& s : ss) {
            if (gcd(r, s) != 1) continue;
            candidates.emplace_back(r, s);
            candidates.emplace_back(Int(-r), s);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto& c : candidates) {
        while (a.size() >= 2 && sgn(homogeneous_eval(a, c.num(), c.den())) == 0) {
            roots.push_back(c);
            a = deflate(a, c.num(), c.den());
        }
        if (a.size() < 2) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            const Rat f = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Rat sylvester_resultant(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant with the zero polynomial");
    const int dp = p.degree();
    const int dq = q.degree();
    if (dp == 0 && dq == 0) return Rat(1);
    const auto size = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<Rat>> m(size, std::vector<Rat>(size));
    for (int row = 0; row < dq; ++row) {
        for (int j = 0; j <= dp; ++j) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = p.coeff(dp - j);
    }
    for (int row = 0; row < dp; ++row) {
        for (int j = 0; j <= dq; ++j) {
            m[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + j)] = q.coeff(dq - j);
        }
    }
    return determinant(std::move(m));
}

int DecompositionType::degree() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::string DecompositionType::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DecompositionType& dt) { return os << "{" << dt.str() << "}"; }

DecompositionType biquadratic_dt(const RationalPoly& p) {
    if (p.degree() != 4 || !p.coeff(1).is_zero() || !p.coeff(3).is_zero()) {
        throw DomainError("not a biquadratic quartic: " + p.str());
    }
    if (!is_squarefree(p)) throw DomainError("biquadratic is not squarefree: " + p.str());
    const RationalPoly monic = p.monic();
    const Rat e = monic.coeff(2);
    const Rat g = monic.coeff(0);

    // X^2 = t with t^2 + e t + g = 0; rational roots need t rational and square
    const Rat disc = e * e - Rat(4) * g;
    if (is_square(disc)) {
        const Rat s = exact_sqrt(disc);
        const int squares = int(is_square((-e + s) / Rat(2))) + int(is_square((-e - s) / Rat(2)));
        if (squares == 2) return {{1, 1, 1, 1}};
        if (squares == 1) return {{2, 1, 1}};
        return {{2, 2}};
    }
    // (X^2 + pX + q)(X^2 - pX + q): q^2 = g, p^2 = 2q - e
    if (is_square(g)) {
        const Rat q = exact_sqrt(g);
        for (const Rat& qq : {q, -q}) {
            const Rat p2 = Rat(2) * qq - e;
            if (!p2.is_zero() && is_square(p2)) return {{2, 2}};
        }
    }
    return {{4}};
}

}  // namespace sqk
