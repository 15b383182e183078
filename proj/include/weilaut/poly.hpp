#pragma once

#include "weilaut/integer.hpp"
#include "weilaut/numtheory.hpp"

#include <map>
#include <string>
#include <vector>

namespace weilaut {

// Dense integer polynomial, constant term first, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const Int& c) { return IntPoly({c}); }
    // x^m - 1, m >= 1
    static IntPoly xm_minus_one(long long m)
    {
        std::vector<Int> c(static_cast<size_t>(m) + 1, 0);
        c[0] = -1;
        c.back() = 1;
        return IntPoly(std::move(c));
    }

    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(size_t i) const
    {
        static const Int zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const
    {
        if (c_.empty()) throw std::invalid_argument("leading: zero polynomial");
        return c_.back();
    }

    Int eval(const Int& x) const
    {
        Int r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b)
    {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    IntPoly pow(long long e) const
    {
        if (e < 0) throw std::invalid_argument("IntPoly::pow: negative exponent");
        IntPoly r = constant(1), base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    // exact division; throws if the division leaves a remainder
    IntPoly divide_exact(const IntPoly& d) const
    {
        if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
        if (is_zero()) return IntPoly{};
        if (degree() < d.degree()) throw std::invalid_argument("divide_exact: not divisible");
        std::vector<Int> rem = c_;
        std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, 0);
        for (long long i = degree() - d.degree(); i >= 0; --i) {
            Int top = rem[static_cast<size_t>(i + d.degree())];
            if (top % d.leading() != 0) throw std::invalid_argument("divide_exact: not divisible");
            Int q = top / d.leading();
            quot[static_cast<size_t>(i)] = q;
            for (long long j = 0; j <= d.degree(); ++j)
                rem[static_cast<size_t>(i + j)] -= q * d.coeff(static_cast<size_t>(j));
        }
        for (const Int& r : rem)
            if (r != 0) throw std::invalid_argument("divide_exact: not divisible");
        return IntPoly(std::move(quot));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero()) return "0";
        std::string s;
        for (long long i = degree(); i >= 0; --i) {
            const Int& c = coeff(static_cast<size_t>(i));
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Int a = int_abs(c);
            if (i == 0) {
                s += to_dec(a);
            } else {
                if (a != 1) s += to_dec(a) + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// m-th cyclotomic polynomial via Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline IntPoly cyclotomic_poly(long long m)
{
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    std::map<long long, IntPoly> phi;
    for (long long d : divisors(m)) {
        IntPoly p = IntPoly::xm_minus_one(d);
        for (long long dd : divisors(d))
            if (dd < d) p = p.divide_exact(phi.at(dd));
        phi.emplace(d, std::move(p));
    }
    return phi.at(m);
}

// Necessary coefficient condition for h to be a q-Weil polynomial: the root
// multiset is closed under r -> q/r, i.e. t^(2n) h(q/t) = eps * q^n * h(t)
// with eps = +-1. Degree 1 and 2 are decided exactly (the real-root modulus
// is pinned down there); for even degree >= 4 the pairing alone is checked,
// which the full Weil property implies but not conversely.
inline bool weil_functional_equation(const IntPoly& h, const Int& q)
{
    if (h.degree() < 1) throw std::invalid_argument("weil_functional_equation: degree must be >= 1");
    if (!h.is_monic()) throw std::invalid_argument("weil_functional_equation: h must be monic");
    if (q < 2) throw std::invalid_argument("weil_functional_equation: q must be >= 2");

    const long long deg = h.degree();
    if (deg == 1) {
        Int c = -h.coeff(0); // h = t - c
        return c * c == q;
    }
    if (deg % 2 != 0) return false; // an odd-degree root set cannot pair under r -> q/r
    const long long n = deg / 2;

    if (deg == 2) {
        const Int& b = h.coeff(1);
        const Int& c0 = h.coeff(0);
        if (c0 == q) return b * b <= 4 * q; // conjugate complex roots (or double real root) of modulus sqrt(q)
        if (c0 == -q) return b == 0;        // t^2 - q, roots +-sqrt(q)
        return false;
    }

    Int qn = int_pow(q, n);
    int eps;
    if (h.coeff(0) == qn)
        eps = 1;
    else if (h.coeff(0) == -qn)
        eps = -1;
    else
        return false;
    for (long long i = 1; i <= n; ++i) {
        Int lhs = h.coeff(static_cast<size_t>(2 * n - i)) * int_pow(q, n - i);
        Int rhs = eps * h.coeff(static_cast<size_t>(i));
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace weilaut
