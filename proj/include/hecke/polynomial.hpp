#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hecke/concepts.hpp"
#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// Univariate polynomial over an exact coefficient field. Coefficient i is
// the coefficient of x^i; the zero polynomial is the empty sequence and
// otherwise the leading coefficient is nonzero.
template <field F>
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(F::one()); }
    static Poly constant(const F& c) {
        Poly p;
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }
    static Poly gen() {
        Poly p;
        p.c_ = {F::zero(), F::one()};
        return p;
    }
    static Poly from_coeffs(std::vector<F> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const F& leading() const { return c_.back(); }
    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F::zero();
        return c_[i];
    }
    const std::vector<F>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const F& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    // Multiply by x^k.
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), F::zero());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // Euclidean division; `b` nonzero.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw field_error("polynomial division by zero");
        Poly rem = a;
        Poly quo;
        int db = b.degree();
        if (rem.degree() >= db)
            quo.c_.assign(rem.degree() - db + 1, F::zero());
        const F lb_inv = F::one() / b.leading();
        while (!rem.is_zero() && rem.degree() >= db) {
            int k = rem.degree() - db;
            F f = rem.leading() * lb_inv;
            quo.c_[k] = f;
            for (int i = 0; i <= db; ++i)
                rem.c_[k + i] = rem.c_[k + i] - f * b.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }

    // Exact quotient; throws if the division leaves a remainder.
    friend Poly divexact(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw field_error("inexact polynomial division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F::one() / leading());
    }

    F eval(const F& x) const {
        F r = F::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    std::string str(const char* var = "q") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = cs.size() > 1 && cs[0] == '-' &&
                       cs.find_first_of("+- ", 1) == std::string::npos;
            if (neg) cs.erase(0, 1);
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (i == 0) {
                out += cs;
            } else {
                if (cs != "1") {
                    bool atomic = cs.find_first_of("+-/ ") == std::string::npos;
                    out += atomic ? cs : "(" + cs + ")";
                    out += "*";
                }
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

namespace detail {

// Primitive pseudo-remainder sequence over Z. Exact; used as the fast path
// for gcds of rational polynomials (the inner levels of the field tower).
inline std::vector<mpz_class> prim_part(std::vector<mpz_class> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return v;
    mpz_class g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(v.back()) < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        mpz_class la = a.back();
        int k = static_cast<int>(a.size()) - 1 - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        --e;
    }
    // remaining power of lb is irrelevant for the primitive PRS
    (void)e;
    return a;
}

inline std::vector<mpz_class> int_poly_gcd(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    a = prim_part(std::move(a));
    b = prim_part(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = prim_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace detail

// Monic gcd. Generic path: Euclidean algorithm with monic normalization at
// every step. Rational coefficients take the integer primitive-PRS path,
// which avoids fraction blowup in the nested tower.
template <field F>
Poly<F> poly_gcd(const Poly<F>& a, const Poly<F>& b) {
    if constexpr (std::is_same_v<F, Rat>) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        auto to_int = [](const Poly<Rat>& p) {
            mpz_class l = 1;
            for (const auto& c : p.coeffs())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
            std::vector<mpz_class> v;
            v.reserve(p.coeffs().size());
            for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
            return v;
        };
        auto g = detail::int_poly_gcd(to_int(a), to_int(b));
        std::vector<Rat> c;
        c.reserve(g.size());
        for (auto& z : g) c.emplace_back(std::move(z));
        return Poly<Rat>::from_coeffs(std::move(c)).monic();
    } else {
        Poly<F> x = a.monic(), y = b.monic();
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            auto [q, r] = divrem(x, y);
            (void)q;
            x = std::move(y);
            y = r.monic();
        }
        return x;   // already monic (or zero)
    }
}

} // namespace hecke
