#pragma once

#include <string>
#include <utility>

#include "hecke/polynomial.hpp"

namespace hecke {

// Reduced fraction of polynomials over F. Canonical form: denominator
// nonzero and monic, gcd(num, den) = 1, zero is 0/1. Composable, so
// RatFunc<RatFunc<Rat>> is the nested tower Q(q)(z).
template <field F>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<F>::one()) {}
    RatFunc(long n) : num_(Poly<F>::constant(int_to_f(n))), den_(Poly<F>::one()) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return constant(F::one()); }
    static RatFunc constant(const F& c) {
        RatFunc r;
        r.num_ = Poly<F>::constant(c);
        return r;
    }
    static RatFunc gen() {
        RatFunc r;
        r.num_ = Poly<F>::gen();
        return r;
    }
    static RatFunc of(Poly<F> n, Poly<F> d) {
        if (d.is_zero()) throw field_error("rational function with zero denominator");
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.reduce();
        return r;
    }
    static RatFunc of_poly(Poly<F> n) {
        RatFunc r;
        r.num_ = std::move(n);
        return r;
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // Henrici's scheme: split off g = gcd of denominators first.
        Poly<F> g = poly_gcd(a.den_, b.den_);
        RatFunc r;
        if (g.is_one()) {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            if (r.num_.is_zero()) return RatFunc();
            r.reduce();
            return r;
        }
        Poly<F> da = divexact(a.den_, g);
        Poly<F> db = divexact(b.den_, g);
        Poly<F> t = a.num_ * db + b.num_ * da;
        if (t.is_zero()) return RatFunc();
        Poly<F> h = poly_gcd(t, g);
        r.num_ = h.is_one() ? std::move(t) : divexact(t, h);
        r.den_ = da * (h.is_one() ? b.den_ : divexact(b.den_, h));
        r.make_monic();
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly<F> g1 = poly_gcd(a.num_, b.den_);
        Poly<F> g2 = poly_gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) *
                 (g2.is_one() ? b.num_ : divexact(b.num_, g2));
        r.den_ = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) *
                 (g1.is_one() ? b.den_ : divexact(b.den_, g1));
        r.make_monic();
        return r;
    }

    RatFunc inv() const {
        if (is_zero()) throw field_error("inverse of zero rational function");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.make_monic();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw field_error("division by zero rational function");
        return a * b.inv();
    }

    RatFunc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        RatFunc r = one();
        RatFunc base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Exact value at a point of F. Throws pole_error carrying the vanishing
    // order of the (already reduced) denominator at the point.
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.is_zero()) {
            int ord = 0;
            Poly<F> p = den_;
            Poly<F> lin = Poly<F>::from_coeffs({-x, F::one()});
            while (!p.is_zero() && p.eval(x).is_zero()) {
                p = divexact(p, lin);
                ++ord;
            }
            throw pole_error("pole of order " + std::to_string(ord) + " at evaluation point", ord);
        }
        return num_.eval(x) / d;
    }

    std::string str(const char* var = "q") const {
        if (is_zero()) return "0";
        std::string n = num_.str(var);
        if (den_.is_one()) return n;
        std::string d = den_.str(var);
        bool np = n.find_first_of("+- ") != std::string::npos && !(n[0] == '-' && n.find_first_of("+- ", 1) == std::string::npos);
        bool dp = d.find_first_of("+-*^ ") != std::string::npos;
        return (np ? "(" + n + ")" : n) + "/" + (dp ? "(" + d + ")" : d);
    }

private:
    static F int_to_f(long n) {
        F r = F::zero();
        F o = F::one();
        bool neg = n < 0;
        for (long i = 0; i < (neg ? -n : n); ++i) r = r + o;
        return neg ? -r : r;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
        make_monic();
    }

    void make_monic() {
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        if (!den_.leading().is_one()) {
            F l = F::one() / den_.leading();
            num_ = num_.scaled(l);
            den_ = den_.scaled(l);
        }
    }

    Poly<F> num_, den_;
};

// The working tower: Q(q) and Q(q)(z). The same template also serves as
// Q(z) when q has been specialized to a rational.
using Fq = RatFunc<Rat>;
using Fqz = RatFunc<Fq>;

// q^c as an element of Q(q), c of either sign.
inline Fq q_power(long c) { return Fq::gen().pow(c); }

// [m]_q = (1 - q^m)/(1 - q) = 1 + q + ... + q^{m-1}.
inline Fq q_int(int m) {
    std::vector<Rat> c(static_cast<size_t>(m), Rat::one());
    return Fq::of_poly(Poly<Rat>::from_coeffs(std::move(c)));
}

// [1]_q [2]_q ... [n]_q.
inline Fq q_factorial(int n) {
    Fq r = Fq::one();
    for (int m = 2; m <= n; ++m) r = r * q_int(m);
    return r;
}

// <x> = (1 - q)/(1 - x), the elementary spectral weight. The q element is
// passed in so the same code runs over Q(q), Q(q)(z) and specialized Q.
template <field F>
F bracket(const F& x, const F& q) {
    F one = F::one();
    F d = one - x;
    if (d.is_zero()) throw pole_error("bracket at x = 1 (singular pair)", 1);
    return (one - q) / d;
}

inline Fq bracket(const Fq& x) { return bracket(x, Fq::gen()); }

// Generic coefficient maps: apply a field morphism coefficientwise.
template <field F, typename Fn>
auto map_poly(const Poly<F>& p, Fn&& f) {
    using G = std::decay_t<decltype(f(std::declval<F>()))>;
    std::vector<G> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(f(c));
    return Poly<G>::from_coeffs(std::move(out));
}

template <field F, typename Fn>
auto map_ratfunc(const RatFunc<F>& r, Fn&& f) {
    auto n = map_poly(r.num(), f);
    auto d = map_poly(r.den(), f);
    using G = std::decay_t<decltype(f(std::declval<F>()))>;
    if (d.is_zero()) throw pole_error("denominator vanishes under coefficient map", 1);
    return RatFunc<G>::of(std::move(n), std::move(d));
}

// Specialize the inner variable of the tower: Q(q) -> Q at q = q0.
inline Rat specialize_q(const Fq& f, const Rat& q0) { return f.eval(q0); }

} // namespace hecke
