#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

// Arbitrary-precision rational. Canonical form is maintained by GMP:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw field_error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }

    // Accepts "p", "-p", or "p/q" with arbitrary-precision parts.
    static Rat parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw field_error("cannot parse rational '" + s + "'");
        v.canonicalize();
        return Rat(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat inv() const {
        if (is_zero()) throw field_error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw field_error("division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p" or "p/q".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace hecke
