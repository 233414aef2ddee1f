#pragma once

#include <random>

#include "hecke/ratfunc.hpp"

namespace hecke {

// Deterministic source of small rational test points.
class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    int int_in(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

    // Nonzero rational with small numerator and denominator.
    Rat rat_nonzero() {
        while (true) {
            int num = int_in(-9, 9);
            int den = int_in(1, 9);
            if (num == 0) continue;
            return Rat(num, den);
        }
    }

    // Admissible specialization of q: not 0 or a root of unity reachable at
    // rank n, i.e. q0 not in {0, 1, -1} (no other rational is a root of
    // unity, so q0^c != 1 for all 0 < |c| <= n).
    Rat q_point(int n) {
        (void)n;
        while (true) {
            Rat q0 = rat_nonzero();
            if (q0.is_one() || (-q0).is_one()) continue;
            return q0;
        }
    }

    // Rational usable as a bracket argument: not 0 or 1.
    Rat spectral_point() {
        while (true) {
            Rat x = rat_nonzero();
            if (x.is_one()) continue;
            return x;
        }
    }

    // Random rational function of small degree over Q(q).
    Fq ratfunc(int max_deg = 3) {
        auto poly = [&](bool nonzero) {
            std::vector<Rat> c(static_cast<size_t>(int_in(nonzero ? 1 : 0, max_deg + 1)));
            for (auto& x : c) x = Rat(int_in(-5, 5));
            auto p = Poly<Rat>::from_coeffs(std::move(c));
            if (nonzero && p.is_zero()) p = Poly<Rat>::one();
            return p;
        };
        return Fq::of(poly(false), poly(true));
    }

    Fq ratfunc_nonzero(int max_deg = 3) {
        while (true) {
            Fq f = ratfunc(max_deg);
            if (!f.is_zero()) return f;
        }
    }

private:
    std::mt19937 rng_;
};

} // namespace hecke
