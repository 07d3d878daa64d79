#pragma once

#include <cstdint>
#include <stdexcept>

#include "cl2/classify.hpp"
#include "cl2/multivector.hpp"

namespace cl2 {

/// SplitMix64.  Fully pinned by its three constants so that seeded samples
/// reproduce bit-for-bit on every platform:
///   state += 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform in {0, ..., n-1}.  Modulo bias is irrelevant at the tiny
    /// ranges used here and keeps the generator exactly specified.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    double sign() { return (next() & 1u) ? 1.0 : -1.0; }
};

/// n-fold product by binary exponentiation over the raw product formula.
/// This is the reference path the closed forms are checked against, so it
/// touches nothing beyond operator*.
inline Multivector pow_naive(const Multivector& a, long long n) {
    if (n < 0) throw std::invalid_argument("pow_naive requires n >= 0");
    Multivector acc{1.0};
    Multivector base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return acc;
}

/// Partial sum of the defining series sum a^k / k!.  Forty terms pin the
/// value to ~1e-12 absolute for |a| <= 3.
inline Multivector exp_series(const Multivector& a, int terms = 40) {
    if (terms < 1) throw std::invalid_argument("exp_series requires terms >= 1");
    Multivector sum{1.0};
    Multivector term{1.0};
    for (int k = 1; k < terms; ++k) {
        term = term * a / static_cast<double>(k);
        sum = sum + term;
    }
    return sum;
}

/// Re-multiplies w and accepts when |w^n - a| <= tau_verify * max(1, |a|).
inline bool verify_root(const Multivector& a, int n, const Multivector& w,
                        const Tolerances& tol = {}) {
    const double deviation = norm(pow_naive(w, n) - a);
    return deviation <= tol.tau_verify * std::max(1.0, norm(a));
}

namespace detail {

// x1^2 + x2^2 == s^2 + x3^2 exactly, via the two Brahmagupta-Fibonacci
// factorizations of (p^2+q^2)(r^2+t^2).  Small integers scaled by powers
// of two keep every square and sum exact in double, so I comes out as a
// true 0.0 rather than a rounded one.
inline Multivector sample_s4(SplitMix64& rng) {
    const double p = 1.0 + static_cast<double>(rng.below(5));
    const double q = 1.0 + static_cast<double>(rng.below(5));
    const double r = 1.0 + static_cast<double>(rng.below(5));
    const double t = 1.0 + static_cast<double>(rng.below(5));
    const double scale = std::exp2(static_cast<double>(rng.below(5)) - 2.0);
    const double s = (p * r + q * t) * rng.sign() * scale;
    const double x1 = (p * r - q * t) * rng.sign() * scale;
    const double x2 = (p * t + q * r) * rng.sign() * scale;
    const double x3 = (p * t - q * r) * rng.sign() * scale;
    return {s, x1, x2, x3};
}

// Pythagorean legs/hypotenuse give an exactly null imaginary part.
inline Multivector sample_null_imag(SplitMix64& rng) {
    const double m = 2.0 + static_cast<double>(rng.below(3));
    const double k = 1.0 + static_cast<double>(rng.below(static_cast<std::uint64_t>(m) - 1));
    const double scale = std::exp2(static_cast<double>(rng.below(5)) - 2.0);
    double legs[2] = {(m * m - k * k) * scale, 2.0 * m * k * scale};
    const bool swap = rng.below(2) != 0;
    return {0.0, legs[swap ? 1 : 0] * rng.sign(), legs[swap ? 0 : 1] * rng.sign(),
            (m * m + k * k) * scale * rng.sign()};
}

}  // namespace detail

/// Deterministic sector-targeted sampling; identical seeds give identical
/// values everywhere.  The strict sectors are drawn by rejection from the
/// box [-10, 10]^4 with a classification margin of at least 100*tau_class.
/// The degenerate sectors are built from integer identities so that the
/// vanishing form is exactly zero.
inline Multivector sample_in_sector(SectorLabel label, std::uint64_t seed) {
    SplitMix64 rng{seed};
    const Tolerances tol;
    const double margin = 100.0 * tol.tau_class;
    switch (label) {
        case SectorLabel::Zero:
            throw std::invalid_argument("cannot sample the zero sector");
        case SectorLabel::NullImaginary:
            return detail::sample_null_imag(rng);
        case SectorLabel::S4Only:
            return detail::sample_s4(rng);
        case SectorLabel::S5Only: {
            Multivector v = detail::sample_null_imag(rng);
            const double s =
                (1.0 + static_cast<double>(rng.below(9))) * rng.sign() * std::abs(v.x3);
            return {s, v.x1, v.x2, v.x3};
        }
        default:
            break;
    }
    for (;;) {
        const Multivector a{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0),
                            rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const QuadraticInvariants q = invariants(a);
        const double scale = margin * norm_sq(a);
        const bool ok = (label == SectorLabel::S1 && q.I > scale && q.V > scale) ||
                        (label == SectorLabel::S2 && q.I > scale && q.V < -scale) ||
                        (label == SectorLabel::S3 && q.I < -scale && q.V > scale);
        if (ok) return a;
    }
}

}  // namespace cl2
