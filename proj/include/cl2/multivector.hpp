#pragma once

#include <cmath>

#include "cl2/errors.hpp"
#include "cl2/tolerances.hpp"

namespace cl2 {

/// An element of the real Clifford algebra generated by two anticommuting
/// units e1, e2 with e1^2 = e2^2 = +1.  The four coordinates are taken
/// against the basis {1, e1, e2, e3 = e1*e2}; e3 squares to -1.
///
/// Values are plain immutable quadruples of finite doubles.  NaN and
/// infinity are rejected at construction (InvalidValueError), and negative
/// zeros are canonicalized to +0.0 so that equal values are bitwise equal.
struct Multivector {
    double s = 0.0;   ///< coefficient of 1
    double x1 = 0.0;  ///< coefficient of e1
    double x2 = 0.0;  ///< coefficient of e2
    double x3 = 0.0;  ///< coefficient of e3 = e1*e2

    Multivector() = default;

    Multivector(double scalar) : Multivector(scalar, 0.0, 0.0, 0.0) {}

    Multivector(double s_, double x1_, double x2_, double x3_)
        : s(s_ + 0.0), x1(x1_ + 0.0), x2(x2_ + 0.0), x3(x3_ + 0.0) {
        if (!(std::isfinite(s) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3))) {
            throw InvalidValueError("multivector coefficients must be finite");
        }
    }

    bool operator==(const Multivector&) const = default;
};

inline const Multivector e1{0.0, 1.0, 0.0, 0.0};
inline const Multivector e2{0.0, 0.0, 1.0, 0.0};
inline const Multivector e3{0.0, 0.0, 0.0, 1.0};

/// The quadratic data attached to an element: I = conj(a)*a (indefinite
/// norm form), N = sqrt(|I|), and V = the Lorentzian square of the
/// imaginary part.  Always I = s^2 - V.
struct QuadraticInvariants {
    double I;
    double N;
    double V;
};

inline Multivector operator+(const Multivector& a, const Multivector& b) {
    return {a.s + b.s, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

inline Multivector operator-(const Multivector& a, const Multivector& b) {
    return {a.s - b.s, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

inline Multivector operator-(const Multivector& a) {
    return {-a.s, -a.x1, -a.x2, -a.x3};
}

/// Full algebra product.  The sign pattern follows from e1e2 = e3, the
/// anticommutation of e1, e2, and e3^2 = -1.  Each imaginary component is
/// grouped as (symmetric pair) + (antisymmetric pair); with that grouping
/// conj(a*b) == conj(b)*conj(a) and a*conj(a) == conj(a)*a hold exactly in
/// floating point, not merely up to roundoff.
inline Multivector operator*(const Multivector& a, const Multivector& b) {
    return {a.s * b.s + a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3,
            (a.s * b.x1 + a.x1 * b.s) + (a.x3 * b.x2 - a.x2 * b.x3),
            (a.s * b.x2 + a.x2 * b.s) + (a.x1 * b.x3 - a.x3 * b.x1),
            (a.s * b.x3 + a.x3 * b.s) + (a.x1 * b.x2 - a.x2 * b.x1)};
}

inline Multivector operator*(const Multivector& a, double t) {
    return {a.s * t, a.x1 * t, a.x2 * t, a.x3 * t};
}

inline Multivector operator*(double t, const Multivector& a) { return a * t; }

inline Multivector operator/(const Multivector& a, double t) {
    return {a.s / t, a.x1 / t, a.x2 / t, a.x3 / t};
}

/// Conjugation: negates the imaginary part.  An anti-automorphism,
/// conj(ab) = conj(b) conj(a).
inline Multivector conj(const Multivector& a) { return {a.s, -a.x1, -a.x2, -a.x3}; }

inline double real(const Multivector& a) { return a.s; }

inline Multivector imag(const Multivector& a) { return {0.0, a.x1, a.x2, a.x3}; }

/// Scalar/imaginary decomposition; re + im reconstructs the argument exactly.
struct Parts {
    double re;
    Multivector im;
};

inline Parts parts(const Multivector& a) { return {a.s, imag(a)}; }

/// Euclidean norm of the coefficient quadruple (used for relative
/// tolerance scaling; unrelated to the algebra's indefinite form).
inline double norm_sq(const Multivector& a) {
    return a.s * a.s + a.x1 * a.x1 + a.x2 * a.x2 + a.x3 * a.x3;
}

inline double norm(const Multivector& a) { return std::sqrt(norm_sq(a)); }

inline QuadraticInvariants invariants(const Multivector& a) {
    const double i = a.s * a.s - a.x1 * a.x1 - a.x2 * a.x2 + a.x3 * a.x3;
    const double v = a.x1 * a.x1 + a.x2 * a.x2 - a.x3 * a.x3;
    return {i, std::sqrt(std::abs(i)), v};
}

/// Minkowski R^{2,1} inner product of the imaginary parts, signature (+,+,-).
/// Scalar parts are ignored; for pure imaginary u, v this equals real(u*v).
inline double lorentz_inner(const Multivector& u, const Multivector& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3;
}

/// Inverse conj(a)/I.  Elements with I ~ 0 (relative to |a|^2) are the
/// algebra's zero divisors and have none.
inline Multivector inverse(const Multivector& a, const Tolerances& tol = {}) {
    const double i = invariants(a).I;
    if (std::abs(i) <= tol.tau_class * norm_sq(a)) {
        throw NonInvertibleError("element with I ~ 0 has no inverse");
    }
    return conj(a) / i;
}

}  // namespace cl2
