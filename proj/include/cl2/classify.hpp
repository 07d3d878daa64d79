#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "cl2/multivector.hpp"

namespace cl2 {

/// The five sectors of the algebra, cut by the signs of I and V.
///
///   S1: I > 0 and V > 0       (hyperbolic, cosh-type polar form)
///   S2: I > 0 and V < 0       (circular polar form)
///   S3: I < 0 (forces V > 0)  (hyperbolic, sinh-type polar form)
///   S4: I = 0                 (zero divisors; labeled S4Only when V != 0)
///   S5: V = 0                 (nilpotent imaginary part; S5Only when I != 0)
///
/// S4 and S5 overlap exactly in the null imaginary vectors (I = V = 0,
/// hence zero scalar part); nonzero such elements get NullImaginary, and
/// the zero element gets its own label.  All "= 0" tests are relative:
/// |I| <= tau_class * |a|^2.
enum class SectorLabel { Zero, NullImaginary, S4Only, S5Only, S1, S2, S3 };

/// Classes of imaginary vectors by the sign of their Lorentzian square:
/// E1 spacelike (normalizable to eps^2 = +1), EMinus1 timelike
/// (eps^2 = -1), E0 null (eps^2 = 0).  None: not pure imaginary.
enum class EpsilonClass { E1, E0, EMinus1, None };

inline SectorLabel classify(const Multivector& a, const Tolerances& tol = {}) {
    if (a == Multivector{}) return SectorLabel::Zero;
    const QuadraticInvariants q = invariants(a);
    const double scale = tol.tau_class * norm_sq(a);
    const bool null_i = std::abs(q.I) <= scale;
    const bool null_v = std::abs(q.V) <= scale;
    if (null_i && null_v) return SectorLabel::NullImaginary;
    if (null_i) return SectorLabel::S4Only;
    if (null_v) return SectorLabel::S5Only;
    if (q.I > 0.0) return q.V > 0.0 ? SectorLabel::S1 : SectorLabel::S2;
    return SectorLabel::S3;
}

/// Classifies the ray through v: the label describes v after scaling to a
/// unit, so any spacelike vector reports E1, not only those with V = 1.
/// The zero vector is null (it belongs to E0 as a set, though it cannot be
/// normalized).
inline EpsilonClass epsilon_class(const Multivector& v, const Tolerances& tol = {}) {
    const double scale = tol.tau_class * norm_sq(v);
    if (v.s * v.s > scale) return EpsilonClass::None;
    const double lorentz = lorentz_inner(v, v);
    if (lorentz > scale) return EpsilonClass::E1;
    if (lorentz < -scale) return EpsilonClass::EMinus1;
    return EpsilonClass::E0;
}

/// a = sign * N * (cosh(theta) + eps * sinh(theta)),  eps in E1, theta > 0.
/// Sector S1.  The sign factor extends the representation to negative
/// scalar parts, which the bare cosh form cannot reach.
struct HyperbolicCosh {
    double sign;  ///< +1 or -1
    double modulus;
    double theta;
    Multivector eps;
};

/// a = N * (cos(theta) + eps * sin(theta)),  eps in EMinus1, theta in (0, pi).
/// Sector S2.
struct Circular {
    double modulus;
    double theta;
    Multivector eps;
};

/// a = N * (sinh(theta) + eps * cosh(theta)),  eps in E1, theta any sign.
/// Sector S3.
struct HyperbolicSinh {
    double modulus;
    double theta;
    Multivector eps;
};

/// Degenerate sectors have no trigonometric factorization; the element is
/// just scalar + imaginary with I ~ 0 (S4), V ~ 0 (S5), or both.
struct Parabolic {
    double scalar;
    Multivector im;
    SectorLabel sector;  ///< S4Only, S5Only, or NullImaginary
};

using PolarForm = std::variant<HyperbolicCosh, Circular, HyperbolicSinh, Parabolic>;

/// Factored representation per sector.  Throws ZeroElementError on the
/// zero element, which has no polar form of any kind.
///
/// The angle is computed through asinh (S1, S3) or atan2 (S2); both are
/// stable near theta = 0 and carry their own sign, unlike acosh/acos.
inline PolarForm polar(const Multivector& a, const Tolerances& tol = {}) {
    const SectorLabel sector = classify(a, tol);
    const QuadraticInvariants q = invariants(a);
    switch (sector) {
        case SectorLabel::Zero:
            throw ZeroElementError("the zero element has no polar form");
        case SectorLabel::S1: {
            const double sign = a.s < 0.0 ? -1.0 : 1.0;
            const double root_v = std::sqrt(q.V);
            return HyperbolicCosh{sign, q.N, std::asinh(root_v / q.N), imag(a) / (sign * root_v)};
        }
        case SectorLabel::S2: {
            const double root_mv = std::sqrt(-q.V);
            return Circular{q.N, std::atan2(root_mv, a.s), imag(a) / root_mv};
        }
        case SectorLabel::S3: {
            return HyperbolicSinh{q.N, std::asinh(a.s / q.N), imag(a) / std::sqrt(q.V)};
        }
        default:
            return Parabolic{a.s, imag(a), sector};
    }
}

/// Evaluates the defining expression of the variant.  Inverse of polar()
/// up to roundoff.
inline Multivector reconstruct(const PolarForm& p) {
    struct Eval {
        Multivector operator()(const HyperbolicCosh& f) const {
            const double m = f.sign * f.modulus;
            return m * std::cosh(f.theta) + (m * std::sinh(f.theta)) * f.eps;
        }
        Multivector operator()(const Circular& f) const {
            return f.modulus * std::cos(f.theta) + (f.modulus * std::sin(f.theta)) * f.eps;
        }
        Multivector operator()(const HyperbolicSinh& f) const {
            return f.modulus * std::sinh(f.theta) + (f.modulus * std::cosh(f.theta)) * f.eps;
        }
        Multivector operator()(const Parabolic& f) const { return f.scalar + f.im; }
    };
    return std::visit(Eval{}, p);
}

inline std::string to_string(SectorLabel label) {
    switch (label) {
        case SectorLabel::Zero: return "zero";
        case SectorLabel::NullImaginary: return "E0";
        case SectorLabel::S4Only: return "S4";
        case SectorLabel::S5Only: return "S5";
        case SectorLabel::S1: return "S1";
        case SectorLabel::S2: return "S2";
        case SectorLabel::S3: return "S3";
    }
    return "?";
}

inline std::string to_string(EpsilonClass c) {
    switch (c) {
        case EpsilonClass::E1: return "E1";
        case EpsilonClass::E0: return "E0";
        case EpsilonClass::EMinus1: return "E-1";
        case EpsilonClass::None: return "none";
    }
    return "?";
}

}  // namespace cl2
