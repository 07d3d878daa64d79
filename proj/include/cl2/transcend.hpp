#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cl2/classify.hpp"
#include "cl2/multivector.hpp"

namespace cl2 {

/// Which roots nth_roots reports.
///
/// PaperFaithful keeps exactly the roots produced by the classical
/// closed-form statements: one cosh-type root (plus one sinh-type root for
/// even degree) in S1, the n-member circular orbit in S2, and so on.
/// Complete extends each case with the remaining solutions of w^n = a that
/// the closed forms omit: negation partners for even degree, roots of
/// elements with negative scalar part in S1, and the spacelike unit family
/// for even roots of positive reals.  Every extra member is validated by
/// the re-multiplication oracle in the test suite.
enum class RootMode { PaperFaithful, Complete };

struct FiniteRoots {
    std::vector<Multivector> roots;
};

/// { scale * (cos(phi) + eps * sin(phi)) : phi in angles, eps in EMinus1 }.
/// One uncountable orbit per angle; angles with sin(phi) = 0 collapse to
/// the single real value scale * cos(phi).
struct CircularFamily {
    double scale;
    std::vector<double> angles;
};

/// { scale * eps : eps in E1 }.  Members are even roots of the positive
/// real scale^n, since (scale * eps)^2 = scale^2.
struct HyperbolicUnitFamily {
    double scale;
};

/// Every null imaginary vector (V = 0, zero scalar part), zero included;
/// these are exactly the nth roots of 0 for n >= 2.
struct NullCone {};

using RootPart = std::variant<FiniteRoots, CircularFamily, HyperbolicUnitFamily, NullCone>;

/// Solution set of w^n = a.  Usually a single part; the empty set has no
/// parts.  Complete-mode even roots of a positive real carry two parts
/// (the circular orbit and the spacelike unit family).  `note` explains
/// empty or unusual results.
struct RootSet {
    std::vector<RootPart> parts;
    std::string note;

    bool empty() const { return parts.empty(); }
};

/// Signed real nth root; x < 0 requires odd n.  sqrt/cbrt plus one Newton
/// step for higher degrees keeps perfect powers exact.
inline double nth_root_real(double x, int n) {
    if (x == 0.0) return 0.0;
    if (x < 0.0) return -nth_root_real(-x, n);
    if (n == 1) return x;
    if (n == 2) return std::sqrt(x);
    if (n == 3) return std::cbrt(x);
    double r = std::pow(x, 1.0 / static_cast<double>(n));
    const double rp = std::pow(r, static_cast<double>(n - 1));
    if (rp > 0.0 && std::isfinite(rp)) r -= (r - x / rp) / static_cast<double>(n);
    return r;
}

/// Closed-form exponential.  Splits a = s + im and applies the one-variable
/// Euler formula matching the sign of V(im): cosh/sinh for spacelike,
/// cos/sin for timelike, 1 + im on the null cone.  Coefficients that leave
/// the double range raise OverflowError instead of propagating infinities.
inline Multivector exp(const Multivector& a, const Tolerances& tol = {}) {
    const Multivector im = imag(a);
    const double v = lorentz_inner(im, im);
    const double scale = tol.tau_class * norm_sq(im);
    const double grow = std::exp(a.s);
    double c = 1.0, k = 1.0;
    if (v > scale) {
        const double r = std::sqrt(v);
        c = std::cosh(r);
        k = std::sinh(r) / r;
    } else if (v < -scale) {
        const double r = std::sqrt(-v);
        c = std::cos(r);
        k = std::sin(r) / r;
    }
    const double rs = grow * c;
    const double r1 = grow * k * im.x1;
    const double r2 = grow * k * im.x2;
    const double r3 = grow * k * im.x3;
    if (!(std::isfinite(rs) && std::isfinite(r1) && std::isfinite(r2) && std::isfinite(r3))) {
        throw OverflowError("exp left the range of double");
    }
    return {rs, r1, r2, r3};
}

/// Integer power through the sector's closed form:
///   S1: sign^n N^n (cosh n*theta + eps sinh n*theta)
///   S2: N^n (cos n*theta + eps sin n*theta)
///   S3: N^n (sinh + eps cosh) for odd n, (cosh + eps sinh) for even n
///   S4: (2 s)^(n-1) a                      (n >= 0 only)
///   S5: s^n + n s^(n-1) im                 (any n)
/// n = 0 gives 1 for every element (empty product), n = 1 gives a.
/// Negative n on a non-invertible element raises NonInvertibleError.
inline Multivector pow_int(const Multivector& a, long long n, const Tolerances& tol = {}) {
    if (n == 0) return 1.0;
    if (n == 1) return a;
    const SectorLabel sector = classify(a, tol);
    const double nd = static_cast<double>(n);
    switch (sector) {
        case SectorLabel::Zero:
        case SectorLabel::NullImaginary:
            if (n < 0) throw NonInvertibleError("negative power of an element with I ~ 0");
            return 0.0;  // im^2 = V = 0, so every power beyond the first dies
        case SectorLabel::S4Only:
            if (n < 0) throw NonInvertibleError("negative power of an element with I ~ 0");
            return std::pow(2.0 * a.s, nd - 1.0) * a;
        case SectorLabel::S5Only:
            return std::pow(a.s, nd) + (nd * std::pow(a.s, nd - 1.0)) * imag(a);
        case SectorLabel::S1: {
            const auto f = std::get<HyperbolicCosh>(polar(a, tol));
            const double m = (f.sign < 0.0 && (n % 2 != 0) ? -1.0 : 1.0) * std::pow(f.modulus, nd);
            return m * std::cosh(nd * f.theta) + (m * std::sinh(nd * f.theta)) * f.eps;
        }
        case SectorLabel::S2: {
            const auto f = std::get<Circular>(polar(a, tol));
            const double m = std::pow(f.modulus, nd);
            return m * std::cos(nd * f.theta) + (m * std::sin(nd * f.theta)) * f.eps;
        }
        case SectorLabel::S3: {
            const auto f = std::get<HyperbolicSinh>(polar(a, tol));
            const double m = std::pow(f.modulus, nd);
            if (n % 2 != 0) return m * std::sinh(nd * f.theta) + (m * std::cosh(nd * f.theta)) * f.eps;
            return m * std::cosh(nd * f.theta) + (m * std::sinh(nd * f.theta)) * f.eps;
        }
    }
    throw Error("unreachable sector in pow_int");
}

namespace detail {

constexpr double pi = 3.141592653589793238462643383279502884;

inline RootSet finite(std::vector<Multivector> roots, std::string note = {}) {
    RootSet out;
    out.parts.emplace_back(FiniteRoots{std::move(roots)});
    out.note = std::move(note);
    return out;
}

inline RootSet empty(std::string note) {
    RootSet out;
    out.note = std::move(note);
    return out;
}

}  // namespace detail

/// All solutions of w^n = a for n >= 2 (BadExponentError otherwise),
/// dispatching on the sector of a:
///
///   S1, s > 0:  cosh-type root; even n adds the sinh-type root, and
///               Complete mode the two negations.
///   S1, s < 0:  outside the classical statements.  PaperFaithful reports
///               empty; Complete negates the odd root of -a (even degrees
///               genuinely have no solution).
///   S2:         the n-member circular orbit.
///   S3:         one sinh-type root for odd n; none for even n (no element
///               of the algebra has I < 0 after squaring).
///   S4, s != 0: w0 = (s / 2^(n-1))^(1/n), im(w) = im(a) / (2 w0)^(n-1);
///               even n requires s > 0 and Complete adds -w.
///   S5, im != 0, s != 0:
///               w0 = s^(1/n), im(w) = im(a) / (n w0^(n-1)); even n
///               requires s > 0 and Complete adds -w.
///   real s > 0: circular family at angles 2 pi m / n; Complete mode adds
///               the spacelike unit family for even n.
///   real s < 0: circular family at angles (pi + 2 pi m) / n.
///   zero:       the null cone.
///   nonzero null imaginary: no roots exist.
inline RootSet nth_roots(const Multivector& a, int n, RootMode mode = RootMode::Complete,
                         const Tolerances& tol = {}) {
    if (n < 2) throw BadExponentError("nth_roots requires n >= 2");
    const bool even = n % 2 == 0;
    const double nd = static_cast<double>(n);
    switch (classify(a, tol)) {
        case SectorLabel::Zero: {
            RootSet out;
            out.parts.emplace_back(NullCone{});
            return out;
        }
        case SectorLabel::NullImaginary:
            return detail::empty("a nonzero null imaginary element has no nth roots");
        case SectorLabel::S4Only: {
            if (even && a.s < 0.0)
                return detail::empty("I = 0 with negative scalar part has no even-degree roots");
            const double w0 = nth_root_real(a.s / std::exp2(nd - 1.0), n);
            const Multivector w =
                w0 + imag(a) / (std::exp2(nd - 1.0) * std::pow(w0, nd - 1.0));
            if (even && mode == RootMode::Complete) return detail::finite({w, -w});
            return detail::finite({w});
        }
        case SectorLabel::S5Only: {
            if (norm_sq(imag(a)) <= tol.tau_class * norm_sq(a)) {
                // real scalar: roots form eps-parameterized families
                RootSet out;
                CircularFamily fam;
                fam.scale = nth_root_real(std::abs(a.s), n);
                const double offset = a.s > 0.0 ? 0.0 : detail::pi;
                for (int m = 0; m < n; ++m)
                    fam.angles.push_back((offset + 2.0 * detail::pi * m) / nd);
                out.parts.emplace_back(std::move(fam));
                if (a.s > 0.0 && even && mode == RootMode::Complete)
                    out.parts.emplace_back(HyperbolicUnitFamily{nth_root_real(a.s, n)});
                return out;
            }
            if (even && a.s < 0.0)
                return detail::empty("V = 0 with negative scalar part has no even-degree roots");
            const double w0 = nth_root_real(a.s, n);
            const Multivector w = w0 + imag(a) / (nd * std::pow(w0, nd - 1.0));
            if (even && mode == RootMode::Complete) return detail::finite({w, -w});
            return detail::finite({w});
        }
        case SectorLabel::S1: {
            const auto f = std::get<HyperbolicCosh>(polar(a, tol));
            const double m = nth_root_real(f.modulus, n);
            const double t = f.theta / nd;
            const Multivector w_cosh = m * std::cosh(t) + (m * std::sinh(t)) * f.eps;
            if (f.sign < 0.0) {
                // w_cosh is the unique root of -a; its negation solves odd
                // degrees, and even degrees have no solution at all.
                if (mode == RootMode::PaperFaithful)
                    return detail::empty(
                        "negative scalar part in S1 is outside the classical root formulas "
                        "(use complete mode)");
                if (even)
                    return detail::empty(
                        "S1 with negative scalar part has no even-degree roots");
                return detail::finite({-w_cosh});
            }
            const Multivector w_sinh = m * std::sinh(t) + (m * std::cosh(t)) * f.eps;
            std::vector<Multivector> roots{w_cosh};
            if (even) {
                roots.push_back(w_sinh);
                if (mode == RootMode::Complete) {
                    roots.push_back(-w_cosh);
                    roots.push_back(-w_sinh);
                }
            }
            return detail::finite(std::move(roots));
        }
        case SectorLabel::S2: {
            const auto f = std::get<Circular>(polar(a, tol));
            const double m = nth_root_real(f.modulus, n);
            std::vector<Multivector> roots;
            roots.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double phi = (f.theta + 2.0 * detail::pi * i) / nd;
                roots.push_back(m * std::cos(phi) + (m * std::sin(phi)) * f.eps);
            }
            return detail::finite(std::move(roots));
        }
        case SectorLabel::S3: {
            if (even) return detail::empty("S3 elements have no even-degree roots");
            const auto f = std::get<HyperbolicSinh>(polar(a, tol));
            const double m = nth_root_real(f.modulus, n);
            const double t = f.theta / nd;
            return detail::finite({m * std::sinh(t) + (m * std::cosh(t)) * f.eps});
        }
    }
    throw Error("unreachable sector in nth_roots");
}

/// Concrete member of a circular family at the given angle index for a
/// caller-supplied timelike eps, which is normalized to a unit before use.
inline Multivector family_member(const CircularFamily& fam, std::size_t angle_index,
                                 const Multivector& eps, const Tolerances& tol = {}) {
    if (angle_index >= fam.angles.size()) throw std::out_of_range("angle index out of range");
    if (epsilon_class(eps, tol) != EpsilonClass::EMinus1)
        throw InvalidValueError("circular family members require a timelike (E-1) eps");
    const Multivector unit = imag(eps) / std::sqrt(-lorentz_inner(eps, eps));
    const double phi = fam.angles[angle_index];
    return fam.scale * std::cos(phi) + (fam.scale * std::sin(phi)) * unit;
}

/// Concrete member scale * eps of a spacelike unit family; eps is
/// normalized to a unit before use.
inline Multivector family_member(const HyperbolicUnitFamily& fam, const Multivector& eps,
                                 const Tolerances& tol = {}) {
    if (epsilon_class(eps, tol) != EpsilonClass::E1)
        throw InvalidValueError("hyperbolic unit family members require a spacelike (E1) eps");
    return fam.scale * (imag(eps) / std::sqrt(lorentz_inner(eps, eps)));
}

/// Flattens the finite parts of a root set (family parts contribute
/// nothing; use family_member to instantiate those).
inline std::vector<Multivector> finite_roots(const RootSet& set) {
    std::vector<Multivector> out;
    for (const RootPart& part : set.parts) {
        if (const auto* f = std::get_if<FiniteRoots>(&part)) {
            out.insert(out.end(), f->roots.begin(), f->roots.end());
        }
    }
    return out;
}

}  // namespace cl2
