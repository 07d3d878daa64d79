#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "cl2/cl2.hpp"

namespace test_support {

using cl2::Multivector;

/// |a - b| <= max(abs_floor, rel * max(|a|, |b|)) on the Euclidean norm of
/// the coefficient quadruple.
inline bool close(const Multivector& a, const Multivector& b, double rel,
                  double abs_floor = 0.0) {
    const double dev = cl2::norm(a - b);
    return dev <= std::max(abs_floor, rel * std::max(cl2::norm(a), cl2::norm(b)));
}

/// Per-coefficient check against an expected value: |got - want| bounded by
/// tol * max(1, |want|).
inline bool coeff_close(const Multivector& got, const Multivector& want, double tol) {
    const double g[4] = {got.s, got.x1, got.x2, got.x3};
    const double w[4] = {want.s, want.x1, want.x2, want.x3};
    for (int i = 0; i < 4; ++i) {
        if (std::abs(g[i] - w[i]) > tol * std::max(1.0, std::abs(w[i]))) return false;
    }
    return true;
}

inline Multivector random_box(cl2::SplitMix64& rng, double half_width = 10.0) {
    return {rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width),
            rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width)};
}

/// Random unit imaginary vector of the requested class (E1 spacelike or
/// EMinus1 timelike), by rejection plus normalization.
inline Multivector random_unit_imaginary(cl2::EpsilonClass cls, cl2::SplitMix64& rng) {
    for (;;) {
        const Multivector v{0.0, rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                            rng.uniform(-3.0, 3.0)};
        const double lorentz = cl2::lorentz_inner(v, v);
        if (cls == cl2::EpsilonClass::E1 && lorentz > 1e-3) return v / std::sqrt(lorentz);
        if (cls == cl2::EpsilonClass::EMinus1 && lorentz < -1e-3) return v / std::sqrt(-lorentz);
    }
}

}  // namespace test_support

namespace Catch {
template <>
struct StringMaker<cl2::Multivector> {
    static std::string convert(const cl2::Multivector& a) {
        return cl2::format_mv(a, cl2::Style::Machine);
    }
};
}  // namespace Catch
