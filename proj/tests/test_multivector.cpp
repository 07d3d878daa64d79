#include "support.hpp"

#include <limits>

using namespace cl2;
using test_support::close;
using test_support::random_box;

TEST_CASE("construction rejects non-finite coefficients") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Multivector(nan), InvalidValueError);
    CHECK_THROWS_AS(Multivector(0.0, inf, 0.0, 0.0), InvalidValueError);
    CHECK_THROWS_AS(Multivector(0.0, 0.0, -inf, 0.0), InvalidValueError);
}

TEST_CASE("negative zero is canonicalized") {
    const Multivector a{-0.0, -0.0, 0.0, -0.0};
    CHECK(!std::signbit(a.s));
    CHECK(!std::signbit(a.x1));
    CHECK(!std::signbit(a.x3));
    CHECK(a == Multivector{});
}

TEST_CASE("basis multiplication table") {
    CHECK(e1 * e1 == Multivector{1.0});
    CHECK(e2 * e2 == Multivector{1.0});
    CHECK(e3 * e3 == Multivector{-1.0});
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e1 == -e3);
    CHECK(e2 * e3 == -e1);
    CHECK(e3 * e2 == e1);
    CHECK(e3 * e1 == -e2);
    CHECK(e1 * e3 == e2);
}

TEST_CASE("product examples") {
    SplitMix64 rng{2024};
    for (int i = 0; i < 50; ++i) {
        const Multivector a = random_box(rng);
        CHECK(a * Multivector{1.0} == a);
        CHECK(Multivector{1.0} * a == a);
    }
    // zero divisor
    CHECK((1.0 + e1) * (1.0 - e1) == Multivector{});
}

TEST_CASE("conjugation") {
    CHECK(conj(Multivector{1.0}) == Multivector{1.0});
    CHECK(conj(1.0 + e1 - e2) == 1.0 - e1 + e2);

    const Multivector a = 1.0 - e3;
    CHECK(a * conj(a) == Multivector{2.0});

    SplitMix64 rng{7};
    for (int i = 0; i < 100; ++i) {
        const Multivector b = random_box(rng);
        CHECK(conj(conj(b)) == b);
    }
}

TEST_CASE("conjugation is an exact anti-automorphism") {
    SplitMix64 rng{11};
    for (int i = 0; i < 500; ++i) {
        const Multivector a = random_box(rng);
        const Multivector b = random_box(rng);
        CHECK(conj(a * b) == conj(b) * conj(a));
    }
}

TEST_CASE("parts") {
    const auto p0 = parts(Multivector{3.0});
    CHECK(p0.re == 3.0);
    CHECK(p0.im == Multivector{});

    const Multivector a{2.0, 5.0, 10.0, 11.0};
    const auto p1 = parts(a);
    CHECK(p1.re == 2.0);
    CHECK(p1.im == Multivector{0.0, 5.0, 10.0, 11.0});
    CHECK(p1.re + p1.im == a);

    const auto p2 = parts(e3);
    CHECK(p2.re == 0.0);
    CHECK(p2.im == e3);
}

TEST_CASE("quadratic invariants") {
    const Multivector a = std::sqrt(2.0) + 7.0 * e1 + 4.0 * e2 + 8.0 * e3;
    const QuadraticInvariants qa = invariants(a);
    CHECK(qa.I == Catch::Approx(1.0).margin(1e-13));
    CHECK(qa.N == Catch::Approx(1.0).margin(1e-13));
    CHECK(qa.V == 1.0);

    const QuadraticInvariants qb = invariants(1.0 - e3);
    CHECK(qb.I == 2.0);
    CHECK(qb.N == std::sqrt(2.0));
    CHECK(qb.V == -1.0);

    const QuadraticInvariants qc = invariants({2.0, 5.0, 10.0, 11.0});
    CHECK(qc.I == 0.0);
    CHECK(qc.V == 4.0);

    SplitMix64 rng{13};
    for (int i = 0; i < 200; ++i) {
        const Multivector v = random_box(rng);
        const QuadraticInvariants q = invariants(v);
        CHECK(q.N * q.N == Catch::Approx(std::abs(q.I)).margin(1e-12 * norm_sq(v)));
        CHECK(q.I == Catch::Approx(v.s * v.s - q.V).margin(1e-12 * norm_sq(v)));
    }
}

TEST_CASE("central scalar: a*conj(a) equals I exactly") {
    SplitMix64 rng{17};
    for (int i = 0; i < 500; ++i) {
        const Multivector a = random_box(rng);
        const Multivector left = a * conj(a);
        CHECK(left == conj(a) * a);
        CHECK(left == Multivector{invariants(a).I});
    }
}

TEST_CASE("pure imaginary square equals V exactly") {
    SplitMix64 rng{19};
    for (int i = 0; i < 500; ++i) {
        const Multivector u = imag(random_box(rng));
        CHECK(u * u == Multivector{invariants(u).V});
    }
}

TEST_CASE("associativity within 1e-12") {
    SplitMix64 rng{23};
    for (int i = 0; i < 500; ++i) {
        const Multivector a = random_box(rng);
        const Multivector b = random_box(rng);
        const Multivector c = random_box(rng);
        CHECK(close((a * b) * c, a * (b * c), 1e-12));
    }
}

TEST_CASE("I is multiplicative, I and V scale quadratically") {
    SplitMix64 rng{29};
    for (int i = 0; i < 500; ++i) {
        const Multivector a = random_box(rng);
        const Multivector b = random_box(rng);
        const double iab = invariants(a * b).I;
        const double ia = invariants(a).I;
        const double ib = invariants(b).I;
        CHECK(std::abs(iab - ia * ib) <=
              1e-10 * std::max({1.0, std::abs(iab), std::abs(ia * ib)}));

        const double t = rng.uniform(-5.0, 5.0);
        const QuadraticInvariants qa = invariants(a);
        const QuadraticInvariants qt = invariants(t * a);
        CHECK(std::abs(qt.I - t * t * qa.I) <= 1e-12 * std::max(1.0, std::abs(t * t * qa.I)));
        CHECK(std::abs(qt.V - t * t * qa.V) <= 1e-12 * std::max(1.0, std::abs(t * t * qa.V)));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Multivector{2.0}) == Multivector{0.5});
    CHECK(inverse(1.0 - e3) == (1.0 + e3) / 2.0);
    CHECK((1.0 - e3) * inverse(1.0 - e3) == Multivector{1.0});
    CHECK_THROWS_AS(inverse(1.0 + e1), NonInvertibleError);
    CHECK_THROWS_AS(inverse(Multivector{}), NonInvertibleError);

    SplitMix64 rng{31};
    int checked = 0;
    while (checked < 200) {
        const Multivector a = random_box(rng);
        if (std::abs(invariants(a).I) <= 1e-6 * norm_sq(a)) continue;
        CHECK(close(a * inverse(a), Multivector{1.0}, 0.0, 1e-9));
        ++checked;
    }
}

TEST_CASE("lorentz inner product") {
    CHECK(lorentz_inner(e1, e1) == 1.0);
    CHECK(lorentz_inner(e3, e3) == -1.0);
    CHECK(lorentz_inner(e1, e2) == 0.0);

    // scalar parts are ignored
    CHECK(lorentz_inner(5.0 + e1, -3.0 + e1) == 1.0);

    SplitMix64 rng{37};
    for (int i = 0; i < 200; ++i) {
        const Multivector u = imag(random_box(rng));
        const Multivector v = imag(random_box(rng));
        CHECK(lorentz_inner(u, v) ==
              Catch::Approx(real(u * v)).margin(1e-12 * (1.0 + norm(u) * norm(v))));
    }
}
