#include "support.hpp"

using namespace cl2;
using test_support::close;
using test_support::random_box;

namespace {

const Multivector a_s1 = std::sqrt(2.0) + 7.0 * e1 + 4.0 * e2 + 8.0 * e3;
const Multivector a_s2 = 1.0 - e3;
const Multivector a_s3 = 1.0 + e1 - e2;
const Multivector a_s4{2.0, 5.0, 10.0, 11.0};
const Multivector a_s5{8.0, 3.0, -4.0, 5.0};

}  // namespace

TEST_CASE("sector classification of the worked values") {
    CHECK(classify(a_s1) == SectorLabel::S1);
    CHECK(classify(a_s2) == SectorLabel::S2);
    CHECK(classify(a_s3) == SectorLabel::S3);
    CHECK(classify(a_s4) == SectorLabel::S4Only);
    CHECK(classify(a_s5) == SectorLabel::S5Only);
    CHECK(classify(e1 + e3) == SectorLabel::NullImaginary);
    CHECK(classify(Multivector{}) == SectorLabel::Zero);
}

TEST_CASE("classification is stable under scaling") {
    SplitMix64 rng{41};
    const double scales[] = {1e-6, 0.5, 3.0, 1e6, -2.0, -1e-6};
    const SectorLabel labels[] = {SectorLabel::S1,     SectorLabel::S2,
                                  SectorLabel::S3,     SectorLabel::S4Only,
                                  SectorLabel::S5Only, SectorLabel::NullImaginary};
    for (const SectorLabel label : labels) {
        for (int i = 0; i < 50; ++i) {
            const Multivector a = sample_in_sector(label, rng.next());
            for (const double t : scales) {
                CHECK(classify(t * a) == label);
            }
        }
    }
}

TEST_CASE("every nonzero element gets exactly one consistent label") {
    SplitMix64 rng{43};
    const Tolerances tol;
    for (int i = 0; i < 1000; ++i) {
        const Multivector a = random_box(rng);
        if (a == Multivector{}) continue;
        const SectorLabel label = classify(a);
        const QuadraticInvariants q = invariants(a);
        const double scale = tol.tau_class * norm_sq(a);
        switch (label) {
            case SectorLabel::S1:
                CHECK(q.I > scale);
                CHECK(q.V > scale);
                break;
            case SectorLabel::S2:
                CHECK(q.I > scale);
                CHECK(q.V < -scale);
                break;
            case SectorLabel::S3:
                CHECK(q.I < -scale);
                CHECK(q.V > scale);
                break;
            case SectorLabel::S4Only:
                CHECK(std::abs(q.I) <= scale);
                CHECK(std::abs(q.V) > scale);
                break;
            case SectorLabel::S5Only:
                CHECK(std::abs(q.V) <= scale);
                CHECK(std::abs(q.I) > scale);
                break;
            case SectorLabel::NullImaginary:
                CHECK(std::abs(q.I) <= scale);
                CHECK(std::abs(q.V) <= scale);
                break;
            case SectorLabel::Zero:
                FAIL("nonzero element classified as zero");
        }
    }
}

TEST_CASE("epsilon classes") {
    CHECK(epsilon_class(e1) == EpsilonClass::E1);
    CHECK(epsilon_class(e3) == EpsilonClass::EMinus1);
    CHECK(epsilon_class(e2 + e3) == EpsilonClass::E0);
    CHECK(epsilon_class(1.0 + e1) == EpsilonClass::None);
    // ray semantics: any spacelike/timelike vector classifies, not only units
    CHECK(epsilon_class(5.0 * e3) == EpsilonClass::EMinus1);
    CHECK(epsilon_class(0.3 * e1 + 0.1 * e2) == EpsilonClass::E1);
    CHECK(epsilon_class(Multivector{}) == EpsilonClass::E0);
}

TEST_CASE("polar form of the S1 worked value") {
    const auto f = std::get<HyperbolicCosh>(polar(a_s1));
    CHECK(f.sign == 1.0);
    CHECK(f.modulus == Catch::Approx(1.0).margin(1e-13));
    CHECK(f.theta == Catch::Approx(std::log(1.0 + std::sqrt(2.0))).margin(1e-14));
    CHECK(close(f.eps, 7.0 * e1 + 4.0 * e2 + 8.0 * e3, 1e-13));
    CHECK(epsilon_class(f.eps) == EpsilonClass::E1);
}

TEST_CASE("polar form of the S2 worked value") {
    const auto f = std::get<Circular>(polar(a_s2));
    CHECK(f.modulus == std::sqrt(2.0));
    CHECK(f.theta == Catch::Approx(std::atan2(1.0, 1.0)).margin(1e-15));
    CHECK(f.eps == -e3);
    CHECK(epsilon_class(f.eps) == EpsilonClass::EMinus1);
}

TEST_CASE("polar form of the S3 worked value") {
    const auto f = std::get<HyperbolicSinh>(polar(a_s3));
    CHECK(f.modulus == 1.0);
    CHECK(f.theta == Catch::Approx(std::log(1.0 + std::sqrt(2.0))).margin(1e-14));
    CHECK(close(f.eps, (e1 - e2) / std::sqrt(2.0), 1e-14));
    CHECK(epsilon_class(f.eps) == EpsilonClass::E1);
}

TEST_CASE("polar form with negative scalar part in S1") {
    const auto f = std::get<HyperbolicCosh>(polar(-a_s1));
    CHECK(f.sign == -1.0);
    CHECK(close(reconstruct(f), -a_s1, 1e-12));
}

TEST_CASE("parabolic polar forms") {
    const auto f4 = std::get<Parabolic>(polar(a_s4));
    CHECK(f4.sector == SectorLabel::S4Only);
    CHECK(f4.scalar == 2.0);
    CHECK(reconstruct(PolarForm{f4}) == a_s4);

    const auto f5 = std::get<Parabolic>(polar(a_s5));
    CHECK(f5.sector == SectorLabel::S5Only);

    const auto f0 = std::get<Parabolic>(polar(e1 + e3));
    CHECK(f0.sector == SectorLabel::NullImaginary);
    CHECK(f0.scalar == 0.0);
}

TEST_CASE("polar of zero throws") {
    CHECK_THROWS_AS(polar(Multivector{}), ZeroElementError);
}

TEST_CASE("reconstruct examples") {
    CHECK(reconstruct(HyperbolicCosh{1.0, 1.0, 0.0, e1}) == Multivector{1.0});
    CHECK(close(reconstruct(Circular{std::sqrt(2.0), std::atan2(1.0, 1.0), -e3}), 1.0 - e3,
                1e-15));
    CHECK(reconstruct(HyperbolicSinh{1.0, 0.0, e1}) == e1);
}

TEST_CASE("polar round-trips across the strict sectors") {
    SplitMix64 rng{47};
    const SectorLabel labels[] = {SectorLabel::S1, SectorLabel::S2, SectorLabel::S3};
    for (const SectorLabel label : labels) {
        for (int i = 0; i < 300; ++i) {
            const Multivector a = sample_in_sector(label, rng.next());
            const PolarForm form = polar(a);
            CHECK(test_support::coeff_close(reconstruct(form), a, 1e-10));
        }
    }
    // parabolic sectors reconstruct exactly
    for (const SectorLabel label :
         {SectorLabel::S4Only, SectorLabel::S5Only, SectorLabel::NullImaginary}) {
        for (int i = 0; i < 100; ++i) {
            const Multivector a = sample_in_sector(label, rng.next());
            CHECK(reconstruct(polar(a)) == a);
        }
    }
}

TEST_CASE("polar eps matches its declared class") {
    SplitMix64 rng{53};
    for (int i = 0; i < 200; ++i) {
        const auto f1 = std::get<HyperbolicCosh>(polar(sample_in_sector(SectorLabel::S1, rng.next())));
        CHECK(epsilon_class(f1.eps) == EpsilonClass::E1);
        const auto f2 = std::get<Circular>(polar(sample_in_sector(SectorLabel::S2, rng.next())));
        CHECK(epsilon_class(f2.eps) == EpsilonClass::EMinus1);
        CHECK(f2.theta > 0.0);
        CHECK(f2.theta < 3.14159265358979324);
        const auto f3 = std::get<HyperbolicSinh>(polar(sample_in_sector(SectorLabel::S3, rng.next())));
        CHECK(epsilon_class(f3.eps) == EpsilonClass::E1);
    }
}
