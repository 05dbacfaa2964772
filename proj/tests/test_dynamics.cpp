#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "micz/dynamics.hpp"
#include "micz/orbit_params.hpp"
#include "micz/rng.hpp"
#include "micz/verify.hpp"

using namespace micz;

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

double max_comp(const Vec3& v)
{
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

} // namespace

TEST_CASE("monopole field falls off as 1/r^2 along the radius")
{
    CHECK(norm3(magnetic_field({1, 0, 0}, 1.0) - Vec3{1, 0, 0}) == 0.0);
    CHECK(norm3(magnetic_field({2, 0, 0}, 1.0) - Vec3{0.25, 0, 0}) == 0.0);
    CHECK(norm3(magnetic_field({0.3, -2, 0.9}, 0.0)) == 0.0);
    CHECK_THROWS_AS((void)magnetic_field({0, 0, 0}, 1.0), MiczError);
}

TEST_CASE("acceleration combines the Lorentz force with the radial terms")
{
    // Kepler circular: pure centripetal pull
    CHECK(norm3(acceleration({1, 0, 0}, {0, 1, 0}, 0.0) - Vec3{-1, 0, 0}) < 1e-15);
    // at r = 1 and mu = 1 the radial terms cancel exactly
    CHECK(norm3(acceleration({1, 0, 0}, {0, 0, 0}, 1.0)) == 0.0);
    // magnetic deflection only: -v x B = (0, 0, 1)
    CHECK(norm3(acceleration({1, 0, 0}, {0, 1, 0}, 1.0) - Vec3{0, 0, 1}) < 1e-15);
}

TEST_CASE("conserved quantities at hand-checked states")
{
    const PhaseState kepler{0, {1, 0, 0}, {0, 1, 0}, 0};
    CHECK(norm3(angular_momentum(kepler) - Vec3{0, 0, 1}) == 0.0);
    CHECK(norm3(lenz_vector(kepler)) == 0.0);
    CHECK(energy(kepler) == doctest::Approx(-0.5).epsilon(1e-15));

    const PhaseState charged{0, {1, 0, 0}, {0, 1, 0}, 1};
    CHECK(norm3(angular_momentum(charged) - Vec3{1, 0, 1}) == 0.0);
    CHECK(norm3(lenz_vector(charged) - Vec3{0, 0, 1}) == 0.0);
    CHECK(dot3(angular_momentum(charged), lenz_vector(charged)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy(charged) == doctest::Approx(0.0).epsilon(1e-15));

    const PhaseState rest{0, {2, 0, 0}, {0, 0, 0}, 0};
    CHECK(energy(rest) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("synthesis reproduces the axis circle exactly")
{
    const PhaseState s = synthesize_initial_state({{0, 0, 0}, {0, 0, 1}});
    CHECK(norm3(s.q - Vec3{1, 0, 0}) < 1e-15);
    CHECK(norm3(s.v - Vec3{0, 1, 0}) < 1e-15);
    CHECK(s.mu == 0.0);
}

TEST_CASE("synthesis postcondition: kinematic invariants match the inputs")
{
    Rng rng(2024);
    for (int i = 0; i < 300; ++i) {
        const EuclideanOrbitParams p = verify::random_params(rng);
        const PhaseState s = synthesize_initial_state(p);
        CHECK(max_comp(angular_momentum(s) - p.L) < 1e-10);
        CHECK(max_comp(lenz_vector(s) - p.A) < 1e-10);
        CHECK(std::abs(s.mu - magnetic_charge(p)) < 1e-12);
        // pericenter start: radial velocity zero
        CHECK(std::abs(dot3(s.q, s.v)) < 1e-10 * norm3(s.q) * norm3(s.v));
    }
}

TEST_CASE("unit circle closes after one period")
{
    const PhaseState s0{0, {1, 0, 0}, {0, 1, 0}, 0};
    const Trajectory tr = integrate(s0, kTwoPi);
    const PhaseState& sf = tr.samples.back();
    CHECK(sf.t == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(norm3(sf.q - s0.q) < 1e-6);
    CHECK(norm3(sf.v - s0.v) < 1e-6);

    const DriftReport dr = drift_report(tr);
    CHECK(dr.max_dL < 1e-8);
    CHECK(dr.max_dA < 1e-8);
    CHECK(dr.max_dE < 1e-8);

    for (std::size_t i = 1; i < tr.samples.size(); ++i)
        CHECK(tr.samples[i].t > tr.samples[i - 1].t);
}

TEST_CASE("zero-energy charged orbit escapes with conserved energy")
{
    const PhaseState s0{0, {1, 0, 0}, {0, 1, 0}, 1}; // E = 0 exactly
    const Trajectory tr = integrate(s0, 10.0);
    CHECK(drift_report(tr).max_dE < 1e-8);
    // late-time radius increases monotonically
    const std::size_t n = tr.samples.size();
    for (std::size_t i = n / 2; i + 1 < n; ++i)
        CHECK(norm3(tr.samples[i + 1].q) > norm3(tr.samples[i].q));
}

TEST_CASE("drift report is zero on a single sample and grows with step size")
{
    const PhaseState s0{0, {1, 0, 0}, {0, 1, 0}, 0};
    Trajectory single;
    single.samples.push_back(s0);
    const DriftReport z = drift_report(single);
    CHECK(z.max_dL == 0.0);
    CHECK(z.max_dA == 0.0);
    CHECK(z.max_dE == 0.0);

    IntegratorConfig coarse;
    coarse.fixed_step = 0.1;
    IntegratorConfig fine;
    fine.fixed_step = 0.02;
    const double d_coarse = drift_report(integrate(s0, kTwoPi, coarse)).max_dE;
    const double d_fine = drift_report(integrate(s0, kTwoPi, fine)).max_dE;
    CHECK(d_coarse > d_fine);
    // fifth-order method: 5x finer steps should gain far more than 100x
    CHECK(d_coarse / d_fine > 100.0);
}

TEST_CASE("radial plunge trips the collision guard")
{
    const PhaseState s0{0, {1, 0, 0}, {-1.5, 0, 0}, 0};
    try {
        (void)integrate(s0, 10.0);
        FAIL("expected NearCollision");
    } catch (const MiczError& e) {
        CHECK(e.code() == ErrorCode::NearCollision);
    }
}

TEST_CASE("step budget and argument validation")
{
    const PhaseState s0{0, {1, 0, 0}, {0, 1, 0}, 0};
    IntegratorConfig tiny;
    tiny.max_steps = 10;
    try {
        (void)integrate(s0, 50.0, tiny);
        FAIL("expected StepLimitExceeded");
    } catch (const MiczError& e) {
        CHECK(e.code() == ErrorCode::StepLimitExceeded);
    }
    CHECK_THROWS_AS((void)integrate(s0, 0.0), MiczError);
    CHECK_THROWS_AS((void)integrate(PhaseState{0, {0, 0, 0}, {0, 1, 0}, 0}, 1.0),
                    MiczError);
}

TEST_CASE("conservation along random orbits of every class")
{
    Rng rng(9001);
    const OrbitClass classes[3] = {OrbitClass::Elliptic, OrbitClass::Parabolic,
                                   OrbitClass::Hyperbolic};
    for (int i = 0; i < 9; ++i) {
        const EuclideanOrbitParams p = verify::random_params_of_class(rng, classes[i % 3]);
        const Trajectory tr = integrate(synthesize_initial_state(p), 20.0);
        const DriftReport dr = drift_report(tr);
        CHECK(dr.max_dL < 1e-6);
        CHECK(dr.max_dA < 1e-6);
        CHECK(dr.max_dE < 1e-6);
        for (const auto& s : tr.samples)
            CHECK(std::abs(dot3(angular_momentum(s), lenz_vector(s)) - s.mu) < 1e-8);
    }
}
