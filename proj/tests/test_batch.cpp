#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "micz/batch.hpp"
#include "micz/orbit_params.hpp"
#include "micz/rng.hpp"
#include "micz/verify.hpp"

using namespace micz;

namespace {

batch::EuclideanBatch make_batch(std::uint64_t seed, std::size_t n,
                                 std::vector<EuclideanOrbitParams>* keep = nullptr)
{
    Rng rng(seed);
    batch::EuclideanBatch b;
    for (std::size_t i = 0; i < n; ++i) {
        const EuclideanOrbitParams p = verify::random_params(rng);
        if (keep)
            keep->push_back(p);
        b.push_back(p.A.x, p.A.y, p.A.z, p.L.x, p.L.y, p.L.z);
    }
    return b;
}

bool identical(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_CASE("scalar sweep reproduces the library's invariants")
{
    std::vector<EuclideanOrbitParams> params;
    const batch::EuclideanBatch b = make_batch(61, 512, &params);
    const batch::SweepResults r = batch::invariant_sweep(b, batch::Isa::Scalar);

    for (std::size_t i = 0; i < params.size(); ++i) {
        const double scale =
            std::max(1.0, std::max(norm3(params[i].A), norm3(params[i].L)));
        CHECK(r.roundtrip[i] / scale < 1e-12);
        CHECK(r.l_norm[i] < 1e-12);
        CHECK(r.a_dot_l[i] < 1e-12);
        CHECK(r.a0[i] > 0.0);
        const double e = energy_euclidean(params[i]);
        CHECK(r.energy_gap[i] < 1e-12 * (1.0 + std::abs(e)));
        const double mu = magnetic_charge(params[i]);
        const double m = dot3(params[i].L, params[i].L) - mu * mu;
        const double rhs = m * (1.0 - dot3(params[i].A, params[i].A));
        CHECK(r.ecc_identity[i] < 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("lane outputs agree with scalar recomputation through the library")
{
    std::vector<EuclideanOrbitParams> params;
    const batch::EuclideanBatch b = make_batch(67, 64, &params);
    const batch::SweepResults r = batch::invariant_sweep(b, batch::Isa::Scalar);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const MinkowskiOrbitParams m = to_minkowski(params[i]);
        CHECK(std::abs(r.a0[i] - m.a.x0) < 1e-12 * m.a.x0);
        CHECK(std::abs(r.a_dot_l[i] - std::abs(mdot(m.a, m.l))) < 1e-13);
    }
}

TEST_CASE("SIMD kernel is bit-identical to the scalar kernel")
{
    if (!batch::isa_available(batch::Isa::Avx2)) {
        MESSAGE("AVX2 unavailable on this host; dispatch covered by scalar path");
        CHECK(batch::active_isa() == batch::Isa::Scalar);
        return;
    }
    // 1003 lanes exercises both the vector body and the scalar tail
    const batch::EuclideanBatch b = make_batch(71, 1003);
    const batch::SweepResults s = batch::invariant_sweep(b, batch::Isa::Scalar);
    const batch::SweepResults v = batch::invariant_sweep(b, batch::Isa::Avx2);
    CHECK(identical(s.roundtrip, v.roundtrip));
    CHECK(identical(s.l_norm, v.l_norm));
    CHECK(identical(s.a_dot_l, v.a_dot_l));
    CHECK(identical(s.a0, v.a0));
    CHECK(identical(s.energy_gap, v.energy_gap));
    CHECK(identical(s.ecc_identity, v.ecc_identity));
}

TEST_CASE("runtime dispatch picks an available ISA and empty batches are fine")
{
    CHECK(batch::isa_available(batch::active_isa()));
    const batch::EuclideanBatch empty;
    const batch::SweepResults r = batch::invariant_sweep(empty);
    CHECK(r.roundtrip.empty());
}

TEST_CASE("invalid lanes surface as non-finite residuals instead of throwing")
{
    batch::EuclideanBatch b;
    b.push_back(0, 0, 1, 0, 0, 1); // colliding: L^2 = (L.A)^2
    const batch::SweepResults r = batch::invariant_sweep(b, batch::Isa::Scalar);
    CHECK_FALSE(std::isfinite(r.roundtrip[0]));
}
